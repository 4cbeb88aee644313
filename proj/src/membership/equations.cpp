#include <array>

#include "levelone/error.hpp"
#include "sweep.hpp"

namespace levelone {

  namespace {
    struct Name {
      Equation         equation;
      std::string_view text;
    };
    constexpr std::array<Name, 8> kNames = {{{Equation::polc, "POLC"},
                                             {Equation::polg, "POLG"},
                                             {Equation::polgp, "POLGP"},
                                             {Equation::gone, "GONE"},
                                             {Equation::wgone, "WGONE"},
                                             {Equation::simon, "SIMON"},
                                             {Equation::knast, "KNAST"},
                                             {Equation::grbpol, "GRBPOL"}}};

    Element need(std::optional<Element> const& x, char const* name, std::size_t n) {
      if (!x || *x >= n) {
        throw ValidationError(std::string("tuple is missing a valid '") + name + "'");
      }
      return *x;
    }
  }  // namespace

  std::string_view to_string(Equation equation) {
    for (auto const& n : kNames) {
      if (n.equation == equation) {
        return n.text;
      }
    }
    return "?";
  }

  std::optional<Equation> equation_from_string(std::string_view name) {
    for (auto const& n : kNames) {
      if (n.text == name) {
        return n.equation;
      }
    }
    return std::nullopt;
  }

  bool is_order_equation(Equation equation) {
    return equation == Equation::polc || equation == Equation::polg
           || equation == Equation::polgp;
  }

  Sides evaluate_sides(SyntacticMorphism const& m, Equation equation, Violation const& v) {
    std::size_t const n   = m.size();
    auto              mul = [&](Element x, Element y) { return m.multiply(x, y); };
    switch (equation) {
      case Equation::polc: {
        Element s = need(v.s, "s", n), t = need(v.t, "t", n);
        Element w = m.omega(s);
        return {m.omega_plus(s), mul(mul(w, t), w)};
      }
      case Equation::polg: {
        Element s = need(v.s, "s", n);
        return {m.identity(), s};
      }
      case Equation::polgp: {
        Element e = need(v.e, "e", n), s = need(v.s, "s", n);
        return {e, mul(mul(e, s), e)};
      }
      case Equation::gone: {
        Element q = need(v.q, "q", n), r = need(v.r, "r", n);
        Element s = need(v.s, "s", n), t = need(v.t, "t", n);
        Element x  = m.omega(mul(q, r));
        Element st = mul(s, t);
        return {mul(x, m.omega_plus(st)), mul(mul(mul(x, q), t), m.omega(st))};
      }
      case Equation::wgone:
      case Equation::knast: {
        Element q = need(v.q, "q", n), r = need(v.r, "r", n);
        Element s = need(v.s, "s", n), t = need(v.t, "t", n);
        Element e = need(v.e, "e", n), f = need(v.f, "f", n);
        Element x     = m.omega(mul(mul(mul(mul(e, q), f), r), e));
        Element esfte = mul(mul(mul(mul(e, s), f), t), e);
        Element y     = m.omega(esfte);
        Element left  = equation == Equation::wgone ? m.omega_plus(esfte) : y;
        return {mul(x, left), mul(mul(mul(mul(x, q), f), t), y)};
      }
      case Equation::simon: {
        Element s = need(v.s, "s", n), t = need(v.t, "t", n);
        Element u = m.omega(mul(s, t));
        if (mul(u, s) != u) {
          return {mul(u, s), u};
        }
        return {mul(t, u), u};
      }
      case Equation::grbpol: {
        Element e = need(v.e, "e", n), f = need(v.f, "f", n);
        return {m.omega(mul(e, f)), m.omega(mul(f, e))};
      }
    }
    throw ValidationError("unknown equation");
  }

  bool reproduces(Verdict const& verdict, SyntacticMorphism const& m, OrderRelation const* order) {
    if (verdict.member) {
      return !verdict.violation.has_value();
    }
    if (!verdict.violation) {
      return false;
    }
    Violation const& v = *verdict.violation;
    Sides            sides;
    try {
      sides = evaluate_sides(m, verdict.equation, v);
    } catch (ValidationError const&) {
      return false;
    }
    if (sides.lhs != v.lhs || sides.rhs != v.rhs) {
      return false;
    }
    for (auto const& [name, word] : v.words) {
      std::optional<Element> bound;
      switch (name.size() == 1 ? name[0] : '?') {
        case 'q': bound = v.q; break;
        case 'r': bound = v.r; break;
        case 's': bound = v.s; break;
        case 't': bound = v.t; break;
        case 'e': bound = v.e; break;
        case 'f': bound = v.f; break;
        default: return false;
      }
      if (!bound || m.evaluate(word) != *bound) {
        return false;
      }
    }
    if (is_order_equation(verdict.equation)) {
      return order != nullptr && !(*order)(sides.lhs, sides.rhs);
    }
    return sides.lhs != sides.rhs;
  }

  namespace detail {
    void attach_words(SyntacticMorphism const& m, Violation& v) {
      auto put = [&](char const* name, std::optional<Element> const& x) {
        if (x) {
          v.words[name] = m.witness(*x);
        }
      };
      put("q", v.q);
      put("r", v.r);
      put("s", v.s);
      put("t", v.t);
      put("e", v.e);
      put("f", v.f);
    }
  }  // namespace detail

}  // namespace levelone

#include <chrono>
#include <sstream>

#include "levelone/error.hpp"
#include "levelone/membership.hpp"

namespace levelone {

  BasisSpec BasisSpec::parse(std::string_view text) {
    BasisSpec out;
    if (text == "st") {
      out.kind = BasisKind::st;
    } else if (text == "mod") {
      out.kind = BasisKind::mod;
    } else if (text == "amt") {
      out.kind = BasisKind::amt;
    } else if (text == "gr") {
      out.kind = BasisKind::gr;
    } else if (text.starts_with("group:") && text.size() > 6) {
      std::string path(text.substr(6));
      out.kind  = BasisKind::custom;
      out.group = load_group(path);
    } else {
      throw UsageError("unknown basis '" + std::string(text)
                       + "' (expected st, mod, amt, gr or group:<file>)");
    }
    return out;
  }

  std::string BasisSpec::label() const {
    switch (kind) {
      case BasisKind::st: return "ST";
      case BasisKind::mod: return "MOD";
      case BasisKind::amt: return "AMT";
      case BasisKind::gr: return "GR";
      case BasisKind::custom: return "CUSTOM(" + (group ? group->id : std::string()) + ")";
    }
    return "?";
  }

  std::string_view to_string(Level level) {
    return level == Level::pol ? "POL" : "BPOL";
  }

  Level level_from_string(std::string_view text) {
    if (text == "pol" || text == "POL") {
      return Level::pol;
    }
    if (text == "bpol" || text == "BPOL") {
      return Level::bpol;
    }
    throw UsageError("unknown level '" + std::string(text) + "' (expected pol or bpol)");
  }

  std::string class_label(BasisSpec const& basis, Level level, bool plus) {
    return std::string(level == Level::pol ? "Pol(" : "BPol(") + basis.label() + (plus ? "+" : "")
           + ")";
  }

  std::string class_nickname(BasisKind basis, Level level, bool plus) {
    bool const b = level == Level::bpol;
    switch (basis) {
      case BasisKind::st:
        if (b) {
          return plus ? "dot-depth one" : "piecewise testable";
        }
        return plus ? "Σ1(<,+1)" : "Σ1(<)";
      case BasisKind::mod:
        if (b) {
          return plus ? "BΣ1(<,+1,MOD)" : "BΣ1(<,MOD)";
        }
        return plus ? "Σ1(<,+1,MOD)" : "Σ1(<,MOD)";
      default: return {};
    }
  }

  int Report::exit_code() const noexcept {
    if (!certified) {
      return 3;
    }
    return verdict.member ? 0 : 1;
  }

  namespace {

    PairRelation pairs_for(SyntacticMorphism const& m,
                           BasisSpec const&         basis,
                           Limits const&            limits) {
      switch (basis.kind) {
        case BasisKind::st: return st_pairs(m);
        case BasisKind::mod: return mod_pairs(m, limits);
        case BasisKind::amt: return amt_pairs(m, limits);
        case BasisKind::custom:
          if (!basis.group) {
            throw UsageError("custom basis without a group");
          }
          return group_morphism_pairs(m, *basis.group, limits);
        case BasisKind::gr: break;
      }
      throw UsageError("unsupported: GR-pairs not computable in this tool");
    }

  }  // namespace

  Report decide(Dfa const&           dfa,
                std::string          description,
                BasisSpec const&     basis,
                Level                level,
                bool                 plus,
                DecideOptions const& options) {
    if (basis.kind == BasisKind::gr && (level == Level::pol || plus)) {
      throw UsageError("unsupported: GR-pairs not computable in this tool");
    }
    auto const start = std::chrono::steady_clock::now();

    Report report;
    report.input          = std::move(description);
    report.alphabet       = dfa.alphabet().symbols();
    report.basis          = basis.label();
    report.level          = level;
    report.plus           = plus;
    report.class_label    = class_label(basis, level, plus);
    report.class_nickname = class_nickname(basis.kind, level, plus);

    Dfa const minimal = minimize(dfa);
    auto      m       = transition_monoid(minimal, options.limits, options.exec);
    report.dfa_states  = minimal.state_count();
    report.monoid_size = m.size();

    if (basis.kind == BasisKind::gr) {
      report.verdict = check_specialized(m, Specialized::grbpol, options.exec);
    } else {
      PairRelation pairs = pairs_for(m, basis, options.limits);
      report.pair_count   = pairs.count();
      report.pair_modulus = pairs.modulus();
      report.certified    = pairs.certified();
      if (level == Level::pol) {
        OrderRelation order = syntactic_preorder(m, options.exec);
        report.verdict = plus ? check_pol_group_plus(m, order, pairs)
                              : check_pol_group(m, order, pairs);
      } else {
        report.verdict = plus ? check_bpol_group_plus(m, pairs, options.exec)
                              : check_bpol_group(m, pairs, options.exec);
      }
    }

    auto const stop   = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
  }

  Report decide(Pattern const&       pattern,
                std::string          description,
                BasisSpec const&     basis,
                Level                level,
                bool                 plus,
                DecideOptions const& options) {
    if (basis.kind == BasisKind::gr && (level == Level::pol || plus)) {
      throw UsageError("unsupported: GR-pairs not computable in this tool");
    }
    return decide(compile_dfa(pattern, options.limits), std::move(description), basis, level, plus,
                  options);
  }

  std::string summary(Report const& report) {
    std::ostringstream out;
    if (report.exit_code() == 3) {
      out << "CONDITIONALLY ";
    }
    out << (report.member() ? "a member of " : "NOT a member of ") << report.class_label;
    if (!report.class_nickname.empty()) {
      out << " (" << report.class_nickname << ")";
    }
    out << "\n";
    out << "  minimal DFA: " << report.dfa_states << " states, syntactic monoid: "
        << report.monoid_size << " elements\n";
    if (report.basis != "GR") {
      out << "  " << report.basis << "-pairs: " << report.pair_count;
      if (report.pair_modulus != 0) {
        out << " (Parikh modulus " << report.pair_modulus << ")";
      }
      if (!report.certified) {
        out << " [UNCERTIFIED: verdict is conditional]";
      }
      out << "\n";
    }
    out << "  equation: " << to_string(report.verdict.equation);
    if (auto const& v = report.verdict.violation) {
      out << " fails at";
      auto show = [&](char const* name, std::optional<Element> const& x) {
        if (x) {
          auto it = v->words.find(name);
          out << " " << name << "=" << *x;
          if (it != v->words.end()) {
            out << " [" << (it->second.empty() ? "ε" : it->second) << "]";
          }
        }
      };
      show("q", v->q);
      show("r", v->r);
      show("s", v->s);
      show("t", v->t);
      show("e", v->e);
      show("f", v->f);
      out << "; lhs=" << v->lhs << (is_order_equation(report.verdict.equation) ? " is not <= " : " != ")
          << "rhs=" << v->rhs;
    } else {
      out << " holds";
    }
    out << "\n";
    return out.str();
  }

}  // namespace levelone

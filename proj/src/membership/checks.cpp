#include <unordered_set>
#include <utility>
#include <vector>

#include "sweep.hpp"

namespace levelone {

  namespace {

    using detail::Cursor;
    using detail::Sweep;
    using PairList = std::vector<std::pair<Element, Element>>;

    Verdict verdict_of(SyntacticMorphism const& m, Equation equation, std::optional<Violation> v) {
      Verdict out;
      out.equation = equation;
      out.member   = !v.has_value();
      if (v) {
        detail::attach_words(m, *v);
        out.violation = std::move(v);
      }
      return out;
    }

    // Distinct values of `key` over `domain`, keeping the first index of each.
    // Used to skip inner iterations whose outcome is already known.
    class FirstSeen {
     public:
      explicit FirstSeen(std::size_t n) : stamp_(n, 0) {}
      void reset() {
        ++epoch_;
      }
      bool insert(Element x) {
        if (stamp_[x] == epoch_) {
          return false;
        }
        stamp_[x] = epoch_;
        return true;
      }

     private:
      std::vector<std::uint32_t> stamp_;
      std::uint32_t              epoch_ = 1;
    };

    std::uint64_t pack(Element a, Element b) {
      return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    // Shared inner loop: lhs = X[r] * left[t], rhs = X[r] * right[t], over r
    // in rs and t in ts, first violation in (r, t) order.
    class Inner {
     public:
      explicit Inner(std::size_t n) : x_(n), left_(n), right_(n), seen_(n) {}

      std::vector<Element>& x() {
        return x_;
      }
      std::vector<Element>& left() {
        return left_;
      }
      std::vector<Element>& right() {
        return right_;
      }

      struct Hit {
        Element r, t, lhs, rhs;
      };

      std::optional<Hit> find(SyntacticMorphism const&   m,
                              std::vector<Element> const& rs,
                              std::vector<Element> const& ts) {
        reps_.clear();
        keys_.clear();
        for (Element t : ts) {
          if (left_[t] != right_[t] && keys_.insert(pack(left_[t], right_[t])).second) {
            reps_.push_back(t);
          }
        }
        if (reps_.empty()) {
          return std::nullopt;
        }
        seen_.reset();
        for (Element r : rs) {
          Element const x = x_[r];
          if (!seen_.insert(x)) {
            continue;
          }
          for (Element t : reps_) {
            Element lhs = m.multiply(x, left_[t]);
            Element rhs = m.multiply(x, right_[t]);
            if (lhs != rhs) {
              return Hit{r, t, lhs, rhs};
            }
          }
        }
        return std::nullopt;
      }

     private:
      std::vector<Element>              x_, left_, right_;
      std::vector<Element>              reps_;
      std::unordered_set<std::uint64_t> keys_;
      FirstSeen                         seen_;
    };

    std::vector<Element> all_elements(std::size_t n) {
      std::vector<Element> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<Element>(i);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // (qr)^w (st)^(w+1) = (qr)^w q t (st)^w
    ////////////////////////////////////////////////////////////////////////

    class GoneSweep : public Sweep {
     public:
      GoneSweep(SyntacticMorphism const& m, PairList outer)
          : m_(m), outer_(std::move(outer)), domain_(all_elements(m.size())) {}

      std::size_t outer_count() const override {
        return outer_.size();
      }

      std::unique_ptr<Cursor> cursor() const override {
        return std::make_unique<C>(*this);
      }

     private:
      struct C : Cursor {
        explicit C(GoneSweep const& s) : sweep(s), inner(s.m_.size()) {}

        std::optional<Violation> scan(std::size_t k) override {
          auto const& m    = sweep.m_;
          auto [q, s]      = sweep.outer_[k];
          for (Element r : sweep.domain_) {
            inner.x()[r] = m.omega(m.multiply(q, r));
          }
          for (Element t : sweep.domain_) {
            Element st      = m.multiply(s, t);
            inner.left()[t]  = m.omega_plus(st);
            inner.right()[t] = m.multiply(m.multiply(q, t), m.omega(st));
          }
          auto hit = inner.find(m, sweep.domain_, sweep.domain_);
          if (!hit) {
            return std::nullopt;
          }
          Violation v;
          v.q   = q;
          v.r   = hit->r;
          v.s   = s;
          v.t   = hit->t;
          v.lhs = hit->lhs;
          v.rhs = hit->rhs;
          return v;
        }

        GoneSweep const& sweep;
        Inner            inner;
      };

      SyntacticMorphism const& m_;
      PairList                 outer_;
      std::vector<Element>     domain_;
    };

    ////////////////////////////////////////////////////////////////////////
    // (eqfre)^w (esfte)^(w+1) = (eqfre)^w q f t (esfte)^w   (WGONE)
    // (eqfre)^w (esfte)^w     = (eqfre)^w q f t (esfte)^w   (KNAST)
    //
    // (eqfre)^w ends with e, so q f t may be replaced by (eqf) t; the inner
    // check then only depends on (e, eqf, esf), which is memoized.
    ////////////////////////////////////////////////////////////////////////

    class SandwichSweep : public Sweep {
     public:
      SandwichSweep(SyntacticMorphism const& m,
                    PairList                 outer,
                    std::vector<Element>     domain,
                    bool                     plus_one)
          : m_(m), outer_(std::move(outer)), domain_(std::move(domain)), plus_one_(plus_one) {}

      std::size_t outer_count() const override {
        return outer_.size();
      }

      std::unique_ptr<Cursor> cursor() const override {
        return std::make_unique<C>(*this);
      }

     private:
      struct C : Cursor {
        explicit C(SandwichSweep const& s) : sweep(s), inner(s.m_.size()) {}

        std::optional<Violation> scan(std::size_t k) override {
          auto const& m     = sweep.m_;
          auto const& idems = m.idempotents_of_nonempty_image();
          auto [q, s]       = sweep.outer_[k];
          for (Element e : idems) {
            Element const eq = m.multiply(e, q);
            Element const es = m.multiply(e, s);
            for (Element f : idems) {
              Element const eqf = m.multiply(eq, f);
              Element const esf = m.multiply(es, f);
              Key const     key{e, eqf, esf};
              if (clean.contains(key)) {
                continue;
              }
              for (Element r : sweep.domain_) {
                inner.x()[r] = m.omega(m.multiply(m.multiply(eqf, r), e));
              }
              for (Element t : sweep.domain_) {
                Element esfte    = m.multiply(m.multiply(esf, t), e);
                Element y        = m.omega(esfte);
                inner.left()[t]  = sweep.plus_one_ ? m.multiply(y, esfte) : y;
                inner.right()[t] = m.multiply(m.multiply(eqf, t), y);
              }
              if (auto hit = inner.find(m, sweep.domain_, sweep.domain_)) {
                Violation v;
                v.q   = q;
                v.r   = hit->r;
                v.s   = s;
                v.t   = hit->t;
                v.e   = e;
                v.f   = f;
                v.lhs = hit->lhs;
                v.rhs = hit->rhs;
                return v;
              }
              clean.insert(key);
            }
          }
          return std::nullopt;
        }

        struct Key {
          Element e, eqf, esf;
          bool    operator==(Key const&) const = default;
        };
        struct KeyHash {
          std::size_t operator()(Key const& k) const noexcept {
            std::uint64_t h = k.e;
            h               = h * 0x9E3779B97F4A7C15ULL + k.eqf;
            h               = h * 0x9E3779B97F4A7C15ULL + k.esf;
            return static_cast<std::size_t>(h ^ (h >> 29));
          }
        };

        SandwichSweep const&              sweep;
        Inner                             inner;
        std::unordered_set<Key, KeyHash>  clean;
      };

      SyntacticMorphism const& m_;
      PairList                 outer_;
      std::vector<Element>     domain_;
      bool                     plus_one_;
    };

    ////////////////////////////////////////////////////////////////////////
    // (st)^w s = (st)^w = t (st)^w
    ////////////////////////////////////////////////////////////////////////

    class SimonSweep : public Sweep {
     public:
      explicit SimonSweep(SyntacticMorphism const& m) : m_(m) {}

      std::size_t outer_count() const override {
        return m_.size();
      }

      std::unique_ptr<Cursor> cursor() const override {
        return std::make_unique<C>(m_);
      }

     private:
      struct C : Cursor {
        explicit C(SyntacticMorphism const& m) : m(m) {}

        std::optional<Violation> scan(std::size_t k) override {
          Element const s = static_cast<Element>(k);
          for (Element t = 0; t < m.size(); ++t) {
            Element u = m.omega(m.multiply(s, t));
            Element a = m.multiply(u, s);
            Element b = m.multiply(t, u);
            if (a != u || b != u) {
              Violation v;
              v.s   = s;
              v.t   = t;
              v.lhs = a != u ? a : b;
              v.rhs = u;
              return v;
            }
          }
          return std::nullopt;
        }

        SyntacticMorphism const& m;
      };

      SyntacticMorphism const& m_;
    };

    ////////////////////////////////////////////////////////////////////////
    // (ef)^w = (fe)^w
    ////////////////////////////////////////////////////////////////////////

    class GrSweep : public Sweep {
     public:
      explicit GrSweep(SyntacticMorphism const& m) : m_(m) {}

      std::size_t outer_count() const override {
        return m_.idempotents().size();
      }

      std::unique_ptr<Cursor> cursor() const override {
        return std::make_unique<C>(m_);
      }

     private:
      struct C : Cursor {
        explicit C(SyntacticMorphism const& m) : m(m) {}

        std::optional<Violation> scan(std::size_t k) override {
          auto const&   idems = m.idempotents();
          Element const e     = idems[k];
          for (Element f : idems) {
            Element a = m.omega(m.multiply(e, f));
            Element b = m.omega(m.multiply(f, e));
            if (a != b) {
              Violation v;
              v.e   = e;
              v.f   = f;
              v.lhs = a;
              v.rhs = b;
              return v;
            }
          }
          return std::nullopt;
        }

        SyntacticMorphism const& m;
      };

      SyntacticMorphism const& m_;
    };

    PairList square(std::vector<Element> const& xs) {
      PairList out;
      out.reserve(xs.size() * xs.size());
      for (Element a : xs) {
        for (Element b : xs) {
          out.emplace_back(a, b);
        }
      }
      return out;
    }

  }  // namespace

  Verdict check_pol(SyntacticMorphism const& m, OrderRelation const& order, PairRelation const& pairs) {
    std::optional<Violation> found;
    for (auto [s, t] : pairs.pairs()) {
      Element w   = m.omega(s);
      Element lhs = m.omega_plus(s);
      Element rhs = m.multiply(m.multiply(w, t), w);
      if (!order(lhs, rhs)) {
        Violation v;
        v.s   = s;
        v.t   = t;
        v.lhs = lhs;
        v.rhs = rhs;
        found = v;
        break;
      }
    }
    return verdict_of(m, Equation::polc, std::move(found));
  }

  Verdict check_pol_group(SyntacticMorphism const& m,
                          OrderRelation const&     order,
                          PairRelation const&      pairs) {
    std::optional<Violation> found;
    for (Element s : pairs.right_of(m.identity())) {
      if (!order(m.identity(), s)) {
        Violation v;
        v.s   = s;
        v.lhs = m.identity();
        v.rhs = s;
        found = v;
        break;
      }
    }
    return verdict_of(m, Equation::polg, std::move(found));
  }

  Verdict check_pol_group_plus(SyntacticMorphism const& m,
                               OrderRelation const&     order,
                               PairRelation const&      pairs) {
    std::optional<Violation> found;
    auto const               ones = pairs.right_of(m.identity());
    for (Element e : m.idempotents_of_nonempty_image()) {
      for (Element s : ones) {
        Element ese = m.multiply(m.multiply(e, s), e);
        if (!order(e, ese)) {
          Violation v;
          v.e   = e;
          v.s   = s;
          v.lhs = e;
          v.rhs = ese;
          found = v;
          break;
        }
      }
      if (found) {
        break;
      }
    }
    return verdict_of(m, Equation::polgp, std::move(found));
  }

  Verdict check_bpol_group(SyntacticMorphism const& m, PairRelation const& pairs, Exec exec) {
    GoneSweep sweep(m, pairs.pairs());
    return verdict_of(m, Equation::gone, detail::run(sweep, exec));
  }

  Verdict check_bpol_group_plus(SyntacticMorphism const& m, PairRelation const& pairs, Exec exec) {
    SandwichSweep sweep(m, pairs.pairs(), all_elements(m.size()), true);
    return verdict_of(m, Equation::wgone, detail::run(sweep, exec));
  }

  Verdict check_specialized(SyntacticMorphism const& m, Specialized kind, Exec exec) {
    switch (kind) {
      case Specialized::simon: {
        SimonSweep sweep(m);
        return verdict_of(m, Equation::simon, detail::run(sweep, exec));
      }
      case Specialized::knast: {
        auto          s = m.nonempty_image();
        SandwichSweep sweep(m, square(s), s, false);
        return verdict_of(m, Equation::knast, detail::run(sweep, exec));
      }
      case Specialized::grbpol: {
        GrSweep sweep(m);
        return verdict_of(m, Equation::grbpol, detail::run(sweep, exec));
      }
    }
    return {};
  }

}  // namespace levelone

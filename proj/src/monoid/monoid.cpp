#include "levelone/monoid.hpp"

#include <unordered_map>

#include "kernels.hpp"
#include "levelone/error.hpp"

namespace levelone {

  namespace {

    struct TransformationHash {
      std::size_t operator()(std::vector<State> const& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (State s : v) {
          h = (h ^ s) * 1099511628211ULL;
        }
        return h;
      }
    };

  }  // namespace

  std::vector<Element> SyntacticMorphism::accepting() const {
    std::vector<Element> out;
    for (Element x = 0; x < size(); ++x) {
      if (accepting_[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Element> SyntacticMorphism::nonempty_image() const {
    std::vector<Element> out;
    for (Element x = 0; x < size(); ++x) {
      if (nonempty_[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  Element SyntacticMorphism::evaluate(std::string_view word) const {
    Element x = identity();
    for (char c : word) {
      x = right_letter(x, alphabet().index(c));
    }
    return x;
  }

  SyntacticMorphism transition_monoid(Dfa const& minimal, Limits const& limits, Exec exec) {
    SyntacticMorphism m;
    m.source_             = minimal;
    std::size_t const n_q = minimal.state_count();
    std::size_t const k   = minimal.alphabet().size();

    std::unordered_map<std::vector<State>, Element, TransformationHash> ids;
    std::vector<State>                                                  current(n_q);
    for (State q = 0; q < n_q; ++q) {
      current[q] = q;
    }
    ids.emplace(current, 0);
    m.transformations_ = current;
    m.parent_.push_back(0);
    m.last_letter_.push_back(0);
    m.witness_.emplace_back();

    for (Element x = 0; x < m.witness_.size(); ++x) {
      for (Letter a = 0; a < k; ++a) {
        for (State q = 0; q < n_q; ++q) {
          current[q] = minimal.next(m.transformations_[x * n_q + q], a);
        }
        auto [it, inserted] = ids.emplace(current, static_cast<Element>(m.witness_.size()));
        if (inserted) {
          if (m.witness_.size() >= limits.max_elements) {
            throw BudgetError("transition monoid exceeds the element budget of "
                              + std::to_string(limits.max_elements));
          }
          m.transformations_.insert(m.transformations_.end(), current.begin(), current.end());
          m.parent_.push_back(x);
          m.last_letter_.push_back(a);
          m.witness_.push_back(m.witness_[x] + minimal.alphabet().symbol(a));
        }
        m.right_cayley_.push_back(it->second);
      }
    }

    std::size_t const n = m.witness_.size();
    for (Letter a = 0; a < k; ++a) {
      m.letter_image_.push_back(m.right_cayley_[a]);
    }

    m.table_.assign(n * n, 0);
    detail::TableInput in{n, k, m.right_cayley_, m.parent_, m.last_letter_};
    if (exec == Exec::parallel) {
      detail::fill_table_omp(in, m.table_);
    } else {
      detail::fill_table_serial(in, m.table_);
    }

    m.accepting_.assign(n, false);
    m.nonempty_.assign(n, false);
    for (Element x = 0; x < n; ++x) {
      m.accepting_[x] = minimal.is_final(m.transformations_[x * n_q + minimal.initial()]);
      for (Letter a = 0; a < k; ++a) {
        m.nonempty_[m.right_cayley_[x * k + a]] = true;
      }
    }

    m.omega_.resize(n);
    for (Element x = 0; x < n; ++x) {
      Element p = x;
      while (m.multiply(p, p) != p) {
        p = m.multiply(p, x);
      }
      m.omega_[x] = p;
      if (m.multiply(x, x) == x) {
        m.idempotents_m_.push_back(x);
        if (m.nonempty_[x]) {
          m.idempotents_s_.push_back(x);
        }
      }
    }
    return m;
  }

  std::string OrderRelation::row_bits(Element s) const {
    std::string bits(n_, '0');
    for (Element t = 0; t < n_; ++t) {
      if ((*this)(s, t)) {
        bits[t] = '1';
      }
    }
    return bits;
  }

}  // namespace levelone

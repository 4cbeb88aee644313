#include "kernels.hpp"

namespace levelone {

  namespace {

    // state_leq[p * n + r] iff the language accepted from p is included in
    // the one accepted from r (greatest fixpoint of the local conditions).
    std::vector<std::uint8_t> state_inclusion(Dfa const& dfa) {
      std::size_t const         n = dfa.state_count();
      std::size_t const         k = dfa.alphabet().size();
      std::vector<std::uint8_t> leq(n * n, 0);
      for (State p = 0; p < n; ++p) {
        for (State r = 0; r < n; ++r) {
          leq[p * n + r] = !dfa.is_final(p) || dfa.is_final(r);
        }
      }
      bool changed = true;
      while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p) {
          for (State r = 0; r < n; ++r) {
            if (!leq[p * n + r]) {
              continue;
            }
            for (Letter a = 0; a < k; ++a) {
              if (!leq[dfa.next(p, a) * n + dfa.next(r, a)]) {
                leq[p * n + r] = 0;
                changed        = true;
                break;
              }
            }
          }
        }
      }
      return leq;
    }

  }  // namespace

  OrderRelation syntactic_preorder(SyntacticMorphism const& m, Exec exec) {
    OrderRelation order(m.size());
    auto const    state_leq = state_inclusion(m.source());
    if (exec == Exec::parallel) {
      detail::fill_order_omp(m, state_leq, order);
    } else {
      detail::fill_order_serial(m, state_leq, order);
    }
    return order;
  }

}  // namespace levelone

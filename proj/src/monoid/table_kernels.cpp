#include "kernels.hpp"

namespace levelone::detail {

  namespace {

    inline void fill_row(TableInput const& in, std::span<Element> table, std::size_t x) {
      Element* row = table.data() + x * in.size;
      row[0]       = static_cast<Element>(x);
      for (std::size_t y = 1; y < in.size; ++y) {
        row[y] = in.right_cayley[row[in.parent[y]] * in.letters + in.last_letter[y]];
      }
    }

    inline bool order_cell(SyntacticMorphism const&        m,
                           std::vector<std::uint8_t> const& state_leq,
                           std::size_t                     n_states,
                           Element                         s,
                           Element                         t) {
      auto fs = m.transformation(s);
      auto ft = m.transformation(t);
      for (std::size_t q = 0; q < n_states; ++q) {
        if (!state_leq[fs[q] * n_states + ft[q]]) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  void fill_table_serial(TableInput const& in, std::span<Element> table) {
    for (std::size_t x = 0; x < in.size; ++x) {
      fill_row(in, table, x);
    }
  }

  void fill_table_omp(TableInput const& in, std::span<Element> table) {
    auto const n = static_cast<std::ptrdiff_t>(in.size);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t x = 0; x < n; ++x) {
      fill_row(in, table, static_cast<std::size_t>(x));
    }
  }

  void fill_order_serial(SyntacticMorphism const&        m,
                         std::vector<std::uint8_t> const& state_leq,
                         OrderRelation&                  order) {
    std::size_t const n        = m.size();
    std::size_t const n_states = m.source().state_count();
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) {
        order.set(s, t, order_cell(m, state_leq, n_states, s, t));
      }
    }
  }

  void fill_order_omp(SyntacticMorphism const&        m,
                      std::vector<std::uint8_t> const& state_leq,
                      OrderRelation&                  order) {
    auto const        n        = static_cast<std::ptrdiff_t>(m.size());
    std::size_t const n_states = m.source().state_count();
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t s = 0; s < n; ++s) {
      for (Element t = 0; t < static_cast<Element>(n); ++t) {
        order.set(static_cast<Element>(s), t,
                  order_cell(m, state_leq, n_states, static_cast<Element>(s), t));
      }
    }
  }

}  // namespace levelone::detail

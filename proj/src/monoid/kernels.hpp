#pragma once

#include <span>
#include <vector>

#include "levelone/monoid.hpp"

namespace levelone::detail {

  // Multiplication table from the right Cayley graph: row x is filled by
  // table[x][y] = right_cayley[table[x][parent[y]]][last_letter[y]], which
  // needs parent[y] < y (BFS numbering).
  struct TableInput {
    std::size_t               size;
    std::size_t               letters;
    std::span<Element const>  right_cayley;
    std::span<Element const>  parent;
    std::span<Letter const>   last_letter;
  };

  void fill_table_serial(TableInput const& in, std::span<Element> table);
  void fill_table_omp(TableInput const& in, std::span<Element> table);

  // s <= t iff for every state q, L(s(q)) ⊆ L(t(q)), where state_leq holds
  // the language inclusion between states of the source automaton.
  void fill_order_serial(SyntacticMorphism const&      m,
                         std::vector<std::uint8_t> const& state_leq,
                         OrderRelation&                 order);
  void fill_order_omp(SyntacticMorphism const&      m,
                      std::vector<std::uint8_t> const& state_leq,
                      OrderRelation&                 order);

}  // namespace levelone::detail

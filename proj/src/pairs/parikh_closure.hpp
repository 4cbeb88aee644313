#pragma once

#include <optional>

#include "levelone/limits.hpp"
#include "levelone/pairs.hpp"

namespace levelone::detail {

  // AMT pairs decided exactly: the closure of the Parikh image of each
  // alpha^-1(x) in the profinite integers is a finite union of cosets
  // c + L, one per route through the strongly connected components of the
  // Cayley graph, with L the lattice spanned by the cycles met on the way.
  // Two cosets meet iff the offsets differ by a vector of L1 + L2.
  // Empty when the number of cosets exceeds limits.max_group_nodes.
  std::optional<PairRelation> amt_pairs_exact(SyntacticMorphism const& m, Limits const& limits);

}  // namespace levelone::detail

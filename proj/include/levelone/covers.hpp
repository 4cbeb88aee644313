#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levelone/monoid.hpp"

namespace levelone {

  // L a_1 L a_2 ... a_n L for w = a_1 ... a_n; the language L itself when w
  // is empty. Minimal and canonical.
  Dfa up_arrow(Dfa const& language, std::string_view word, Limits const& limits = {});

  // Words acting as the identity permutation on the minimal automaton of
  // `group_language`. Throws PreconditionError unless that automaton is a
  // permutation automaton.
  Dfa identity_kernel(Dfa const& group_language);

  struct CoverEntry {
    Word base;
    Dfa  language;  // up_arrow(L, base)
  };

  struct CoverResult {
    std::vector<CoverEntry> entries;
    // H is included in the union of the entries.
    bool certified = false;
  };

  // Greedy cover of H by languages up_arrow(L, w), w in H: the shortest word
  // of H not yet covered becomes the next base. Stops uncertified after
  // max_bases entries. Throws PreconditionError unless L is a group language
  // containing the empty word.
  CoverResult pgcov_cover(Dfa const&    cover_target,
                          Dfa const&    group_language,
                          std::size_t   max_bases = 64,
                          Limits const& limits    = {});

  // The union of the entry languages includes H.
  bool covers(CoverResult const& cover, Dfa const& cover_target, Limits const& limits = {});

  // First pair (i, j), i != j, whose base i lies in up_arrow(L', base j) with
  // L' the identity kernel of L; nullopt for an antichain.
  std::optional<std::pair<std::size_t, std::size_t>>
  antichain_violation(CoverResult const& cover, Dfa const& group_language, Limits const& limits = {});

  // w = w_1 ... w_{n+1} with idempotent links e_i in alpha(A+) satisfying
  // alpha(w_i) e_i = alpha(w_i) and e_i alpha(w_{i+1}) = alpha(w_{i+1}).
  struct GuardedDecomposition {
    std::vector<Word>    blocks;
    std::vector<Element> links;

    bool operator==(GuardedDecomposition const&) const = default;
  };

  // Single block when |w| <= |M|^2; otherwise splits off the last |M|^2 + 1
  // letters by pigeonhole (smallest index pair), repeatedly. Throws
  // PreconditionError on the empty word.
  GuardedDecomposition guarded_decomposition(SyntacticMorphism const& m, std::string_view word);

  // Empty when d is a guarded decomposition of w, otherwise what is wrong.
  std::optional<std::string> decomposition_defect(SyntacticMorphism const&    m,
                                                  std::string_view            word,
                                                  GuardedDecomposition const& d);

  std::string decomposition_to_json_text(GuardedDecomposition const& d, bool verified);

}  // namespace levelone

#pragma once

#include <vector>

#include "levelone/dfa.hpp"

namespace levelone::detail {

  // Epsilon-free nondeterministic automaton with a single initial state.
  struct Nfa {
    Alphabet                                       alphabet;
    State                                          initial = 0;
    std::vector<bool>                              final;
    // edges[q][a] = successor list
    std::vector<std::vector<std::vector<State>>>   edges;

    State add_state(bool accepting = false) {
      final.push_back(accepting);
      edges.emplace_back(alphabet.size());
      return static_cast<State>(final.size() - 1);
    }
    void add_edge(State from, Letter a, State to) {
      edges[from][a].push_back(to);
    }
  };

  // Subset construction; the empty subset becomes the sink. States are
  // numbered in discovery order (BFS over the sorted alphabet).
  Dfa determinize(Nfa const& nfa, Limits const& limits);

}  // namespace levelone::detail

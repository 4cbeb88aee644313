#include "nfa.hpp"

#include <algorithm>
#include <map>

#include "levelone/error.hpp"

namespace levelone::detail {

  Dfa determinize(Nfa const& nfa, Limits const& limits) {
    std::size_t const                   k = nfa.alphabet.size();
    std::map<std::vector<State>, State> ids;
    std::vector<std::vector<State>>     subsets;
    std::vector<State>                  delta;
    std::vector<State>                  finals;

    auto intern = [&](std::vector<State> subset) -> State {
      auto it = ids.find(subset);
      if (it != ids.end()) {
        return it->second;
      }
      if (subsets.size() >= limits.max_states) {
        throw BudgetError("subset construction exceeds the state budget of "
                          + std::to_string(limits.max_states));
      }
      auto id = static_cast<State>(subsets.size());
      ids.emplace(subset, id);
      subsets.push_back(std::move(subset));
      return id;
    };

    intern({nfa.initial});
    std::vector<bool> seen(nfa.final.size(), false);
    for (std::size_t current = 0; current < subsets.size(); ++current) {
      std::vector<State> const subset = subsets[current];
      if (std::any_of(subset.begin(), subset.end(),
                      [&](State q) { return nfa.final[q]; })) {
        finals.push_back(static_cast<State>(current));
      }
      for (Letter a = 0; a < k; ++a) {
        std::vector<State> target;
        for (State q : subset) {
          for (State r : nfa.edges[q][a]) {
            if (!seen[r]) {
              seen[r] = true;
              target.push_back(r);
            }
          }
        }
        for (State r : target) {
          seen[r] = false;
        }
        std::sort(target.begin(), target.end());
        delta.push_back(intern(std::move(target)));
      }
    }
    return Dfa(nfa.alphabet, subsets.size(), 0, std::move(finals),
               std::move(delta));
  }

}  // namespace levelone::detail

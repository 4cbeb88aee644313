#include <map>

#include "levelone/monoid.hpp"

namespace levelone {

  std::vector<Element> const& StableInfo::at(std::size_t i) const {
    if (i < sets.size()) {
      return sets[i];
    }
    return sets[threshold + (i - threshold) % period];
  }

  StableInfo stable_sequence(SyntacticMorphism const& m) {
    StableInfo                                    info;
    std::map<std::vector<Element>, std::size_t>   seen;
    std::vector<Element>                          current{m.identity()};
    std::vector<bool>                             member(m.size());
    while (true) {
      auto [it, inserted] = seen.emplace(current, info.sets.size());
      if (!inserted) {
        info.threshold = it->second;
        info.period    = info.sets.size() - it->second;
        return info;
      }
      info.sets.push_back(current);
      std::fill(member.begin(), member.end(), false);
      for (Element x : current) {
        for (Letter a = 0; a < m.alphabet().size(); ++a) {
          member[m.right_letter(x, a)] = true;
        }
      }
      current.clear();
      for (Element y = 0; y < m.size(); ++y) {
        if (member[y]) {
          current.push_back(y);
        }
      }
    }
  }

}  // namespace levelone

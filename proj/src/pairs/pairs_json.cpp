#include "json.hpp"
#include "levelone/pairs.hpp"

namespace levelone {

  std::string pairs_to_json_text(PairRelation const& relation) {
    using nlohmann::json;
    json list = json::array();
    for (auto [s, t] : relation.pairs()) {
      auto w = relation.witness(s, t);
      list.push_back({s, t, w ? json(w->left) : json(nullptr), w ? json(w->right) : json(nullptr)});
    }
    json j = {{"basis", relation.label()},
              {"elements", relation.element_count()},
              {"certified", relation.certified()},
              {"count", relation.count()},
              {"pairs", std::move(list)}};
    if (relation.basis() == Basis::amt) {
      j["modulus"] = relation.modulus();
    }
    return j.dump(2);
  }

}  // namespace levelone

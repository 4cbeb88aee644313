#include "json.hpp"
#include "levelone/monoid.hpp"

namespace levelone {

  std::string monoid_to_json_text(SyntacticMorphism const& m, OrderRelation const& order) {
    using nlohmann::json;
    json elements = json::array();
    json table    = json::array();
    json bits     = json::array();
    for (Element x = 0; x < m.size(); ++x) {
      elements.push_back({{"id", x},
                          {"witness", m.witness(x)},
                          {"idempotent", m.is_idempotent(x)},
                          {"omega", m.omega(x)}});
      json row = json::array();
      for (Element y = 0; y < m.size(); ++y) {
        row.push_back(m.multiply(x, y));
      }
      table.push_back(std::move(row));
      bits.push_back(order.row_bits(x));
    }
    json letters = json::object();
    for (Letter a = 0; a < m.alphabet().size(); ++a) {
      letters[std::string(1, m.alphabet().symbol(a))] = m.letter_image(a);
    }
    json j = {{"size", m.size()},
              {"identity", m.identity()},
              {"elements", std::move(elements)},
              {"letter_image", std::move(letters)},
              {"table", std::move(table)},
              {"accepting", m.accepting()},
              {"nonempty_image", m.nonempty_image()},
              {"idempotents_of_nonempty_image", m.idempotents_of_nonempty_image()},
              {"order", std::move(bits)}};
    return j.dump(2);
  }

}  // namespace levelone

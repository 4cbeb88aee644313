#include <fstream>
#include <sstream>

#include "json.hpp"
#include "levelone/error.hpp"
#include "levelone/pairs.hpp"

namespace levelone {

  Element FiniteGroup::validate(Alphabet const& alphabet) const {
    if (order == 0) {
      throw ValidationError("group must have at least one element");
    }
    if (table.size() != order * order) {
      throw ValidationError("group table must be " + std::to_string(order) + " x "
                            + std::to_string(order));
    }
    for (Element g : table) {
      if (g >= order) {
        throw ValidationError("group table entry out of range");
      }
    }
    for (Element g = 0; g < order; ++g) {
      for (Element h = 0; h < order; ++h) {
        for (Element k = 0; k < order; ++k) {
          if (multiply(multiply(g, h), k) != multiply(g, multiply(h, k))) {
            throw ValidationError("group table is not associative");
          }
        }
      }
    }
    std::optional<Element> identity;
    for (Element e = 0; e < order && !identity; ++e) {
      bool neutral = true;
      for (Element g = 0; g < order && neutral; ++g) {
        neutral = multiply(e, g) == g && multiply(g, e) == g;
      }
      if (neutral) {
        identity = e;
      }
    }
    if (!identity) {
      throw ValidationError("group table has no identity");
    }
    for (Element g = 0; g < order; ++g) {
      bool invertible = false;
      for (Element h = 0; h < order && !invertible; ++h) {
        invertible = multiply(g, h) == *identity && multiply(h, g) == *identity;
      }
      if (!invertible) {
        throw ValidationError("element " + std::to_string(g) + " has no inverse");
      }
    }
    for (char c : alphabet.symbols()) {
      auto it = letter_image.find(c);
      if (it == letter_image.end()) {
        throw ValidationError(std::string("no group image for letter '") + c + "'");
      }
      if (it->second >= order) {
        throw ValidationError(std::string("group image of '") + c + "' out of range");
      }
    }
    return *identity;
  }

  FiniteGroup FiniteGroup::length_modulo(std::size_t m, Alphabet const& alphabet) {
    FiniteGroup g;
    g.id    = "Z" + std::to_string(m);
    g.order = m;
    g.table.resize(m * m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        g.table[x * m + y] = static_cast<Element>((x + y) % m);
      }
    }
    for (char c : alphabet.symbols()) {
      g.letter_image[c] = static_cast<Element>(1 % m);
    }
    return g;
  }

  FiniteGroup FiniteGroup::parikh_modulo(std::size_t q, Alphabet const& alphabet) {
    std::size_t const k     = alphabet.size();
    std::size_t       order = 1;
    for (std::size_t i = 0; i < k; ++i) {
      order *= q;
    }
    auto digits = [&](std::size_t g) {
      std::vector<std::size_t> d(k);
      for (std::size_t i = 0; i < k; ++i) {
        d[i] = g % q;
        g /= q;
      }
      return d;
    };
    FiniteGroup g;
    g.id    = "Z" + std::to_string(q) + "^" + std::to_string(k);
    g.order = order;
    g.table.resize(order * order);
    for (std::size_t x = 0; x < order; ++x) {
      auto dx = digits(x);
      for (std::size_t y = 0; y < order; ++y) {
        auto        dy     = digits(y);
        std::size_t z      = 0;
        std::size_t weight = 1;
        for (std::size_t i = 0; i < k; ++i) {
          z += ((dx[i] + dy[i]) % q) * weight;
          weight *= q;
        }
        g.table[x * order + y] = static_cast<Element>(z);
      }
    }
    std::size_t weight = 1;
    for (std::size_t i = 0; i < k; ++i) {
      g.letter_image[alphabet.symbol(static_cast<Letter>(i))] =
          static_cast<Element>(q == 1 ? 0 : weight);
      weight *= q;
    }
    return g;
  }

  FiniteGroup group_from_json_text(std::string const& text, std::string id) {
    using nlohmann::json;
    try {
      json        j = json::parse(text);
      FiniteGroup g;
      g.id    = std::move(id);
      g.order = j.at("elements").get<std::size_t>();
      auto rows = j.at("table").get<std::vector<std::vector<Element>>>();
      if (rows.size() != g.order) {
        throw ValidationError("group table must have one row per element");
      }
      for (auto const& row : rows) {
        if (row.size() != g.order) {
          throw ValidationError("group table rows must have one entry per element");
        }
        g.table.insert(g.table.end(), row.begin(), row.end());
      }
      for (auto const& [symbol, image] : j.at("letter_image").items()) {
        if (symbol.size() != 1) {
          throw ValidationError("letter_image keys must be single symbols");
        }
        g.letter_image[symbol[0]] = image.get<Element>();
      }
      return g;
    } catch (json::exception const& e) {
      throw ValidationError(std::string("malformed group file: ") + e.what());
    }
  }

  FiniteGroup load_group(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ValidationError("cannot open group file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return group_from_json_text(buffer.str(), path);
  }

}  // namespace levelone

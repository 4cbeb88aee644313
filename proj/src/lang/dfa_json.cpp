#include <fstream>
#include <sstream>

#include "json.hpp"
#include "levelone/dfa.hpp"
#include "levelone/error.hpp"

namespace levelone {

  using nlohmann::json;

  std::string to_json_text(Dfa const& dfa) {
    json        j;
    std::size_t n = dfa.state_count();
    json        alphabet = json::array();
    json        delta    = json::object();
    for (Letter a = 0; a < dfa.alphabet().size(); ++a) {
      std::string symbol(1, dfa.alphabet().symbol(a));
      alphabet.push_back(symbol);
      json row = json::array();
      for (State q = 0; q < n; ++q) {
        row.push_back(dfa.next(q, a));
      }
      delta[symbol] = std::move(row);
    }
    j["alphabet"] = std::move(alphabet);
    j["states"]   = n;
    j["initial"]  = dfa.initial();
    j["finals"]   = dfa.finals();
    j["delta"]    = std::move(delta);
    return j.dump();
  }

  Dfa dfa_from_json_text(std::string const& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ValidationError(std::string("automaton file is not JSON: ") + e.what());
    }
    try {
      std::string symbols;
      for (auto const& s : j.at("alphabet")) {
        auto symbol = s.get<std::string>();
        if (symbol.size() != 1) {
          throw ValidationError("alphabet symbols must be single characters");
        }
        symbols += symbol;
      }
      Alphabet alphabet(symbols);
      if (alphabet.size() != symbols.size()) {
        throw ValidationError("duplicate alphabet symbols");
      }
      auto n       = j.at("states").get<std::size_t>();
      auto initial = j.at("initial").get<State>();
      auto finals  = j.at("finals").get<std::vector<State>>();
      auto const& table = j.at("delta");
      if (table.size() != alphabet.size()) {
        throw ValidationError("delta must list exactly the alphabet symbols");
      }
      std::vector<State> delta(n * alphabet.size());
      for (Letter a = 0; a < alphabet.size(); ++a) {
        std::string symbol(1, alphabet.symbol(a));
        if (!table.contains(symbol)) {
          throw ValidationError("delta has no row for symbol '" + symbol + "'");
        }
        auto row = table.at(symbol).get<std::vector<State>>();
        if (row.size() != n) {
          throw ValidationError("delta row for '" + symbol + "' is not total");
        }
        for (State q = 0; q < n; ++q) {
          delta[q * alphabet.size() + a] = row[q];
        }
      }
      return Dfa(alphabet, n, initial, std::move(finals), std::move(delta));
    } catch (json::exception const& e) {
      throw ValidationError(std::string("malformed automaton: ") + e.what());
    }
  }

  Dfa load_dfa(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ValidationError("cannot open automaton file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return dfa_from_json_text(buffer.str());
  }

  void save_dfa(Dfa const& dfa, std::string const& path) {
    std::ofstream out(path);
    if (!out) {
      throw ValidationError("cannot write automaton file " + path);
    }
    out << to_json_text(dfa) << '\n';
  }

}  // namespace levelone

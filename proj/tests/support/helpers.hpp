#pragma once

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "levelone/membership.hpp"

namespace helpers {

  using namespace levelone;

  inline Dfa raw_dfa(std::string const& pattern, std::string const& alphabet) {
    return compile_dfa(parse_pattern(pattern, Alphabet(alphabet)));
  }

  inline Dfa dfa_of(std::string const& pattern, std::string const& alphabet) {
    return minimize(raw_dfa(pattern, alphabet));
  }

  inline SyntacticMorphism monoid_of(std::string const& pattern, std::string const& alphabet) {
    return transition_monoid(dfa_of(pattern, alphabet));
  }

  inline std::string data_path(std::string const& name) {
    return std::string(LEVELONE_TEST_DATA) + "/" + name;
  }

  inline std::string read_text(std::string const& path) {
    std::ifstream     in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  inline nlohmann::json fixture(std::string const& name) {
    return nlohmann::json::parse(read_text(data_path("fixtures.json"))).at(name);
  }

  // Element named by a fixture: "1" is the empty word, anything else a word.
  inline Element named(SyntacticMorphism const& m, std::string const& name) {
    return m.evaluate(name == "1" ? "" : name);
  }

}  // namespace helpers

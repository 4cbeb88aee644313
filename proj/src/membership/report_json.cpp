#include <json.hpp>

#include "levelone/error.hpp"
#include "levelone/membership.hpp"

namespace levelone {

  using nlohmann::json;

  namespace {

    char const* const kVars[] = {"q", "r", "s", "t", "e", "f"};

    std::optional<Element>* slot(Violation& v, std::string_view name) {
      if (name == "q") return &v.q;
      if (name == "r") return &v.r;
      if (name == "s") return &v.s;
      if (name == "t") return &v.t;
      if (name == "e") return &v.e;
      if (name == "f") return &v.f;
      return nullptr;
    }

    json witness_json(Violation const& v) {
      json out = json::object();
      Violation copy = v;
      for (char const* name : kVars) {
        if (auto const& x = *slot(copy, name)) {
          out[name] = *x;
        }
      }
      out["words"] = v.words;
      out["lhs"]   = v.lhs;
      out["rhs"]   = v.rhs;
      return out;
    }

    Violation witness_from(json const& j) {
      Violation v;
      for (char const* name : kVars) {
        if (j.contains(name)) {
          *slot(v, name) = j.at(name).get<Element>();
        }
      }
      v.words = j.at("words").get<std::map<std::string, Word>>();
      v.lhs   = j.at("lhs").get<Element>();
      v.rhs   = j.at("rhs").get<Element>();
      return v;
    }

  }  // namespace

  std::string report_to_json_text(Report const& r) {
    json j;
    j["input"]       = r.input;
    j["alphabet"]    = r.alphabet;
    j["dfa_states"]  = r.dfa_states;
    j["monoid_size"] = r.monoid_size;
    j["basis"]       = r.basis;
    j["level"]       = std::string(to_string(r.level));
    j["plus"]        = r.plus;
    j["class"]       = r.class_label;
    j["class_name"]  = r.class_nickname;
    j["member"]      = r.verdict.member;
    j["equation"]    = std::string(to_string(r.verdict.equation));
    j["witness"]     = r.verdict.violation ? witness_json(*r.verdict.violation) : json(nullptr);
    j["certified"]   = r.certified;
    j["pairs"]       = {{"count", r.pair_count}, {"modulus", r.pair_modulus}};
    j["elapsed_ms"]  = r.elapsed_ms;
    return j.dump(2);
  }

  Report report_from_json_text(std::string const& text) {
    try {
      json   j = json::parse(text);
      Report r;
      r.input          = j.at("input").get<std::string>();
      r.alphabet       = j.at("alphabet").get<std::string>();
      r.dfa_states     = j.at("dfa_states").get<std::size_t>();
      r.monoid_size    = j.at("monoid_size").get<std::size_t>();
      r.basis          = j.at("basis").get<std::string>();
      r.level          = level_from_string(j.at("level").get<std::string>());
      r.plus           = j.at("plus").get<bool>();
      r.class_label    = j.at("class").get<std::string>();
      r.class_nickname = j.at("class_name").get<std::string>();
      r.verdict.member = j.at("member").get<bool>();
      auto eq          = equation_from_string(j.at("equation").get<std::string>());
      if (!eq) {
        throw ValidationError("unknown equation in report");
      }
      r.verdict.equation = *eq;
      if (!j.at("witness").is_null()) {
        r.verdict.violation = witness_from(j.at("witness"));
      }
      r.certified    = j.at("certified").get<bool>();
      r.pair_count   = j.at("pairs").at("count").get<std::size_t>();
      r.pair_modulus = j.at("pairs").at("modulus").get<std::uint64_t>();
      r.elapsed_ms   = j.at("elapsed_ms").get<double>();
      return r;
    } catch (json::exception const& e) {
      throw ValidationError(std::string("malformed report: ") + e.what());
    } catch (UsageError const& e) {
      throw ValidationError(std::string("malformed report: ") + e.what());
    }
  }

}  // namespace levelone

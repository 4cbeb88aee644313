#include <atomic>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "levelone/cli.hpp"
#include "levelone/error.hpp"

namespace levelone::cli {

  using nlohmann::json;

  std::vector<ManifestCase> parse_manifest(std::string const&           text,
                                           std::filesystem::path const& base_dir) {
    std::vector<ManifestCase> cases;
    try {
      json const j = json::parse(text);
      for (auto const& c : j.at("cases")) {
        ManifestCase k;
        k.input    = c.at("input").get<std::string>();
        k.alphabet = c.value("alphabet", std::string());
        k.basis    = c.value("basis", std::string("st"));
        k.level    = c.value("level", std::string("bpol"));
        k.plus     = c.value("plus", false);
        if (c.contains("expect") && !c.at("expect").is_null()) {
          k.expect = c.at("expect").get<bool>();
        }
        if (k.input.ends_with(".json")) {
          k.from_file = true;
          std::filesystem::path p(k.input);
          if (p.is_relative()) {
            p = base_dir / p;
          }
          k.input = p.string();
        } else if (k.alphabet.empty()) {
          throw ValidationError("case " + std::to_string(cases.size()) + ": pattern without alphabet");
        }
        if (k.level != "pol" && k.level != "bpol") {
          throw ValidationError("case " + std::to_string(cases.size()) + ": unknown level '" + k.level
                                + "'");
        }
        if (k.basis == "gr" && (k.level == "pol" || k.plus)) {
          throw ValidationError("case " + std::to_string(cases.size())
                                + ": unsupported: GR-pairs not computable in this tool");
        }
        cases.push_back(std::move(k));
      }
    } catch (json::exception const& e) {
      throw ValidationError(std::string("malformed manifest: ") + e.what());
    }
    return cases;
  }

  std::vector<ManifestCase> load_manifest(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ValidationError("cannot read manifest " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_manifest(buffer.str(), path.parent_path());
  }

  namespace {

    CaseOutcome run_case(ManifestCase const& k, Limits const& limits) {
      CaseOutcome out;
      try {
        BasisSpec     basis = BasisSpec::parse(k.basis);
        Level         level = level_from_string(k.level);
        DecideOptions options{limits, Exec::serial};
        Report        report;
        if (k.from_file) {
          Dfa dfa = load_dfa(k.input);
          if (!k.alphabet.empty() && !(Alphabet(k.alphabet) == dfa.alphabet())) {
            throw AlphabetMismatch("declared alphabet differs from the DFA file");
          }
          report = decide(dfa, k.input, basis, level, k.plus, options);
        } else {
          report = decide(parse_pattern(k.input, Alphabet(k.alphabet)), k.input, basis, level, k.plus,
                          options);
        }
        out.passed = !k.expect || (report.exit_code() != 3 && *k.expect == report.member());
        out.report = std::move(report);
      } catch (std::exception const& e) {
        out.error = e.what();
      }
      return out;
    }

  }  // namespace

  std::vector<CaseOutcome> run_cases(std::vector<ManifestCase> const& cases,
                                     std::size_t                      jobs,
                                     Limits const&                    limits) {
    std::vector<CaseOutcome> outcomes(cases.size());
    if (jobs == 0) {
      jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    jobs = std::min(jobs, std::max<std::size_t>(cases.size(), 1));
    std::atomic<std::size_t> next{0};
    auto                     worker = [&] {
      for (std::size_t i = next++; i < cases.size(); i = next++) {
        outcomes[i] = run_case(cases[i], limits);
      }
    };
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < jobs; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    return outcomes;
  }

  std::string batch_to_json_text(std::vector<ManifestCase> const& cases,
                                 std::vector<CaseOutcome> const&  outcomes) {
    json        list   = json::array();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      auto const& k = cases[i];
      auto const& o = outcomes[i];
      json        row;
      row["input"]  = k.input;
      row["basis"]  = k.basis;
      row["level"]  = k.level;
      row["plus"]   = k.plus;
      row["expect"] = k.expect ? json(*k.expect) : json(nullptr);
      if (o.report) {
        row["member"]      = o.report->member();
        row["conditional"] = o.report->exit_code() == 3;
        row["report"]      = json::parse(report_to_json_text(*o.report));
      } else {
        row["error"] = o.error;
      }
      row["passed"] = o.passed;
      passed += o.passed ? 1 : 0;
      list.push_back(std::move(row));
    }
    json j;
    j["cases"]  = std::move(list);
    j["total"]  = cases.size();
    j["passed"] = passed;
    j["failed"] = cases.size() - passed;
    return j.dump(2);
  }

}  // namespace levelone::cli

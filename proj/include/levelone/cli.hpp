#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "levelone/membership.hpp"

namespace levelone::cli {

  // Runs one command line (without the program name). Exit codes: 0 member
  // or success, 1 non-member, 2 error, 3 conditional verdict.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  struct ManifestCase {
    std::string         input;  // pattern, or DFA file path when from_file
    bool                from_file = false;
    std::string         alphabet;
    std::string         basis = "st";
    std::string         level = "bpol";
    bool                plus  = false;
    std::optional<bool> expect;
  };

  // {"cases":[{"input":"(ab)*","alphabet":"ab","basis":"st","level":"bpol",
  //            "plus":true,"expect":true}]}
  // An input ending in ".json" names a DFA file, relative to base_dir.
  // Throws ValidationError on malformed cases and unsupported combinations.
  std::vector<ManifestCase> parse_manifest(std::string const&           text,
                                           std::filesystem::path const& base_dir);
  std::vector<ManifestCase> load_manifest(std::filesystem::path const& path);

  struct CaseOutcome {
    std::optional<Report> report;
    std::string           error;
    bool                  passed = false;  // no error and expectation (if any) met
  };

  // Runs the cases on `jobs` worker threads; results in manifest order.
  std::vector<CaseOutcome> run_cases(std::vector<ManifestCase> const& cases,
                                     std::size_t                      jobs,
                                     Limits const&                    limits);

  std::string batch_to_json_text(std::vector<ManifestCase> const& cases,
                                 std::vector<CaseOutcome> const&  outcomes);

}  // namespace levelone::cli

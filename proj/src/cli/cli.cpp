#include "levelone/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>

#include "levelone/covers.hpp"
#include "levelone/error.hpp"

namespace levelone::cli {

  namespace {

    struct InputFlags {
      std::string pattern;
      std::string dfa_path;
      std::string alphabet;
      std::size_t budget = 0;
    };

    void add_input_flags(CLI::App* cmd, InputFlags& f) {
      cmd->add_option("pattern", f.pattern, "language as a pattern, e.g. \"(ab)*\"");
      cmd->add_option("--dfa", f.dfa_path, "read the language from a DFA file instead");
      cmd->add_option("--alphabet", f.alphabet, "alphabet symbols, e.g. ab");
      cmd->add_option("--budget", f.budget, "cap on DFA states and monoid elements");
    }

    Limits limits_of(InputFlags const& f) {
      Limits limits = Limits::from_environment();
      if (f.budget != 0) {
        limits.max_states   = f.budget;
        limits.max_elements = f.budget;
      }
      return limits;
    }

    Dfa pattern_dfa(std::string const& pattern, std::string const& alphabet, Limits const& limits) {
      if (alphabet.empty()) {
        throw UsageError("--alphabet is required with a pattern");
      }
      return compile_dfa(parse_pattern(pattern, Alphabet(alphabet)), limits);
    }

    // The input language and a description of it.
    std::pair<Dfa, std::string> read_input(InputFlags const& f, Limits const& limits) {
      if (!f.dfa_path.empty()) {
        if (!f.pattern.empty()) {
          throw UsageError("give either a pattern or --dfa, not both");
        }
        Dfa dfa = load_dfa(f.dfa_path);
        if (!f.alphabet.empty() && !(Alphabet(f.alphabet) == dfa.alphabet())) {
          throw AlphabetMismatch("--alphabet differs from the alphabet of " + f.dfa_path);
        }
        return {std::move(dfa), f.dfa_path};
      }
      if (f.pattern.empty()) {
        throw UsageError("missing input: a pattern or --dfa <file>");
      }
      return {pattern_dfa(f.pattern, f.alphabet, limits), f.pattern};
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream file(path);
      if (!file) {
        throw Error("cannot write " + path);
      }
      file << text << "\n";
    }

    std::string show_word(Word const& w) {
      return w.empty() ? "ε" : w;
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int analyze_cmd(InputFlags const& f, std::string const& json_path, std::ostream& out) {
      Limits const limits   = limits_of(f);
      auto [dfa, name]      = read_input(f, limits);
      Dfa const     minimal = minimize(dfa);
      auto const    m       = transition_monoid(minimal, limits);
      auto const    order   = syntactic_preorder(m);
      auto const    stable  = stable_sequence(m);
      out << "language: " << name << " over {" << minimal.alphabet().symbols() << "}\n";
      out << "minimal DFA: " << minimal.state_count() << " states"
          << (is_permutation_automaton(minimal) ? " (permutation automaton)" : "") << "\n";
      out << "syntactic monoid: " << m.size() << " elements, |S| = " << m.nonempty_image().size()
          << ", |E(S)| = " << m.idempotents_of_nonempty_image().size()
          << ", |E(M)| = " << m.idempotents().size() << "\n";
      out << "alpha(A^i): threshold " << stable.threshold << ", period " << stable.period << "\n";
      if (m.size() <= 32) {
        out << "elements:\n";
        for (Element x = 0; x < m.size(); ++x) {
          out << "  " << std::setw(3) << x << "  " << std::left << std::setw(10)
              << show_word(m.witness(x)) << std::right << (m.is_accepting(x) ? " accepting" : "")
              << (m.is_idempotent(x) ? " idempotent" : "") << "  order " << order.row_bits(x)
              << "\n";
        }
      }
      if (!json_path.empty()) {
        write_file(json_path, monoid_to_json_text(m, order));
      }
      return 0;
    }

    struct DecideFlags {
      std::string basis = "st";
      std::string level = "bpol";
      bool        plus  = false;
      bool        witness = false;
      bool        serial  = false;
    };

    int decide_cmd(InputFlags const&  f,
                   DecideFlags const& d,
                   std::string const& json_path,
                   std::ostream&      out) {
      BasisSpec const basis = BasisSpec::parse(d.basis);
      Level const     level = level_from_string(d.level);
      if (basis.kind == BasisKind::gr && (level == Level::pol || d.plus)) {
        throw UsageError("unsupported: GR-pairs not computable in this tool");
      }
      Limits const  limits = limits_of(f);
      auto [dfa, name]     = read_input(f, limits);
      DecideOptions options{limits, d.serial ? Exec::serial : Exec::parallel};
      Report const  report = decide(dfa, name, basis, level, d.plus, options);
      out << summary(report);
      if (d.witness) {
        if (auto const& v = report.verdict.violation) {
          out << "witness words:\n";
          for (auto const& [var, word] : v->words) {
            out << "  " << var << " = " << show_word(word) << "\n";
          }
        } else {
          out << "no witness: the equation holds\n";
        }
      }
      if (!json_path.empty()) {
        write_file(json_path, report_to_json_text(report));
      }
      return report.exit_code();
    }

    int pairs_cmd(InputFlags const&  f,
                  std::string const& basis_text,
                  bool               witness,
                  std::string const& json_path,
                  std::ostream&      out) {
      BasisSpec const basis = BasisSpec::parse(basis_text);
      Limits const    limits = limits_of(f);
      auto [dfa, name]       = read_input(f, limits);
      auto const   m         = transition_monoid(minimize(dfa), limits);
      PairRelation relation;
      switch (basis.kind) {
        case BasisKind::st: relation = st_pairs(m); break;
        case BasisKind::mod: relation = mod_pairs(m, limits); break;
        case BasisKind::amt: relation = amt_pairs(m, limits); break;
        case BasisKind::custom: relation = group_morphism_pairs(m, *basis.group, limits); break;
        case BasisKind::gr: throw UsageError("unsupported: GR-pairs not computable in this tool");
      }
      out << relation.label() << "-pairs of " << name << ": " << relation.count() << " of "
          << m.size() * m.size() << (relation.certified() ? "" : " [UNCERTIFIED]") << "\n";
      if (witness || relation.count() <= 64) {
        for (auto [s, t] : relation.pairs()) {
          out << "  (" << s << ", " << t << ")";
          if (auto w = relation.witness(s, t)) {
            out << "  [" << show_word(w->left) << ", " << show_word(w->right) << "]";
          }
          out << "\n";
        }
      }
      if (!json_path.empty()) {
        write_file(json_path, pairs_to_json_text(relation));
      }
      return relation.certified() ? 0 : 3;
    }

    int cover_cmd(InputFlags const&  f,
                  std::string const& group_pattern,
                  std::string const& group_dfa,
                  std::size_t        max_bases,
                  std::string const& out_dir,
                  std::string const& json_path,
                  std::ostream&      out) {
      Limits const limits = limits_of(f);
      auto [target, name] = read_input(f, limits);
      Dfa group;
      if (!group_dfa.empty()) {
        group = load_dfa(group_dfa);
      } else if (!group_pattern.empty()) {
        group = pattern_dfa(group_pattern, target.alphabet().symbols(), limits);
      } else {
        throw UsageError("cover needs --group <pattern> or --group-dfa <file>");
      }
      CoverResult const cover = pgcov_cover(target, group, max_bases, limits);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
      }
      nlohmann::json list = nlohmann::json::array();
      for (std::size_t i = 0; i < cover.entries.size(); ++i) {
        auto const&    entry = cover.entries[i];
        nlohmann::json row;
        row["base_word"] = entry.base;
        if (!out_dir.empty()) {
          auto path = (std::filesystem::path(out_dir) / ("entry_" + std::to_string(i) + ".json")).string();
          save_dfa(entry.language, path);
          row["automaton_file"] = path;
        } else {
          row["automaton_file"] = nullptr;
        }
        list.push_back(std::move(row));
      }
      nlohmann::json doc;
      doc["entries"]   = std::move(list);
      doc["certified"] = cover.certified;
      out << "cover of " << name << ": " << cover.entries.size() << " entries, "
          << (cover.certified ? "certified" : "NOT certified (base budget reached)") << "\n";
      for (auto const& entry : cover.entries) {
        out << "  " << show_word(entry.base) << "  (" << entry.language.state_count() << " states)\n";
      }
      if (!json_path.empty()) {
        write_file(json_path, doc.dump(2));
      }
      return cover.certified ? 0 : 2;
    }

    int decompose_cmd(InputFlags const&  f,
                      std::string const& word,
                      std::string const& json_path,
                      std::ostream&      out) {
      Limits const limits = limits_of(f);
      auto [dfa, name]    = read_input(f, limits);
      auto const m        = transition_monoid(minimize(dfa), limits);
      auto const d        = guarded_decomposition(m, word);
      auto const defect   = decomposition_defect(m, word, d);
      std::string const text = decomposition_to_json_text(d, !defect);
      out << text << "\n";
      if (!json_path.empty()) {
        write_file(json_path, text);
      }
      if (defect) {
        throw Error("decomposition failed verification: " + *defect);
      }
      return 0;
    }

    int batch_cmd(std::string const& manifest,
                  std::size_t        jobs,
                  std::size_t        budget,
                  std::string const& json_path,
                  std::ostream&      out) {
      Limits limits = Limits::from_environment();
      if (budget != 0) {
        limits.max_states   = budget;
        limits.max_elements = budget;
      }
      auto const cases    = load_manifest(manifest);
      auto const outcomes = run_cases(cases, jobs, limits);
      bool       all      = true;
      out << std::left << std::setw(4) << "#" << std::setw(28) << "input" << std::setw(20) << "class"
          << std::setw(14) << "verdict" << std::setw(10) << "expect" << "result\n";
      for (std::size_t i = 0; i < cases.size(); ++i) {
        auto const& k = cases[i];
        auto const& o = outcomes[i];
        std::string verdict, label;
        if (o.report) {
          label   = o.report->class_label;
          verdict = o.report->exit_code() == 3 ? "conditional"
                    : o.report->member()       ? "member"
                                               : "non-member";
        } else {
          verdict = "error";
        }
        std::string expect = k.expect ? (*k.expect ? "member" : "non-member") : "-";
        out << std::setw(4) << i << std::setw(28) << k.input << std::setw(20) << label << std::setw(14)
            << verdict << std::setw(10) << expect << (o.passed ? "pass" : "FAIL");
        if (!o.error.empty()) {
          out << "  " << o.error;
        }
        out << "\n";
        all = all && o.passed;
      }
      out << std::right;
      std::size_t passed = 0;
      for (auto const& o : outcomes) {
        passed += o.passed ? 1 : 0;
      }
      out << passed << "/" << cases.size() << " cases passed\n";
      if (!json_path.empty()) {
        write_file(json_path, batch_to_json_text(cases, outcomes));
      }
      return all ? 0 : 2;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Membership in level one of group-based concatenation hierarchies"};
    app.name("levelone");
    app.require_subcommand(1);

    std::string json_path;

    InputFlags analyze_in;
    auto*      analyze = app.add_subcommand("analyze", "minimal DFA, syntactic monoid and order");
    add_input_flags(analyze, analyze_in);
    analyze->add_option("--json", json_path, "write the monoid as JSON");

    InputFlags  decide_in;
    DecideFlags decide_flags;
    auto*       decide = app.add_subcommand("decide", "decide membership in Pol/BPol of a basis");
    add_input_flags(decide, decide_in);
    decide->add_option("--basis", decide_flags.basis, "st, mod, amt, gr or group:<file>");
    decide->add_option("--level", decide_flags.level, "pol or bpol");
    decide->add_flag("--plus", decide_flags.plus, "use the well-suited extension G+");
    decide->add_flag("--witness", decide_flags.witness, "print the witness words of a violation");
    decide->add_flag("--serial", decide_flags.serial, "run the equation sweep on one thread");
    decide->add_option("--json", json_path, "write the report as JSON");

    InputFlags  pairs_in;
    std::string pairs_basis = "st";
    bool        pairs_witness = false;
    auto*       pairs = app.add_subcommand("pairs", "compute a pair relation");
    add_input_flags(pairs, pairs_in);
    pairs->add_option("--basis", pairs_basis, "st, mod, amt or group:<file>");
    pairs->add_flag("--witness", pairs_witness, "list every pair with its witness words");
    pairs->add_option("--json", json_path, "write the relation as JSON");

    InputFlags  cover_in;
    std::string group_pattern, group_dfa, out_dir;
    std::size_t max_bases = 64;
    auto*       cover = app.add_subcommand("cover", "cover a language by up-arrow languages of L");
    add_input_flags(cover, cover_in);
    cover->add_option("--group", group_pattern, "group language L as a pattern (must contain ε)");
    cover->add_option("--group-dfa", group_dfa, "group language L from a DFA file");
    cover->add_option("--max-bases", max_bases, "stop after this many entries");
    cover->add_option("--out-dir", out_dir, "write one DFA file per entry here");
    cover->add_option("--json", json_path, "write the entry list as JSON");

    InputFlags  decompose_in;
    std::string word;
    auto*       decompose = app.add_subcommand("decompose", "guarded decomposition of a word");
    add_input_flags(decompose, decompose_in);
    decompose->add_option("--word", word, "nonempty word to decompose")->required();
    decompose->add_option("--json", json_path, "also write the decomposition here");

    std::string manifest;
    std::size_t jobs = 0, batch_budget = 0;
    auto*       batch = app.add_subcommand("batch", "run a manifest of decisions");
    batch->add_option("manifest", manifest, "manifest JSON file")->required();
    batch->add_option("--jobs", jobs, "worker threads (default: all cores)");
    batch->add_option("--budget", batch_budget, "cap on DFA states and monoid elements");
    batch->add_option("--json", json_path, "write the aggregate results as JSON");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      if (*analyze) {
        return analyze_cmd(analyze_in, json_path, out);
      }
      if (*decide) {
        return decide_cmd(decide_in, decide_flags, json_path, out);
      }
      if (*pairs) {
        return pairs_cmd(pairs_in, pairs_basis, pairs_witness, json_path, out);
      }
      if (*cover) {
        return cover_cmd(cover_in, group_pattern, group_dfa, max_bases, out_dir, json_path, out);
      }
      if (*decompose) {
        return decompose_cmd(decompose_in, word, json_path, out);
      }
      if (*batch) {
        return batch_cmd(manifest, jobs, batch_budget, json_path, out);
      }
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    return 2;
  }

}  // namespace levelone::cli

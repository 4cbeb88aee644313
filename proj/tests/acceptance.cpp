// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance <path to levelone binary>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "levelone/cli.hpp"
#include "levelone/covers.hpp"
#include "oracles.hpp"

using namespace levelone;

namespace {

  class Criterion {
   public:
    Criterion(int number, double limit_seconds) : number_(number), limit_(limit_seconds) {}

    void expect(bool ok, std::string const& what) {
      ++checks_;
      if (!ok) {
        if (failures_ < 5) {
          notes_ << "\n    failed: " << what;
        }
        ++failures_;
      }
    }

    bool finish(std::string const& description) {
      double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      bool   in_time = limit_ <= 0 || elapsed < limit_;
      bool   pass    = failures_ == 0 && in_time;
      std::cout << "criterion " << number_ << ": " << (pass ? "PASS" : "FAIL") << "  " << description << " ("
                << checks_ - failures_ << "/" << checks_ << " checks, " << std::fixed
                << std::setprecision(2) << elapsed << " s";
      if (limit_ > 0) {
        std::cout << ", limit " << limit_ << " s";
      }
      std::cout << ")" << notes_.str() << "\n";
      if (!in_time) {
        std::cout << "    over the time limit\n";
      }
      return pass;
    }

   private:
    int                                   number_;
    double                                limit_;
    std::size_t                           checks_ = 0, failures_ = 0;
    std::ostringstream                    notes_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  };

  std::string quote(std::string const& s) {
    return "'" + s + "'";
  }

  int run_binary(std::string const& binary, std::string const& args) {
    int status = std::system((quote(binary) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  bool golden(std::string const& binary) {
    Criterion c(1, 10);
    auto      cases = cli::load_manifest(helpers::data_path("golden.json"));
    for (auto const& k : cases) {
      std::string label = k.input + " basis=" + k.basis + " level=" + k.level + (k.plus ? " plus" : "");
      Report      r     = decide(parse_pattern(k.input, Alphabet(k.alphabet)), k.input, BasisSpec::parse(k.basis),
                                 level_from_string(k.level), k.plus);
      c.expect(r.certified && r.member() == k.expect.value(), "library verdict for " + label);
      if (!binary.empty()) {
        std::string args = "decide --alphabet " + k.alphabet + " --basis " + k.basis + " --level " + k.level +
                           (k.plus ? " --plus " : " ") + quote(k.input);
        c.expect(run_binary(binary, args) == (k.expect.value() ? 0 : 1), "exit code for " + label);
      }
    }
    if (!binary.empty()) {
      c.expect(run_binary(binary, "batch " + quote(helpers::data_path("golden.json"))) == 0, "batch exit code");
      c.expect(run_binary(binary, "decide --alphabet a --basis gr --level pol '(aa)*'") == 2, "GR at Pol level");
    } else {
      c.expect(false, "no binary given");
    }

    // Committed fixtures, re-derived with the literal equations.
    auto       ab     = helpers::monoid_of("(ab)*", "ab");
    auto const fix    = helpers::fixture("ab_star");
    oracle::Naive n{ab};
    c.expect(ab.size() == fix.at("elements").size(), "(ab)* monoid size");
    c.expect(n.simon().has_value() == !fix.at("simon").get<bool>(), "(ab)* Simon fixture");
    c.expect(n.knast().has_value() == !fix.at("knast").get<bool>(), "(ab)* Knast fixture");

    gen::Rng   rng(1);
    auto       single = helpers::monoid_of("a", "ab");
    auto const sfix   = helpers::fixture("singleton_a");
    auto const order  = oracle::context_order(single, rng);
    oracle::Naive sn{single};
    auto          ones = oracle::everything(single);
    std::vector<Element> st_ones;
    for (Element s : ones) {
      if (st_pairs(single).contains(single.identity(), s)) {
        st_ones.push_back(s);
      }
    }
    c.expect(sn.polg(order, st_ones).has_value() == !sfix.at("pol_st").get<bool>(), "{a} Pol(ST) fixture");
    c.expect(sn.polgp(order, st_ones).has_value() == !sfix.at("pol_st_plus").get<bool>(), "{a} Pol(ST+) fixture");

    auto odd = helpers::monoid_of("a(aa)*", "a");
    auto mod = mod_pairs(odd);
    c.expect(mod.count() == odd.size(), "a(aa)* MOD-pairs diagonal");
    return c.finish("golden corpus");
  }

  bool generic_vs_specialized(std::vector<SyntacticMorphism> const& corpus) {
    Criterion c(2, 60);
    for (auto const& m : corpus) {
      auto const st = st_pairs(m);
      c.expect(check_bpol_group(m, st).member == check_specialized(m, Specialized::simon).member, "BPol(ST) vs Simon");
      c.expect(check_bpol_group_plus(m, st).member == check_specialized(m, Specialized::knast).member,
               "BPol(ST+) vs Knast");
    }
    return c.finish("generic and specialized equations agree on 200 random automata");
  }

  bool mod_oracle() {
    Criterion  c(3, 30);
    gen::Rng   rng(31);
    for (int i = 0; i < 50; ++i) {
      Dfa const  d = gen::random_minimal_dfa(rng, 4, rng.coin() ? "ab" : "a");
      auto const m = transition_monoid(d);
      oracle::PairSet expected = oracle::as_set(st_pairs(m));
      for (std::size_t k = 1; k <= 12; ++k) {
        expected = oracle::intersect(expected, oracle::group_pairs(m, oracle::length_mod(k)));
      }
      c.expect(oracle::as_set(mod_pairs(m)) == expected, "MOD-pairs on automaton " + std::to_string(i));
    }
    return c.finish("MOD-pairs equal length-modulo intersections on 50 random automata");
  }

  void relation_invariants(Criterion& c, SyntacticMorphism const& m, PairRelation const& r) {
    bool ok = true;
    for (Element x = 0; x < m.size(); ++x) {
      ok = ok && r.contains(x, x);
    }
    c.expect(ok, r.label() + " reflexive");
    ok = true;
    for (auto [s, t] : r.pairs()) {
      ok = ok && r.contains(t, s);
      if (auto w = r.witness(s, t)) {
        ok = ok && m.evaluate(w->left) == s && m.evaluate(w->right) == t;
      }
    }
    c.expect(ok, r.label() + " symmetric with valid witnesses");
  }

  bool invariants(std::vector<SyntacticMorphism> const& corpus) {
    Criterion c(4, 0);
    for (auto const& m : corpus) {
      std::size_t const n     = m.size();
      auto const        order = syntactic_preorder(m);

      bool refl = true, trans = true, compat = true, upper = true;
      for (Element s = 0; s < n; ++s) {
        refl = refl && order(s, s);
        for (Element t = 0; t < n; ++t) {
          if (!order(s, t)) {
            continue;
          }
          upper = upper && (!m.is_accepting(s) || m.is_accepting(t));
          // compatibility with letters on both sides gives compatibility
          // with every element, by transitivity
          for (Letter a = 0; a < m.alphabet().size(); ++a) {
            Element x = m.letter_image(a);
            compat    = compat && order(m.multiply(s, x), m.multiply(t, x)) &&
                     order(m.multiply(x, s), m.multiply(x, t));
          }
          for (Element u = 0; u < n && trans; ++u) {
            trans = !order(t, u) || order(s, u);
          }
        }
      }
      c.expect(refl, "order reflexive");
      c.expect(trans, "order transitive");
      c.expect(compat, "order compatible");
      c.expect(upper, "accepting set upward closed");

      bool omega = true;
      for (Element x = 0; x < n; ++x) {
        Element w = m.omega(x);
        omega = omega && m.multiply(w, w) == w && m.multiply(w, x) == m.multiply(x, w) && w == oracle::omega(m, x);
      }
      c.expect(omega, "omega idempotent and commuting");

      auto const st  = st_pairs(m);
      auto const mod = mod_pairs(m);
      auto const amt = amt_pairs(m);
      relation_invariants(c, m, st);
      relation_invariants(c, m, mod);
      relation_invariants(c, m, amt);

      std::vector<Verdict> verdicts{check_pol(m, order, st),
                                    check_pol_group(m, order, st),
                                    check_pol_group_plus(m, order, st),
                                    check_pol_group(m, order, mod),
                                    check_pol_group_plus(m, order, mod),
                                    check_bpol_group(m, st),
                                    check_bpol_group_plus(m, st),
                                    check_bpol_group(m, mod),
                                    check_bpol_group_plus(m, mod),
                                    check_specialized(m, Specialized::simon),
                                    check_specialized(m, Specialized::knast),
                                    check_specialized(m, Specialized::grbpol)};
      for (auto const& v : verdicts) {
        c.expect(reproduces(v, m, &order), "witness of " + std::string(to_string(v.equation)) + " re-evaluates");
      }
    }
    return c.finish("order, omega, pair and witness invariants on the random corpus");
  }

  bool cover_certification() {
    Criterion c(5, 60);
    auto      exact = pgcov_cover(helpers::dfa_of("a*", "a"), helpers::dfa_of("(aa)*", "a"));
    c.expect(exact.certified && exact.entries.size() == 2, "a* by (aa)* gives two certified entries");

    gen::Rng rng(42);
    for (int i = 0; i < 20; ++i) {
      Dfa  h     = gen::random_minimal_dfa(rng, 4, "ab");
      Dfa  l     = gen::random_permutation_dfa(rng, rng.between(2, 3), "ab");
      auto cover = pgcov_cover(h, l);
      c.expect(cover.certified, "certified");
      c.expect(covers(cover, h), "H inside the union");
      c.expect(!antichain_violation(cover, l).has_value(), "bases form an antichain");
    }
    return c.finish("cover certification");
  }

  bool decompositions() {
    Criterion c(6, 0);
    gen::Rng  rng(43);
    int       done = 0;
    while (done < 100) {
      Dfa const  d = gen::random_minimal_dfa(rng, 3, "ab");
      auto const m = transition_monoid(d);
      if (m.size() > 6) {
        continue;
      }
      Word w = gen::random_word(rng, d.alphabet(), 200);
      if (w.empty()) {
        continue;
      }
      auto const g = guarded_decomposition(m, w);
      c.expect(oracle::is_guarded_decomposition(m, w, g), "decomposition of " + w);
      c.expect((g.blocks.size() == 1) == (w.size() <= m.size() * m.size()), "single block iff short word");
      ++done;
    }
    return c.finish("guarded decompositions of 100 random words");
  }

  bool hierarchy(std::vector<SyntacticMorphism> const& corpus) {
    Criterion c(7, 0);
    for (auto const& m : corpus) {
      auto const order = syntactic_preorder(m);
      auto const st    = st_pairs(m);
      auto const mod   = mod_pairs(m);
      auto const amt   = amt_pairs(m);
      for (auto const* pairs : {&st, &mod, &amt}) {
        c.expect(!check_pol_group(m, order, *pairs).member || check_bpol_group(m, *pairs).member, "Pol => BPol");
        c.expect(!check_pol_group_plus(m, order, *pairs).member || check_bpol_group_plus(m, *pairs).member,
                 "Pol+ => BPol+");
      }
      c.expect(!check_bpol_group(m, st).member || check_bpol_group(m, mod).member, "BPol(ST) => BPol(MOD)");
      c.expect(!check_bpol_group_plus(m, st).member || check_bpol_group_plus(m, mod).member,
               "BPol(ST+) => BPol(MOD+)");
      c.expect(!check_pol_group(m, order, st).member || check_pol_group(m, order, mod).member, "Pol(ST) => Pol(MOD)");
      c.expect(!check_pol_group_plus(m, order, st).member || check_pol_group_plus(m, order, mod).member,
               "Pol(ST+) => Pol(MOD+)");
      c.expect(!check_bpol_group(m, mod).member || check_specialized(m, Specialized::grbpol).member,
               "BPol(MOD) => BPol(GR)");
    }
    return c.finish("hierarchy sanity on the random corpus");
  }

}  // namespace

int main(int argc, char** argv) {
  std::string binary = argc > 1 ? argv[1] : "";
  std::vector<SyntacticMorphism> corpus;
  for (auto const& d : gen::standard_corpus()) {
    corpus.push_back(transition_monoid(d));
  }
  bool ok = true;
  try {
    ok = golden(binary) && ok;
    ok = generic_vs_specialized(corpus) && ok;
    ok = mod_oracle() && ok;
    ok = invariants(corpus) && ok;
    ok = cover_certification() && ok;
    ok = decompositions() && ok;
    ok = hierarchy(corpus) && ok;
  } catch (std::exception const& e) {
    std::cout << "acceptance aborted: " << e.what() << "\n";
    return 1;
  }
  std::cout << (ok ? "all criteria pass" : "some criteria fail") << "\n";
  return ok ? 0 : 1;
}

#include <doctest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "levelone/error.hpp"
#include "oracles.hpp"

using namespace levelone;
using helpers::monoid_of;

namespace {

  Report run(std::string const& pattern, std::string const& alphabet, std::string const& basis,
             Level level, bool plus) {
    return decide(parse_pattern(pattern, Alphabet(alphabet)), pattern, BasisSpec::parse(basis), level,
                  plus);
  }

  // Simon's and Knast's equations read off the fixture's own table.
  struct FixtureMonoid {
    std::vector<std::string>      names;
    std::vector<std::vector<int>> table;
    std::vector<int>              nonempty;

    explicit FixtureMonoid(nlohmann::json const& j) {
      names = j.at("elements").get<std::vector<std::string>>();
      auto index = [&](std::string const& n) {
        return static_cast<int>(std::find(names.begin(), names.end(), n) - names.begin());
      };
      for (auto const& row : j.at("table")) {
        std::vector<int> r;
        for (auto const& n : row) {
          r.push_back(index(n));
        }
        table.push_back(r);
      }
      for (auto const& n : j.at("nonempty_image")) {
        nonempty.push_back(index(n));
      }
    }
    int mul(int x, int y) const {
      return table[x][y];
    }
    int omega(int x) const {
      int p = x;
      while (mul(p, p) != p) {
        p = mul(p, x);
      }
      return p;
    }
    bool simon() const {
      int n = static_cast<int>(names.size());
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          int u = omega(mul(s, t));
          if (mul(u, s) != u || mul(t, u) != u) {
            return false;
          }
        }
      }
      return true;
    }
    bool knast() const {
      std::vector<int> idems;
      for (int x : nonempty) {
        if (mul(x, x) == x) {
          idems.push_back(x);
        }
      }
      for (int q : nonempty)
        for (int r : nonempty)
          for (int s : nonempty)
            for (int t : nonempty)
              for (int e : idems)
                for (int f : idems) {
                  int x = omega(mul(mul(mul(mul(e, q), f), r), e));
                  int y = omega(mul(mul(mul(mul(e, s), f), t), e));
                  if (mul(x, y) != mul(mul(mul(mul(x, q), f), t), y)) {
                    return false;
                  }
                }
      return true;
    }
  };

}  // namespace

TEST_CASE("fixture: Simon and Knast on the hand-built (ab)* table") {
  auto const        j = helpers::fixture("ab_star");
  FixtureMonoid const f(j);
  CHECK(f.simon() == j.at("simon").get<bool>());
  CHECK(f.knast() == j.at("knast").get<bool>());

  auto const m = monoid_of("(ab)*", "ab");
  CHECK(check_specialized(m, Specialized::simon).member == f.simon());
  CHECK(check_specialized(m, Specialized::knast).member == f.knast());
}

TEST_CASE("check_pol") {
  auto some_a = monoid_of("(a|b)*a(a|b)*", "ab");
  CHECK(check_pol(some_a, syntactic_preorder(some_a), st_pairs(some_a)).member);

  auto odd   = monoid_of("a(aa)*", "a");
  auto order = syntactic_preorder(odd);
  auto v     = check_pol(odd, order, st_pairs(odd));
  CHECK_FALSE(v.member);
  CHECK(v.equation == Equation::polc);
  CHECK(reproduces(v, odd, &order));
  CHECK(check_pol(odd, order, mod_pairs(odd)).member);
}

TEST_CASE("check_pol_group") {
  auto some_a = monoid_of("(a|b)*a(a|b)*", "ab");
  CHECK(check_pol_group(some_a, syntactic_preorder(some_a), st_pairs(some_a)).member);

  auto odd   = monoid_of("a(aa)*", "a");
  auto order = syntactic_preorder(odd);
  auto v     = check_pol_group(odd, order, st_pairs(odd));
  CHECK_FALSE(v.member);
  REQUIRE(v.violation.has_value());
  CHECK(v.violation->s == odd.evaluate("a"));
  CHECK(v.violation->words.at("s") == "a");
  CHECK(check_pol_group(odd, order, mod_pairs(odd)).member);
}

TEST_CASE("check_pol_group_plus") {
  auto single = monoid_of("a", "ab");
  CHECK(single.idempotents_of_nonempty_image() == std::vector<Element>{single.evaluate("b")});
  CHECK(check_pol_group_plus(single, syntactic_preorder(single), st_pairs(single)).member);

  auto odd   = monoid_of("a(aa)*", "a");
  auto order = syntactic_preorder(odd);
  auto v     = check_pol_group_plus(odd, order, st_pairs(odd));
  CHECK_FALSE(v.member);
  REQUIRE(v.violation.has_value());
  CHECK(v.violation->e == odd.identity());
  CHECK(check_pol_group_plus(odd, order, mod_pairs(odd)).member);
}

TEST_CASE("check_bpol_group") {
  auto ab_sub = monoid_of("(a|b)*a(a|b)*b(a|b)*", "ab");
  CHECK(check_bpol_group(ab_sub, st_pairs(ab_sub)).member);

  auto ab = monoid_of("(ab)*", "ab");
  auto v  = check_bpol_group(ab, st_pairs(ab));
  CHECK_FALSE(v.member);
  CHECK(v.equation == Equation::gone);
  CHECK(reproduces(v, ab));

  auto even = monoid_of("(aa)*", "a");
  CHECK(check_bpol_group(even, mod_pairs(even)).member);
  CHECK_FALSE(check_bpol_group(even, st_pairs(even)).member);
}

TEST_CASE("check_bpol_group_plus") {
  auto ab = monoid_of("(ab)*", "ab");
  CHECK(check_bpol_group_plus(ab, st_pairs(ab)).member);
  auto ab_sub = monoid_of("(a|b)*a(a|b)*b(a|b)*", "ab");
  CHECK(check_bpol_group_plus(ab_sub, st_pairs(ab_sub)).member);
  auto odd = monoid_of("a(aa)*", "a");
  CHECK(check_bpol_group_plus(odd, mod_pairs(odd)).member);
}

TEST_CASE("check_specialized") {
  auto ab = monoid_of("(ab)*", "ab");
  auto s  = check_specialized(ab, Specialized::simon);
  CHECK_FALSE(s.member);
  CHECK(reproduces(s, ab));
  CHECK(check_specialized(ab, Specialized::knast).member);
  CHECK(check_specialized(monoid_of("(a|b)*a(a|b)*b(a|b)*", "ab"), Specialized::simon).member);
  auto triv = monoid_of("(a|b)*", "ab");
  CHECK(check_specialized(triv, Specialized::simon).member);
  CHECK(check_specialized(triv, Specialized::knast).member);
  CHECK(check_specialized(triv, Specialized::grbpol).member);
  // The idempotents of (ab)* satisfy (ef)^w = (fe)^w; those of (a|b)*a,
  // where a and b are right zeros, do not.
  CHECK(check_specialized(ab, Specialized::grbpol).member);
  auto last = monoid_of("(a|b)*a", "ab");
  auto g    = check_specialized(last, Specialized::grbpol);
  CHECK_FALSE(g.member);
  CHECK(reproduces(g, last));
}

TEST_CASE("decide: examples") {
  CHECK(run("(a|b)*a(a|b)*b(a|b)*", "ab", "st", Level::bpol, false).member());
  CHECK(run("(ab)*", "ab", "st", Level::bpol, true).member());
  CHECK_FALSE(run("(ab)*", "ab", "st", Level::bpol, false).member());
  CHECK_FALSE(run("(aa)*", "a", "st", Level::bpol, false).member());
  CHECK(run("(aa)*", "a", "mod", Level::bpol, false).member());
  CHECK(run("(aa)*", "a", "gr", Level::bpol, false).member());
  CHECK_THROWS_AS(run("(aa)*", "a", "gr", Level::pol, false), UsageError);
  CHECK_THROWS_AS(run("(aa)*", "a", "gr", Level::bpol, true), UsageError);
  CHECK_THROWS_AS(BasisSpec::parse("xyz"), UsageError);

  auto r = run("(ab)*", "ab", "st", Level::bpol, false);
  CHECK(r.class_label == "BPol(ST)");
  CHECK(r.class_nickname == "piecewise testable");
  CHECK(r.exit_code() == 1);
  CHECK(r.monoid_size == 6);
  CHECK(r.dfa_states == 3);
  CHECK(summary(r).starts_with("NOT a member of BPol(ST) (piecewise testable)"));
  CHECK(run("(ab)*", "ab", "st", Level::bpol, true).class_nickname == "dot-depth one");
}

TEST_CASE("decide: custom group basis") {
  BasisSpec basis = BasisSpec::parse("group:" + helpers::data_path("z4_length.json"));
  CHECK(basis.kind == BasisKind::custom);
  auto r = decide(parse_pattern("(aa)*", Alphabet("a")), "(aa)*", basis, Level::bpol, false);
  CHECK(r.member());
  CHECK(r.pair_count == 2);
}

TEST_CASE("report json round trip") {
  for (auto const& [p, plus] : std::vector<std::pair<std::string, bool>>{{"(ab)*", false}, {"(ab)*", true}}) {
    Report r = run(p, "ab", "st", Level::bpol, plus);
    CHECK(report_from_json_text(report_to_json_text(r)) == r);
  }
  Report amt = run("(aa)*", "a", "amt", Level::pol, true);
  CHECK(report_from_json_text(report_to_json_text(amt)) == amt);
  auto j = nlohmann::json::parse(report_to_json_text(run("(ab)*", "ab", "st", Level::bpol, false)));
  CHECK(j.at("member") == false);
  CHECK(j.at("witness").at("words").at("s") == "a");
  CHECK_THROWS_AS(report_from_json_text("{}"), ValidationError);
}

TEST_CASE("property: sweeps match the literal equations, tuple for tuple") {
  auto const corpus = gen::corpus(0xfeed, 120, 4, "ab");
  int        checked = 0;
  for (auto const& d : corpus) {
    auto const m = transition_monoid(d);
    if (m.size() > 24) {
      continue;
    }
    ++checked;
    oracle::Naive const naive{m};
    auto const          st    = st_pairs(m);
    auto const          mod   = mod_pairs(m);
    auto const          order = syntactic_preorder(m);
    for (Exec exec : {Exec::serial, Exec::parallel}) {
      CHECK(oracle::first_violation(check_bpol_group(m, st, exec)) == naive.gone(st.pairs()));
      CHECK(oracle::first_violation(check_bpol_group(m, mod, exec)) == naive.gone(mod.pairs()));
      CHECK(oracle::first_violation(check_specialized(m, Specialized::simon, exec)) == naive.simon());
      CHECK(oracle::first_violation(check_specialized(m, Specialized::grbpol, exec)) == naive.grbpol());
      if (m.size() <= 12) {
        CHECK(oracle::first_violation(check_bpol_group_plus(m, st, exec)) == naive.wgone(st.pairs()));
        CHECK(oracle::first_violation(check_bpol_group_plus(m, mod, exec)) == naive.wgone(mod.pairs()));
        CHECK(oracle::first_violation(check_specialized(m, Specialized::knast, exec)) == naive.knast());
      }
    }
    CHECK(oracle::first_violation(check_pol(m, order, st)) == naive.polc(order, st.pairs()));
    CHECK(oracle::first_violation(check_pol_group(m, order, mod))
          == naive.polg(order, mod.right_of(m.identity())));
    CHECK(oracle::first_violation(check_pol_group_plus(m, order, st))
          == naive.polgp(order, st.right_of(m.identity())));
  }
  CHECK(checked > 60);
}

TEST_CASE("property: generic and specialized equations agree") {
  for (auto const& d : gen::standard_corpus()) {
    auto const m  = transition_monoid(d);
    auto const st = st_pairs(m);
    CHECK(check_bpol_group(m, st).member == check_specialized(m, Specialized::simon).member);
    CHECK(check_bpol_group_plus(m, st).member == check_specialized(m, Specialized::knast).member);
  }
}

TEST_CASE("property: the two Pol characterizations agree for group bases") {
  for (auto const& d : gen::standard_corpus()) {
    auto const m     = transition_monoid(d);
    auto const order = syntactic_preorder(m);
    for (auto const& pairs : {st_pairs(m), mod_pairs(m), amt_pairs(m)}) {
      CHECK(check_pol(m, order, pairs).member == check_pol_group(m, order, pairs).member);
    }
  }
}

TEST_CASE("property: witnesses re-evaluate") {
  for (auto const& d : gen::standard_corpus()) {
    auto const m     = transition_monoid(d);
    auto const order = syntactic_preorder(m);
    auto const st    = st_pairs(m);
    auto const mod   = mod_pairs(m);
    std::vector<Verdict> verdicts{check_pol(m, order, st),
                                  check_pol_group(m, order, st),
                                  check_pol_group_plus(m, order, mod),
                                  check_bpol_group(m, st),
                                  check_bpol_group_plus(m, mod),
                                  check_specialized(m, Specialized::simon),
                                  check_specialized(m, Specialized::knast),
                                  check_specialized(m, Specialized::grbpol)};
    for (auto const& v : verdicts) {
      INFO(to_string(v.equation));
      CHECK(reproduces(v, m, &order));
    }
  }
}

TEST_CASE("property: hierarchy sanity") {
  for (auto const& d : gen::standard_corpus()) {
    auto const m     = transition_monoid(d);
    auto const order = syntactic_preorder(m);
    auto const st    = st_pairs(m);
    auto const mod   = mod_pairs(m);
    for (auto const* pairs : {&st, &mod}) {
      bool pol       = check_pol_group(m, order, *pairs).member;
      bool pol_plus  = check_pol_group_plus(m, order, *pairs).member;
      bool bpol      = check_bpol_group(m, *pairs).member;
      bool bpol_plus = check_bpol_group_plus(m, *pairs).member;
      CHECK((!pol || bpol));
      CHECK((!pol_plus || bpol_plus));
      CHECK((!pol || pol_plus));
      CHECK((!bpol || bpol_plus));
    }
    // fewer pairs, fewer constraints
    CHECK((!check_bpol_group(m, st).member || check_bpol_group(m, mod).member));
    CHECK((!check_bpol_group_plus(m, st).member || check_bpol_group_plus(m, mod).member));
    CHECK((!check_pol_group(m, order, st).member || check_pol_group(m, order, mod).member));
  }
}

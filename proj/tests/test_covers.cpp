#include <doctest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "levelone/error.hpp"
#include "oracles.hpp"

using namespace levelone;
using helpers::dfa_of;
using helpers::monoid_of;

TEST_CASE("up_arrow: examples") {
  Dfa even = dfa_of("(aa)*", "a");
  CHECK(up_arrow(even, "") == even);
  CHECK(equivalent(up_arrow(even, "a"), dfa_of("a(aa)*", "a")));
  Dfa all = dfa_of("(a|b)*", "ab");
  CHECK(equivalent(up_arrow(all, "ab"), dfa_of("(a|b)*a(a|b)*b(a|b)*", "ab")));
  CHECK(equivalent(up_arrow(all, "bba"), dfa_of("(a|b)*b(a|b)*b(a|b)*a(a|b)*", "ab")));
  Dfa some = dfa_of("b*", "ab");
  CHECK(equivalent(up_arrow(some, "a"), dfa_of("b*ab*", "ab")));
}

TEST_CASE("up_arrow: monotone in L") {
  gen::Rng rng(41);
  Alphabet ab("ab");
  for (int i = 0; i < 40; ++i) {
    Dfa small = gen::random_dfa(rng, rng.between(1, 3), "ab");
    Dfa other = gen::random_dfa(rng, rng.between(1, 3), "ab");
    Dfa big   = combine(small, other, SetOp::unite);
    Word w    = gen::random_word(rng, ab, 3);
    CHECK(includes(up_arrow(big, w), up_arrow(small, w)).holds);
  }
}

TEST_CASE("identity kernel") {
  Dfa k = identity_kernel(dfa_of("(aa)*|a(aa)*", "a"));
  CHECK(k.state_count() == 1);  // the language is A*, whose group is trivial
  Dfa k3 = identity_kernel(dfa_of("(b|ab*ab*a)*(_|ab*)", "ab"));
  CHECK(equivalent(k3, dfa_of("(b|ab*ab*a)*", "ab")));
  CHECK_THROWS_AS(identity_kernel(dfa_of("a*b", "ab")), PreconditionError);
}

TEST_CASE("pgcov: examples") {
  Dfa all  = dfa_of("(a|b)*", "ab");
  auto one = pgcov_cover(all, all);
  CHECK(one.certified);
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].base == "");

  auto two = pgcov_cover(dfa_of("a*", "a"), dfa_of("(aa)*", "a"));
  CHECK(two.certified);
  REQUIRE(two.entries.size() == 2);
  CHECK(two.entries[0].base == "");
  CHECK(equivalent(two.entries[0].language, dfa_of("(aa)*", "a")));
  CHECK(two.entries[1].base == "a");
  CHECK(equivalent(two.entries[1].language, dfa_of("a(aa)*", "a")));

  auto ab = pgcov_cover(dfa_of("(ab)*", "ab"), all);
  CHECK(ab.certified);
  CHECK(ab.entries.size() == 1);

  CHECK_THROWS_AS(pgcov_cover(all, dfa_of("a*", "ab")), PreconditionError);
  CHECK_THROWS_AS(pgcov_cover(all, dfa_of("(a|b)((a|b)(a|b))*", "ab")), PreconditionError);
  auto partial = pgcov_cover(dfa_of("a*", "a"), dfa_of("(aaa)*", "a"), 1);
  CHECK_FALSE(partial.certified);
  CHECK(partial.entries.size() == 1);
}

TEST_CASE("property: random covers are certified antichains") {
  gen::Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    Dfa h = gen::random_minimal_dfa(rng, 4, "ab");
    Dfa l = gen::random_permutation_dfa(rng, rng.between(2, 3), "ab");
    auto c = pgcov_cover(h, l);
    CHECK(c.certified);
    CHECK(covers(c, h));
    CHECK_FALSE(antichain_violation(c, l).has_value());
    for (auto const& e : c.entries) {
      CHECK(h.accepts(e.base));
    }
    CHECK(pgcov_cover(h, l).entries.size() == c.entries.size());
  }
}

TEST_CASE("guarded decomposition: examples") {
  auto m2 = monoid_of("(a|b)*a(a|b)*", "ab");
  REQUIRE(m2.size() == 2);
  auto d = guarded_decomposition(m2, "aaa");
  CHECK(d.blocks == std::vector<Word>{"aaa"});
  CHECK(d.links.empty());

  auto triv = monoid_of("a*", "a");
  REQUIRE(triv.size() == 1);
  auto t = guarded_decomposition(triv, "aa");
  CHECK(t.blocks == std::vector<Word>{"a", "a"});
  CHECK(t.links == std::vector<Element>{triv.identity()});

  CHECK_THROWS_AS(guarded_decomposition(triv, ""), PreconditionError);
  CHECK_FALSE(decomposition_defect(triv, "aa", t).has_value());
  CHECK(decomposition_defect(triv, "aaa", t).has_value());
}

TEST_CASE("property: guarded decompositions") {
  gen::Rng rng(43);
  int      split = 0;
  for (int i = 0; i < 300; ++i) {
    Dfa const  d = gen::random_minimal_dfa(rng, 3, "ab");
    auto const m = transition_monoid(d);
    if (m.size() > 6) {
      continue;
    }
    Word w = gen::random_word(rng, d.alphabet(), 200);
    if (w.empty()) {
      w = "a";
    }
    auto const g = guarded_decomposition(m, w);
    CHECK(oracle::is_guarded_decomposition(m, w, g));
    CHECK_FALSE(decomposition_defect(m, w, g).has_value());
    CHECK((g.blocks.size() == 1) == (w.size() <= m.size() * m.size()));
    CHECK(g.blocks.size() <= w.size());
    CHECK(guarded_decomposition(m, w) == g);
    split += g.blocks.size() > 1 ? 1 : 0;
  }
  CHECK(split > 20);
}

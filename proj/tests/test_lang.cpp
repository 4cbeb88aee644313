#include <doctest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "levelone/error.hpp"
#include "oracles.hpp"

using namespace levelone;
using helpers::dfa_of;
using helpers::raw_dfa;
using N = PatternNode;

TEST_CASE("parse: grammar readings") {
  Alphabet ab("ab");
  CHECK(parse_pattern("a*ba*", ab).root
        == N::concat({N::star(N::letter('a')), N::letter('b'), N::star(N::letter('a'))}));
  CHECK(parse_pattern("_", ab).root == N::epsilon());
  CHECK(parse_pattern("(ab)*", ab).root == N::star(N::concat({N::letter('a'), N::letter('b')})));
  CHECK(parse_pattern("%", ab).root == N::empty());
  CHECK(parse_pattern("∅", ab).root == N::empty());
  CHECK(parse_pattern("a|b a", ab).root
        == N::alternation({N::letter('a'), N::concat({N::letter('b'), N::letter('a')})}));
  CHECK(parse_pattern("a+*", ab).root == N::star(N::plus(N::letter('a'))));
}

TEST_CASE("parse: errors carry positions") {
  Alphabet ab("ab");
  try {
    parse_pattern("ab(c)", ab);
    FAIL("accepted an undeclared symbol");
  } catch (ParseError const& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_pattern("(ab", ab), ParseError);
  CHECK_THROWS_AS(parse_pattern("ab)", ab), ParseError);
  CHECK_THROWS_AS(parse_pattern("a||b", ab), ParseError);
  CHECK_THROWS_AS(parse_pattern("*a", ab), ParseError);
}

TEST_CASE("parse: printer round trip") {
  gen::Rng rng(11);
  Alphabet ab("ab");
  for (int i = 0; i < 300; ++i) {
    N p = gen::random_pattern(rng, ab, 4);
    INFO(to_string(p));
    CHECK(parse_pattern(to_string(p), ab).root == p);
  }
}

TEST_CASE("compile: state counts") {
  Dfa ab = raw_dfa("(ab)*", "ab");
  CHECK(ab.state_count() == 3);
  CHECK(ab.accepts(""));
  CHECK(ab.accepts("abab"));
  CHECK_FALSE(ab.accepts("aba"));

  Dfa none = raw_dfa("∅", "ab");
  CHECK(none.state_count() == 1);
  CHECK(none.finals().empty());

  Dfa two_b = raw_dfa("a*ba*b(a|b)*", "ab");
  CHECK(two_b.state_count() == 3);
  CHECK(minimize(two_b).state_count() == 3);
}

TEST_CASE("compile: budget") {
  Limits tiny;
  tiny.max_states = 2;
  CHECK_THROWS_AS(compile_dfa(parse_pattern("(a|b)*a(a|b)(a|b)", Alphabet("ab")), tiny), BudgetError);
}

TEST_CASE("minimize") {
  // a* over {a, b} with three redundant copies of the accepting loop.
  Dfa redundant(Alphabet("ab"), 5, 0, {0, 1, 2}, {1, 3, 2, 4, 0, 3, 3, 3, 3, 3});
  Dfa small = minimize(redundant);
  CHECK(small.state_count() == 2);
  CHECK(equivalent(small, dfa_of("a*", "ab")));
  CHECK(minimize(small) == small);
  CHECK(dfa_of("(aa)*", "a").state_count() == 2);
  CHECK(dfa_of("a*", "a").state_count() == 1);
}

TEST_CASE("combine") {
  Dfa even = dfa_of("(aa)*", "a");
  Dfa odd  = dfa_of("a(aa)*", "a");
  CHECK_FALSE(shortest_accepted(combine(even, odd, SetOp::intersect)).has_value());

  Dfa l = dfa_of("a(ab)*b", "ab");
  CHECK(equivalent(combine(l, empty_dfa(l.alphabet()), SetOp::unite), l));

  CHECK(equivalent(combine(dfa_of("a*", "a"), dfa_of("_", "a"), SetOp::subtract), dfa_of("aa*", "a")));
  CHECK_THROWS_AS(combine(even, dfa_of("a", "ab"), SetOp::unite), AlphabetMismatch);
}

TEST_CASE("shortest accepted word") {
  CHECK_FALSE(shortest_accepted(dfa_of("∅", "ab")).has_value());
  CHECK(shortest_accepted(dfa_of("(ab)*", "ab")) == Word(""));
  CHECK(shortest_accepted(dfa_of("a*ba*b(a|b)*", "ab")) == Word("bb"));
  CHECK(shortest_accepted(dfa_of("(b|a)(a|b)", "ab")) == Word("aa"));
}

TEST_CASE("includes") {
  CHECK(includes(dfa_of("a*", "a"), dfa_of("(aa)*", "a")).holds);
  auto r = includes(dfa_of("(aa)*", "a"), dfa_of("a*", "a"));
  CHECK_FALSE(r.holds);
  CHECK(r.counterexample == Word("a"));
  CHECK(includes(dfa_of("(aa)*|a(aa)*", "a"), dfa_of("a*", "a")).holds);
}

TEST_CASE("permutation automata") {
  CHECK(is_permutation_automaton(dfa_of("(aa)*", "a")));
  CHECK(is_permutation_automaton(dfa_of("(b|ab*ab*a)*", "ab")));
  CHECK(is_permutation_automaton(dfa_of("(a|b)*", "ab")));
  CHECK_FALSE(is_permutation_automaton(dfa_of("a*ba*", "ab")));
  CHECK_FALSE(is_permutation_automaton(dfa_of("(ab)*", "ab")));
}

TEST_CASE("json format") {
  Dfa d = dfa_of("(ab)*", "ab");
  CHECK(dfa_from_json_text(to_json_text(d)) == d);
  CHECK(load_dfa(helpers::data_path("ab_star_dfa.json")) == d);
  CHECK_THROWS_AS(dfa_from_json_text(R"({"alphabet":["a"],"states":2,"initial":0,"finals":[0],"delta":{"a":[1]}})"),
                  ValidationError);
  CHECK_THROWS_AS(dfa_from_json_text(R"({"alphabet":["a"],"states":1,"initial":0,"finals":[0],"delta":{"a":[3]}})"),
                  ValidationError);
  CHECK_THROWS_AS(dfa_from_json_text(R"({"alphabet":["a","b"],"states":1,"initial":0,"finals":[],"delta":{"a":[0]}})"),
                  ValidationError);
}

TEST_CASE("property: compiled automata agree with the pattern") {
  gen::Rng rng(12);
  Alphabet ab("ab");
  for (int i = 0; i < 150; ++i) {
    Pattern p{ab, gen::random_pattern(rng, ab, 4)};
    Dfa     raw = compile_dfa(p);
    Dfa     min = minimize(raw);
    INFO(to_string(p));
    for (int k = 0; k < 100; ++k) {
      Word w = gen::random_word(rng, ab, 8);
      INFO(w);
      REQUIRE(min.accepts(w) == oracle::matches(p.root, w));
    }
    CHECK(includes(raw, min).holds);
    CHECK(includes(min, raw).holds);
    CHECK(minimize(min) == min);
  }
}

TEST_CASE("property: combine is pointwise") {
  gen::Rng rng(13);
  Alphabet ab("ab");
  for (int i = 0; i < 60; ++i) {
    Dfa x = gen::random_dfa(rng, rng.between(1, 5), "ab");
    Dfa y = gen::random_dfa(rng, rng.between(1, 5), "ab");
    Dfa u = combine(x, y, SetOp::unite);
    Dfa n = combine(x, y, SetOp::intersect);
    Dfa d = combine(x, y, SetOp::subtract);
    Dfa c = complement(x);
    for (int k = 0; k < 50; ++k) {
      Word w = gen::random_word(rng, ab, 10);
      CHECK(u.accepts(w) == (x.accepts(w) || y.accepts(w)));
      CHECK(n.accepts(w) == (x.accepts(w) && y.accepts(w)));
      CHECK(d.accepts(w) == (x.accepts(w) && !y.accepts(w)));
      CHECK(c.accepts(w) == !x.accepts(w));
    }
  }
}

TEST_CASE("property: permutation automata of group languages") {
  gen::Rng rng(14);
  for (int i = 0; i < 40; ++i) {
    Dfa g = minimize(gen::random_permutation_dfa(rng, rng.between(1, 4), "ab"));
    CHECK(is_permutation_automaton(g));
  }
  CHECK(is_permutation_automaton(dfa_of("(b|ab*ab*a)*", "ab")));
}

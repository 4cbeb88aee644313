#pragma once

// Hand-rolled random generators for the property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "levelone/dfa.hpp"
#include "levelone/pattern.hpp"

namespace gen {

  using namespace levelone;

  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }
    std::size_t between(std::size_t lo, std::size_t hi) {
      return lo + below(hi - lo + 1);
    }
    bool coin() {
      return below(2) == 0;
    }
    std::mt19937_64& engine() {
      return engine_;
    }

   private:
    std::mt19937_64 engine_;
  };

  // Uniform transitions, each state final with probability 1/2, initial 0.
  inline Dfa random_dfa(Rng& rng, std::size_t states, std::string const& symbols) {
    Alphabet           alphabet(symbols);
    std::vector<State> delta(states * alphabet.size());
    for (auto& d : delta) {
      d = static_cast<State>(rng.below(states));
    }
    std::vector<State> finals;
    for (State q = 0; q < states; ++q) {
      if (rng.coin()) {
        finals.push_back(q);
      }
    }
    return Dfa(alphabet, states, 0, finals, delta);
  }

  // 1..max_states states before minimization.
  inline Dfa random_minimal_dfa(Rng& rng, std::size_t max_states, std::string const& symbols) {
    return minimize(random_dfa(rng, rng.between(1, max_states), symbols));
  }

  inline std::vector<Dfa> corpus(std::uint64_t seed, std::size_t count, std::size_t max_states,
                                 std::string const& symbols) {
    Rng              rng(seed);
    std::vector<Dfa> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(random_minimal_dfa(rng, max_states, symbols));
    }
    return out;
  }

  // The random corpus shared by the equivalence, invariant and hierarchy
  // checks: minimal complete DFAs with at most 5 states over {a, b}.
  inline std::vector<Dfa> standard_corpus() {
    return corpus(0x5eed0001, 200, 5, "ab");
  }

  inline Word random_word(Rng& rng, Alphabet const& alphabet, std::size_t max_length) {
    Word w(rng.below(max_length + 1), ' ');
    for (auto& c : w) {
      c = alphabet.symbol(static_cast<Letter>(rng.below(alphabet.size())));
    }
    return w;
  }

  inline PatternNode random_pattern(Rng& rng, Alphabet const& alphabet, int depth) {
    if (depth <= 0 || rng.below(4) == 0) {
      switch (rng.below(8)) {
        case 0: return PatternNode::empty();
        case 1: return PatternNode::epsilon();
        default: return PatternNode::letter(alphabet.symbol(static_cast<Letter>(rng.below(alphabet.size()))));
      }
    }
    switch (rng.below(4)) {
      case 0: return PatternNode::star(random_pattern(rng, alphabet, depth - 1));
      case 1: return PatternNode::plus(random_pattern(rng, alphabet, depth - 1));
      default: {
        std::vector<PatternNode> children;
        std::size_t              n = rng.between(2, 3);
        for (std::size_t i = 0; i < n; ++i) {
          children.push_back(random_pattern(rng, alphabet, depth - 1));
        }
        return rng.coin() ? PatternNode::concat(std::move(children))
                          : PatternNode::alternation(std::move(children));
      }
    }
  }

  // Every letter permutes the states; state 0 is initial and final.
  inline Dfa random_permutation_dfa(Rng& rng, std::size_t states, std::string const& symbols) {
    Alphabet           alphabet(symbols);
    std::vector<State> delta(states * alphabet.size());
    for (Letter a = 0; a < alphabet.size(); ++a) {
      std::vector<State> perm(states);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng.engine());
      for (State q = 0; q < states; ++q) {
        delta[q * alphabet.size() + a] = perm[q];
      }
    }
    std::vector<State> finals{0};
    for (State q = 1; q < states; ++q) {
      if (rng.coin()) {
        finals.push_back(q);
      }
    }
    return Dfa(alphabet, states, 0, finals, delta);
  }

}  // namespace gen

// Serial reference kernels against their OpenMP counterparts on random
// automata with sizeable transition monoids.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "levelone/membership.hpp"

using namespace levelone;

namespace {

  Dfa random_dfa(std::mt19937& rng, std::size_t states, std::string const& symbols) {
    Alphabet           alphabet(symbols);
    std::vector<State> delta(states * alphabet.size());
    std::vector<State> finals;
    std::uniform_int_distribution<State> pick(0, static_cast<State>(states - 1));
    for (auto& d : delta) {
      d = pick(rng);
    }
    for (State q = 0; q < states; ++q) {
      if (rng() % 2 == 0) {
        finals.push_back(q);
      }
    }
    return minimize(Dfa(alphabet, states, 0, finals, delta));
  }

  double millis(std::function<void()> const& f, int repeat = 3) {
    double best = 1e300;
    for (int i = 0; i < repeat; ++i) {
      auto start = std::chrono::steady_clock::now();
      f();
      auto stop = std::chrono::steady_clock::now();
      best      = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
  }

  void row(char const* name, double serial, double parallel, bool same) {
    std::printf("%-28s %10.2f %10.2f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
                same ? "identical" : "MISMATCH");
  }

}  // namespace

int main() {
  std::mt19937 rng(20261016);
  // Pick a DFA whose monoid is large enough to time.
  Dfa dfa;
  for (int tries = 0; tries < 200; ++tries) {
    dfa = random_dfa(rng, 6, "ab");
    if (auto m = transition_monoid(dfa, Limits{}, Exec::serial); m.size() >= 1500) {
      break;
    }
  }
  auto const m = transition_monoid(dfa, Limits{}, Exec::serial);
  std::printf("automaton: %zu states, monoid: %zu elements, |E(S)| = %zu\n\n", dfa.state_count(),
              m.size(), m.idempotents_of_nonempty_image().size());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  {
    SyntacticMorphism a = m, b = m;
    double s = millis([&] { a = transition_monoid(dfa, Limits{}, Exec::serial); });
    double p = millis([&] { b = transition_monoid(dfa, Limits{}, Exec::parallel); });
    row("multiplication table", s, p, std::equal(a.table().begin(), a.table().end(), b.table().begin()));
  }
  {
    OrderRelation a, b;
    double s = millis([&] { a = syntactic_preorder(m, Exec::serial); });
    double p = millis([&] { b = syntactic_preorder(m, Exec::parallel); });
    row("syntactic order", s, p, a == b);
  }
  {
    Verdict a, b;
    double s = millis([&] { a = check_specialized(m, Specialized::simon, Exec::serial); });
    double p = millis([&] { b = check_specialized(m, Specialized::simon, Exec::parallel); });
    row("Simon sweep", s, p, a == b);
  }
  {
    Verdict a, b;
    auto    pairs = st_pairs(m);
    double  s     = millis([&] { a = check_bpol_group(m, pairs, Exec::serial); }, 1);
    double  p     = millis([&] { b = check_bpol_group(m, pairs, Exec::parallel); }, 1);
    row("BPol(ST) sweep", s, p, a == b);
  }
  {
    Verdict a, b;
    auto    pairs = mod_pairs(m);
    double  s     = millis([&] { a = check_bpol_group_plus(m, pairs, Exec::serial); }, 1);
    double  p     = millis([&] { b = check_bpol_group_plus(m, pairs, Exec::parallel); }, 1);
    row("BPol(MOD+) sweep", s, p, a == b);
  }
  return 0;
}

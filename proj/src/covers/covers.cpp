#include "levelone/covers.hpp"

#include "../lang/nfa.hpp"
#include "levelone/error.hpp"

namespace levelone {

  Dfa up_arrow(Dfa const& language, std::string_view word, Limits const& limits) {
    Alphabet const&   alphabet = language.alphabet();
    std::size_t const n        = language.state_count();
    std::size_t const copies   = word.size() + 1;

    detail::Nfa nfa;
    nfa.alphabet = alphabet;
    for (std::size_t c = 0; c < copies; ++c) {
      for (State q = 0; q < n; ++q) {
        nfa.add_state(c + 1 == copies && language.is_final(q));
      }
    }
    auto id = [n](std::size_t c, State q) { return static_cast<State>(c * n + q); };
    nfa.initial = id(0, language.initial());
    for (std::size_t c = 0; c < copies; ++c) {
      for (State q = 0; q < n; ++q) {
        for (Letter a = 0; a < alphabet.size(); ++a) {
          nfa.add_edge(id(c, q), a, id(c, language.next(q, a)));
        }
        if (c + 1 < copies && language.is_final(q)) {
          nfa.add_edge(id(c, q), alphabet.index(word[c]), id(c + 1, language.initial()));
        }
      }
    }
    return minimize(detail::determinize(nfa, limits));
  }

  Dfa identity_kernel(Dfa const& group_language) {
    Dfa const minimal = minimize(group_language);
    if (!is_permutation_automaton(minimal)) {
      throw PreconditionError("not a group language: the minimal automaton is not a permutation "
                              "automaton");
    }
    auto const        m = transition_monoid(minimal, Limits{}, Exec::serial);
    std::size_t const k = minimal.alphabet().size();
    std::vector<State> delta(m.size() * k);
    for (Element g = 0; g < m.size(); ++g) {
      for (Letter a = 0; a < k; ++a) {
        delta[g * k + a] = m.right_letter(g, a);
      }
    }
    return minimize(Dfa(minimal.alphabet(), m.size(), m.identity(), {m.identity()}, std::move(delta)));
  }

  CoverResult pgcov_cover(Dfa const&    cover_target,
                          Dfa const&    group_language,
                          std::size_t   max_bases,
                          Limits const& limits) {
    if (!(cover_target.alphabet() == group_language.alphabet())) {
      throw AlphabetMismatch("cover: H and L use different alphabets");
    }
    Dfa const language = minimize(group_language);
    if (!is_permutation_automaton(language)) {
      throw PreconditionError("cover: L is not a group language");
    }
    if (!language.accepts("")) {
      throw PreconditionError("cover: L does not contain the empty word");
    }

    CoverResult out;
    Dfa         covered = empty_dfa(language.alphabet());
    while (true) {
      Inclusion inc = includes(covered, cover_target);
      if (inc.holds) {
        out.certified = true;
        break;
      }
      if (out.entries.size() >= max_bases) {
        break;
      }
      Word base = *inc.counterexample;
      Dfa  up   = up_arrow(language, base, limits);
      covered   = minimize(combine(covered, up, SetOp::unite, limits));
      out.entries.push_back({std::move(base), std::move(up)});
    }
    return out;
  }

  bool covers(CoverResult const& cover, Dfa const& cover_target, Limits const& limits) {
    Dfa covered = empty_dfa(cover_target.alphabet());
    for (auto const& entry : cover.entries) {
      covered = minimize(combine(covered, entry.language, SetOp::unite, limits));
    }
    return includes(covered, cover_target).holds;
  }

  std::optional<std::pair<std::size_t, std::size_t>>
  antichain_violation(CoverResult const& cover, Dfa const& group_language, Limits const& limits) {
    Dfa const kernel = identity_kernel(group_language);
    for (std::size_t j = 0; j < cover.entries.size(); ++j) {
      Dfa const up = up_arrow(kernel, cover.entries[j].base, limits);
      for (std::size_t i = 0; i < cover.entries.size(); ++i) {
        if (i != j && up.accepts(cover.entries[i].base)) {
          return std::pair{i, j};
        }
      }
    }
    return std::nullopt;
  }

}  // namespace levelone

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levelone/alphabet.hpp"
#include "levelone/limits.hpp"
#include "levelone/pattern.hpp"

namespace levelone {

  using State = std::uint32_t;

  // Complete deterministic automaton. delta is row-major: delta[q * |A| + a].
  class Dfa {
   public:
    Dfa() = default;
    // Throws ValidationError unless the table is total and in range.
    Dfa(Alphabet           alphabet,
        std::size_t        state_count,
        State              initial,
        std::vector<State> finals,
        std::vector<State> delta);

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    std::size_t state_count() const noexcept {
      return final_.size();
    }
    State initial() const noexcept {
      return initial_;
    }
    bool is_final(State q) const {
      return final_[q];
    }
    std::vector<State> finals() const;
    State next(State q, Letter a) const {
      return delta_[q * alphabet_.size() + a];
    }
    std::vector<State> const& table() const noexcept {
      return delta_;
    }

    State run(State from, std::string_view word) const;
    bool accepts(std::string_view word) const {
      return is_final(run(initial_, word));
    }

    bool operator==(Dfa const&) const = default;

   private:
    Alphabet           alphabet_;
    State              initial_ = 0;
    std::vector<bool>  final_;
    std::vector<State> delta_;
  };

  // Glushkov automaton, subset construction, completion with a sink; the
  // result is minimized.
  // Throws BudgetError past limits.max_states.
  Dfa compile_dfa(Pattern const& pattern, Limits const& limits = {});

  // Minimal complete automaton, states numbered in BFS order from the initial
  // state over the sorted alphabet.
  Dfa minimize(Dfa const& dfa);

  // Restriction to reachable states with BFS numbering.
  Dfa canonicalize(Dfa const& dfa);

  enum class SetOp { unite, intersect, subtract };

  // Product construction over reachable pairs. Throws AlphabetMismatch.
  Dfa combine(Dfa const& x, Dfa const& y, SetOp op, Limits const& limits = {});

  Dfa complement(Dfa const& dfa);

  // Shortest accepted word, ties broken by alphabet order; nullopt iff the
  // language is empty.
  std::optional<Word> shortest_accepted(Dfa const& dfa);

  struct Inclusion {
    bool holds = true;
    // Shortest word of inner \ outer when !holds.
    std::optional<Word> counterexample;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // L(inner) ⊆ L(outer). Throws AlphabetMismatch.
  Inclusion includes(Dfa const& outer, Dfa const& inner);

  bool equivalent(Dfa const& x, Dfa const& y);

  // Every letter permutes the states. On a minimal automaton this holds
  // exactly for group languages.
  bool is_permutation_automaton(Dfa const& dfa);

  // The automaton accepting A* over the given alphabet (one state).
  Dfa universal_dfa(Alphabet const& alphabet);
  Dfa empty_dfa(Alphabet const& alphabet);

  // JSON form: {"alphabet":["a","b"],"states":3,"initial":0,"finals":[0],
  //             "delta":{"a":[1,2,2],"b":[2,0,2]}}
  std::string to_json_text(Dfa const& dfa);
  Dfa         dfa_from_json_text(std::string const& text);
  Dfa         load_dfa(std::string const& path);
  void        save_dfa(Dfa const& dfa, std::string const& path);

}  // namespace levelone

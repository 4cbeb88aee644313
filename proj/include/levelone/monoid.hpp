#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "levelone/dfa.hpp"

namespace levelone {

  using Element = std::uint32_t;

  // Transition monoid of a minimal complete automaton, i.e. its syntactic
  // monoid together with the morphism from words. Elements are numbered in
  // the shortlex order of their shortest witness words, so element 0 is the
  // identity (witness: the empty word).
  class SyntacticMorphism {
   public:
    std::size_t size() const noexcept {
      return witness_.size();
    }
    Alphabet const& alphabet() const noexcept {
      return source_.alphabet();
    }
    // The minimal automaton the monoid was built from.
    Dfa const& source() const noexcept {
      return source_;
    }

    Element identity() const noexcept {
      return 0;
    }
    Element multiply(Element x, Element y) const {
      return table_[static_cast<std::size_t>(x) * size() + y];
    }
    std::span<Element const> table() const noexcept {
      return table_;
    }
    Element letter_image(Letter a) const {
      return letter_image_[a];
    }
    // x * alpha(a), without a table lookup.
    Element right_letter(Element x, Letter a) const {
      return right_cayley_[static_cast<std::size_t>(x) * alphabet().size() + a];
    }

    bool is_accepting(Element x) const {
      return accepting_[x];
    }
    std::vector<Element> accepting() const;

    // Shortest word mapping to x (ties broken by alphabet order).
    Word const& witness(Element x) const {
      return witness_[x];
    }

    // Membership in S = alpha(A+).
    bool in_nonempty_image(Element x) const {
      return nonempty_[x];
    }
    std::vector<Element> nonempty_image() const;
    // E(S), increasing.
    std::vector<Element> const& idempotents_of_nonempty_image() const noexcept {
      return idempotents_s_;
    }
    // E(M), increasing.
    std::vector<Element> const& idempotents() const noexcept {
      return idempotents_m_;
    }
    bool is_idempotent(Element x) const {
      return multiply(x, x) == x;
    }

    // The unique idempotent power of x.
    Element omega(Element x) const {
      return omega_[x];
    }
    // x^omega * x.
    Element omega_plus(Element x) const {
      return multiply(omega_[x], x);
    }

    // State map q -> q.x of the element on the source automaton.
    std::span<State const> transformation(Element x) const {
      std::size_t n = source_.state_count();
      return {transformations_.data() + static_cast<std::size_t>(x) * n, n};
    }

    // Throws UnknownSymbol.
    Element evaluate(std::string_view word) const;

   private:
    friend SyntacticMorphism transition_monoid(Dfa const&, Limits const&, Exec);

    Dfa                  source_;
    std::vector<State>   transformations_;
    std::vector<Element> table_;
    std::vector<Element> right_cayley_;
    std::vector<Element> letter_image_;
    std::vector<Element> parent_;
    std::vector<Letter>  last_letter_;
    std::vector<bool>    accepting_;
    std::vector<bool>    nonempty_;
    std::vector<Word>    witness_;
    std::vector<Element> omega_;
    std::vector<Element> idempotents_s_;
    std::vector<Element> idempotents_m_;
  };

  // Requires a minimal complete automaton (minimize() output). Throws
  // BudgetError past limits.max_elements.
  SyntacticMorphism transition_monoid(Dfa const&    minimal,
                                      Limits const& limits = {},
                                      Exec          exec   = Exec::parallel);

  // Syntactic order: s <= t iff every accepting context of s accepts t.
  class OrderRelation {
   public:
    OrderRelation() = default;
    explicit OrderRelation(std::size_t n) : n_(n), leq_(n * n, 0) {}

    std::size_t size() const noexcept {
      return n_;
    }
    bool operator()(Element s, Element t) const {
      return leq_[static_cast<std::size_t>(s) * n_ + t] != 0;
    }
    void set(Element s, Element t, bool value) {
      leq_[static_cast<std::size_t>(s) * n_ + t] = value ? 1 : 0;
    }
    // Row of s as a string of '0'/'1'.
    std::string row_bits(Element s) const;

    bool operator==(OrderRelation const&) const = default;

   private:
    std::size_t               n_ = 0;
    std::vector<std::uint8_t> leq_;
  };

  OrderRelation syntactic_preorder(SyntacticMorphism const& m,
                                   Exec                     exec = Exec::parallel);

  // The sequence T_i = alpha(A^i) up to its first repetition.
  struct StableInfo {
    std::vector<std::vector<Element>> sets;  // T_0 .. T_{threshold + period - 1}
    std::size_t                       threshold = 0;
    std::size_t                       period    = 1;

    // T_i for any i >= 0, using periodicity past the threshold.
    std::vector<Element> const& at(std::size_t i) const;
  };

  StableInfo stable_sequence(SyntacticMorphism const& m);

  // Monoid dump: elements with witnesses, table, accepting set, S, E(S) and
  // the order matrix as bitstrings.
  std::string monoid_to_json_text(SyntacticMorphism const& m, OrderRelation const& order);

}  // namespace levelone

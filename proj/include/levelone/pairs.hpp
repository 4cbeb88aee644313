#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levelone/monoid.hpp"

namespace levelone {

  enum class Basis { st, mod, amt, custom, explicit_set };

  struct WitnessPair {
    Word left;
    Word right;

    bool operator==(WitnessPair const&) const = default;
  };

  // A subset of M x M. Pairs coming from a group basis carry words (u, v)
  // with alpha(u) = s and alpha(v) = t.
  class PairRelation {
   public:
    PairRelation() = default;
    PairRelation(Basis basis, std::size_t element_count, std::string group_id = {});

    Basis basis() const noexcept {
      return basis_;
    }
    std::string const& group_id() const noexcept {
      return group_id_;
    }
    // "ST", "MOD", "AMT", "CUSTOM(<id>)" or "EXPLICIT".
    std::string label() const;
    std::size_t element_count() const noexcept {
      return n_;
    }

    bool contains(Element s, Element t) const {
      return member_[cell(s, t)] != 0;
    }
    std::size_t count() const noexcept {
      return count_;
    }
    // All pairs in lexicographic order.
    std::vector<std::pair<Element, Element>> pairs() const;
    // Elements s with (s0, s) in the relation.
    std::vector<Element> right_of(Element s0) const;

    std::optional<WitnessPair> witness(Element s, Element t) const;

    // False when a stability certificate could not be established (AMT).
    bool certified() const noexcept {
      return certified_;
    }
    // Modulus of the Parikh group the AMT relation was computed with.
    std::uint64_t modulus() const noexcept {
      return modulus_;
    }

    bool is_subset_of(PairRelation const& other) const;
    bool same_pairs(PairRelation const& other) const {
      return n_ == other.n_ && member_ == other.member_;
    }

    void add(Element s, Element t, std::optional<WitnessPair> const& witness = std::nullopt);
    void set_certified(bool value) noexcept {
      certified_ = value;
    }
    void set_modulus(std::uint64_t value) noexcept {
      modulus_ = value;
    }

    static PairRelation from_pairs(std::size_t                                     element_count,
                                   std::vector<std::pair<Element, Element>> const& pairs);

   private:
    std::size_t cell(Element s, Element t) const {
      return static_cast<std::size_t>(s) * n_ + t;
    }

    static constexpr std::uint32_t kNoWord = static_cast<std::uint32_t>(-1);

    Basis                      basis_ = Basis::explicit_set;
    std::string                group_id_;
    std::size_t                n_     = 0;
    std::size_t                count_ = 0;
    std::vector<std::uint8_t>  member_;
    std::vector<std::uint32_t> left_word_;
    std::vector<std::uint32_t> right_word_;
    std::vector<Word>          words_;
    std::map<Word, std::uint32_t> word_ids_;
    bool                       certified_ = true;
    std::uint64_t              modulus_   = 0;
  };

  // A finite group given by its multiplication table and the images of the
  // letters (a group morphism from A*).
  struct FiniteGroup {
    std::string          id;
    std::size_t          order = 0;
    std::vector<Element> table;  // order x order, row-major
    std::map<char, Element> letter_image;

    Element multiply(Element g, Element h) const {
      return table[static_cast<std::size_t>(g) * order + h];
    }
    // Throws ValidationError unless the table is a group (closed,
    // associative, with identity and inverses) and every letter of the
    // alphabet has an image.
    Element validate(Alphabet const& alphabet) const;

    // Z/m with every letter mapped to 1 (word length mod m).
    static FiniteGroup length_modulo(std::size_t m, Alphabet const& alphabet);
    // (Z/q)^A with letter a mapped to its unit vector (Parikh vector mod q).
    static FiniteGroup parikh_modulo(std::size_t q, Alphabet const& alphabet);
  };

  // {"elements":n,"table":[[...]],"letter_image":{"a":i,...}}
  FiniteGroup group_from_json_text(std::string const& text, std::string id = "custom");
  FiniteGroup load_group(std::string const& path);

  PairRelation st_pairs(SyntacticMorphism const& m);

  // {(alpha(u), alpha(v)) : beta(u) = beta(v)} for the morphism beta given by
  // the group. Throws ValidationError for a non-group table and BudgetError
  // when |G| * |M| exceeds limits.max_group_nodes.
  PairRelation group_morphism_pairs(SyntacticMorphism const& m,
                                    FiniteGroup const&       group,
                                    Limits const&            limits = {});

  // Pairs not separable by a length-modulo language, from the ultimately
  // periodic sequence alpha(A^i).
  PairRelation mod_pairs(SyntacticMorphism const& m, Limits const& limits = {});

  // Pairs not separable by a Parikh-modulo language, decided exactly from
  // the Parikh images of the preimages (modulus() is then 0). Past the
  // budget the relation is computed for one modulus q and checked against
  // q * r for primes r <= |M|; certified() is false when that check could
  // not be completed.
  PairRelation amt_pairs(SyntacticMorphism const& m, Limits const& limits = {});

  // {"basis":"MOD","certified":true,"pairs":[[s,t,u,v],...]}; words are null
  // when absent.
  std::string pairs_to_json_text(PairRelation const& relation);

}  // namespace levelone

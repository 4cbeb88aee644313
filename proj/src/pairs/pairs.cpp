#include "levelone/pairs.hpp"

#include <numeric>
#include <queue>

#include "levelone/error.hpp"
#include "parikh_closure.hpp"

namespace levelone {

  ////////////////////////////////////////////////////////////////////////
  // PairRelation
  ////////////////////////////////////////////////////////////////////////

  PairRelation::PairRelation(Basis basis, std::size_t element_count, std::string group_id)
      : basis_(basis),
        group_id_(std::move(group_id)),
        n_(element_count),
        member_(element_count * element_count, 0),
        left_word_(element_count * element_count, kNoWord),
        right_word_(element_count * element_count, kNoWord) {}

  std::string PairRelation::label() const {
    switch (basis_) {
      case Basis::st:
        return "ST";
      case Basis::mod:
        return "MOD";
      case Basis::amt:
        return "AMT";
      case Basis::custom:
        return "CUSTOM(" + group_id_ + ")";
      case Basis::explicit_set:
        return "EXPLICIT";
    }
    return "?";
  }

  std::vector<std::pair<Element, Element>> PairRelation::pairs() const {
    std::vector<std::pair<Element, Element>> out;
    out.reserve(count_);
    for (Element s = 0; s < n_; ++s) {
      for (Element t = 0; t < n_; ++t) {
        if (contains(s, t)) {
          out.emplace_back(s, t);
        }
      }
    }
    return out;
  }

  std::vector<Element> PairRelation::right_of(Element s0) const {
    std::vector<Element> out;
    for (Element t = 0; t < n_; ++t) {
      if (contains(s0, t)) {
        out.push_back(t);
      }
    }
    return out;
  }

  std::optional<WitnessPair> PairRelation::witness(Element s, Element t) const {
    auto c = cell(s, t);
    if (!member_[c] || left_word_[c] == kNoWord) {
      return std::nullopt;
    }
    return WitnessPair{words_[left_word_[c]], words_[right_word_[c]]};
  }

  bool PairRelation::is_subset_of(PairRelation const& other) const {
    if (n_ != other.n_) {
      return false;
    }
    for (std::size_t c = 0; c < member_.size(); ++c) {
      if (member_[c] && !other.member_[c]) {
        return false;
      }
    }
    return true;
  }

  void PairRelation::add(Element s, Element t, std::optional<WitnessPair> const& witness) {
    auto c = cell(s, t);
    if (!member_[c]) {
      member_[c] = 1;
      ++count_;
    }
    if (witness && left_word_[c] == kNoWord) {
      auto intern = [&](Word const& w) {
        auto [it, inserted] = word_ids_.emplace(w, static_cast<std::uint32_t>(words_.size()));
        if (inserted) {
          words_.push_back(w);
        }
        return it->second;
      };
      left_word_[c]  = intern(witness->left);
      right_word_[c] = intern(witness->right);
    }
  }

  PairRelation PairRelation::from_pairs(std::size_t                                     element_count,
                                        std::vector<std::pair<Element, Element>> const& pairs) {
    PairRelation relation(Basis::explicit_set, element_count);
    for (auto [s, t] : pairs) {
      if (s >= element_count || t >= element_count) {
        throw ValidationError("pair element out of range");
      }
      relation.add(s, t);
    }
    return relation;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  PairRelation st_pairs(SyntacticMorphism const& m) {
    PairRelation relation(Basis::st, m.size());
    for (Element s = 0; s < m.size(); ++s) {
      for (Element t = 0; t < m.size(); ++t) {
        relation.add(s, t, WitnessPair{m.witness(s), m.witness(t)});
      }
    }
    return relation;
  }

  namespace {

    // A group morphism seen as a letter action on group elements.
    struct LetterAction {
      std::size_t          order    = 1;
      Element              identity = 0;
      std::vector<Element> step;  // step[g * |A| + a] = g * beta(a)
    };

    // Reachable nodes (beta(w), alpha(w)) of G x M, explored breadth first
    // over the sorted alphabet; pairs are the (s, t) sharing a group
    // component.
    void saturate(SyntacticMorphism const& m,
                  LetterAction const&      action,
                  Limits const&            limits,
                  bool                     with_witnesses,
                  PairRelation&            relation) {
      std::size_t const n = m.size();
      std::size_t const k = m.alphabet().size();
      if (action.order > limits.max_group_nodes / n) {
        throw BudgetError("group saturation needs " + std::to_string(action.order) + " x "
                          + std::to_string(n) + " nodes, over the budget of "
                          + std::to_string(limits.max_group_nodes));
      }
      constexpr std::uint32_t    unseen = static_cast<std::uint32_t>(-1);
      std::size_t const          nodes  = action.order * n;
      std::vector<std::uint32_t> parent(nodes, unseen);
      std::vector<Letter>        via(with_witnesses ? nodes : 0, 0);
      std::queue<std::size_t>    queue;
      std::size_t const          start = static_cast<std::size_t>(action.identity) * n + m.identity();
      parent[start]                    = static_cast<std::uint32_t>(start);
      queue.push(start);
      while (!queue.empty()) {
        std::size_t node = queue.front();
        queue.pop();
        Element g = static_cast<Element>(node / n);
        Element x = static_cast<Element>(node % n);
        for (Letter a = 0; a < k; ++a) {
          std::size_t next = static_cast<std::size_t>(action.step[g * k + a]) * n
                             + m.right_letter(x, a);
          if (parent[next] == unseen) {
            parent[next] = static_cast<std::uint32_t>(node);
            if (with_witnesses) {
              via[next] = a;
            }
            queue.push(next);
          }
        }
      }

      auto word_of = [&](std::size_t node) {
        Word w;
        while (node != start) {
          w.push_back(m.alphabet().symbol(via[node]));
          node = parent[node];
        }
        return Word(w.rbegin(), w.rend());
      };

      std::vector<Element> reached;
      std::vector<Word>    words;
      for (std::size_t g = 0; g < action.order; ++g) {
        reached.clear();
        words.clear();
        for (Element x = 0; x < n; ++x) {
          if (parent[g * n + x] != unseen) {
            reached.push_back(x);
            if (with_witnesses) {
              words.push_back(word_of(g * n + x));
            }
          }
        }
        for (std::size_t i = 0; i < reached.size(); ++i) {
          for (std::size_t j = 0; j < reached.size(); ++j) {
            if (with_witnesses) {
              relation.add(reached[i], reached[j], WitnessPair{words[i], words[j]});
            } else {
              relation.add(reached[i], reached[j]);
            }
          }
        }
      }
    }

    LetterAction action_of(FiniteGroup const& group, Alphabet const& alphabet) {
      LetterAction action;
      action.order    = group.order;
      action.identity = group.validate(alphabet);
      action.step.resize(group.order * alphabet.size());
      for (Element g = 0; g < group.order; ++g) {
        for (Letter a = 0; a < alphabet.size(); ++a) {
          action.step[g * alphabet.size() + a] =
              group.multiply(g, group.letter_image.at(alphabet.symbol(a)));
        }
      }
      return action;
    }

    // (Z/q)^A in mixed radix; letter a adds q^a.
    LetterAction parikh_action(std::uint64_t q, std::size_t letters, Limits const& limits, std::size_t n) {
      std::uint64_t order = 1;
      for (std::size_t i = 0; i < letters; ++i) {
        if (order > limits.max_group_nodes / q) {
          throw BudgetError("Parikh group modulo " + std::to_string(q) + " is too large");
        }
        order *= q;
      }
      if (order > limits.max_group_nodes / n) {
        throw BudgetError("Parikh group modulo " + std::to_string(q) + " is too large");
      }
      LetterAction action;
      action.order = order;
      action.step.resize(order * letters);
      for (std::uint64_t g = 0; g < order; ++g) {
        std::uint64_t weight = 1;
        for (std::size_t a = 0; a < letters; ++a) {
          std::uint64_t digit = (g / weight) % q;
          std::uint64_t next  = digit + 1 == q ? g - digit * weight : g + weight;
          action.step[g * letters + a] = static_cast<Element>(next);
          weight *= q;
        }
      }
      return action;
    }

    bool is_prime(std::size_t r) {
      if (r < 2) {
        return false;
      }
      for (std::size_t d = 2; d * d <= r; ++d) {
        if (r % d == 0) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  PairRelation group_morphism_pairs(SyntacticMorphism const& m,
                                    FiniteGroup const&       group,
                                    Limits const&            limits) {
    PairRelation relation(Basis::custom, m.size(), group.id);
    saturate(m, action_of(group, m.alphabet()), limits, true, relation);
    return relation;
  }

  PairRelation mod_pairs(SyntacticMorphism const& m, Limits const& limits) {
    StableInfo const  info  = stable_sequence(m);
    std::size_t const n     = m.size();
    std::size_t const k     = m.alphabet().size();
    std::size_t const depth = info.threshold + 2 * info.period;
    if (depth > limits.max_group_nodes / n) {
      throw BudgetError("length-residue search exceeds the budget");
    }

    // words[i][x]: shortlex-least word of length i evaluating to x
    std::vector<std::vector<Word>> words(depth, std::vector<Word>(n));
    std::vector<std::vector<bool>> has(depth, std::vector<bool>(n, false));
    has[0][m.identity()] = true;
    for (std::size_t i = 0; i + 1 < depth; ++i) {
      for (Element x = 0; x < n; ++x) {
        if (!has[i][x]) {
          continue;
        }
        for (Letter a = 0; a < k; ++a) {
          Element y = m.right_letter(x, a);
          Word    w = words[i][x] + m.alphabet().symbol(a);
          if (!has[i + 1][y] || w < words[i + 1][y]) {
            has[i + 1][y]   = true;
            words[i + 1][y] = std::move(w);
          }
        }
      }
    }

    PairRelation relation(Basis::mod, n);
    for (std::size_t i = 0; i < depth; ++i) {
      for (std::size_t j = 0; j < depth; ++j) {
        bool congruent = (i % info.period) == (j % info.period);
        if (!congruent || (i != j && std::max(i, j) < info.threshold)) {
          continue;
        }
        for (Element s : info.at(i)) {
          for (Element t : info.at(j)) {
            if (!relation.contains(s, t)) {
              relation.add(s, t, WitnessPair{words[i][s], words[j][t]});
            }
          }
        }
      }
    }
    return relation;
  }

  PairRelation amt_pairs(SyntacticMorphism const& m, Limits const& limits) {
    if (auto exact = detail::amt_pairs_exact(m, limits)) {
      exact->set_certified(true);
      exact->set_modulus(0);
      return std::move(*exact);
    }

    // Too many cosets: fall back to one modulus, refined by primes while
    // the budget allows.
    std::size_t const n = m.size();
    std::size_t const k = m.alphabet().size();

    auto fits = [&](std::uint64_t q) {
      std::uint64_t order = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (order > limits.max_group_nodes / q) {
          return false;
        }
        order *= q;
      }
      return order <= limits.max_group_nodes / n;
    };

    // Start from lcm(1..|M|) when the Parikh group stays within budget,
    // otherwise from the exponent of M (lcm of the element periods).
    std::uint64_t q = 1;
    for (std::uint64_t i = 2; i <= n && q < limits.max_group_nodes; ++i) {
      q = std::lcm(q, i);
    }
    if (!fits(q)) {
      q = 1;
      for (Element x = 0; x < n; ++x) {
        Element       base   = m.omega(x);
        Element       z      = m.multiply(base, x);
        std::uint64_t period = 1;
        while (z != base) {
          z = m.multiply(z, x);
          ++period;
        }
        q = std::lcm(q, period);
      }
    }

    auto relation_for = [&](std::uint64_t modulus) {
      PairRelation r(Basis::amt, n);
      saturate(m, parikh_action(modulus, k, limits, n), limits, false, r);
      return r;
    };

    bool         certified = fits(q);
    PairRelation current   = certified ? relation_for(q) : PairRelation(Basis::amt, n);
    if (!certified) {
      // exponent alone is over budget; fall back to the coarsest relation
      q = 1;
      current   = relation_for(1);
    }
    bool restart = certified;
    while (restart) {
      restart = false;
      for (std::size_t r = 2; r <= std::max<std::size_t>(n, 2); ++r) {
        if (!is_prime(r)) {
          continue;
        }
        if (!fits(q * r)) {
          certified = false;
          break;
        }
        PairRelation refined = relation_for(q * r);
        if (!refined.same_pairs(current)) {
          q       = q * r;
          current = std::move(refined);
          restart = true;
          break;
        }
      }
    }

    PairRelation relation(Basis::amt, n);
    saturate(m, parikh_action(q, k, limits, n), limits, true, relation);
    relation.set_certified(certified);
    relation.set_modulus(q);
    return relation;
  }

}  // namespace levelone

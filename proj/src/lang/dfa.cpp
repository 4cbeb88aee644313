#include "levelone/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

#include "levelone/error.hpp"
#include "nfa.hpp"

namespace levelone {

  Dfa::Dfa(Alphabet           alphabet,
           std::size_t        state_count,
           State              initial,
           std::vector<State> finals,
           std::vector<State> delta)
      : alphabet_(std::move(alphabet)),
        initial_(initial),
        final_(state_count, false),
        delta_(std::move(delta)) {
    if (state_count == 0) {
      throw ValidationError("automaton needs at least one state");
    }
    if (alphabet_.size() == 0) {
      throw ValidationError("automaton needs a nonempty alphabet");
    }
    if (initial_ >= state_count) {
      throw ValidationError("initial state out of range");
    }
    if (delta_.size() != state_count * alphabet_.size()) {
      throw ValidationError("transition table is not total");
    }
    for (State target : delta_) {
      if (target >= state_count) {
        throw ValidationError("transition target out of range");
      }
    }
    for (State q : finals) {
      if (q >= state_count) {
        throw ValidationError("final state out of range");
      }
      final_[q] = true;
    }
  }

  std::vector<State> Dfa::finals() const {
    std::vector<State> out;
    for (State q = 0; q < final_.size(); ++q) {
      if (final_[q]) {
        out.push_back(q);
      }
    }
    return out;
  }

  State Dfa::run(State from, std::string_view word) const {
    State q = from;
    for (char c : word) {
      q = next(q, alphabet_.index(c));
    }
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Glushkov construction
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Glushkov {
      // positions are 1-based; 0 is the initial state
      std::vector<char>               position_symbol{0};
      std::vector<std::vector<State>> follow{{}};

      struct Info {
        bool               nullable = false;
        std::vector<State> first;
        std::vector<State> last;
      };

      static void append(std::vector<State>& to, std::vector<State> const& from) {
        to.insert(to.end(), from.begin(), from.end());
      }

      void link(std::vector<State> const& lasts, std::vector<State> const& firsts) {
        for (State p : lasts) {
          append(follow[p], firsts);
        }
      }

      Info visit(PatternNode const& node) {
        using Kind = PatternNode::Kind;
        Info info;
        switch (node.kind) {
          case Kind::empty:
            break;
          case Kind::epsilon:
            info.nullable = true;
            break;
          case Kind::letter: {
            auto p = static_cast<State>(position_symbol.size());
            position_symbol.push_back(node.symbol);
            follow.emplace_back();
            info.first = {p};
            info.last  = {p};
            break;
          }
          case Kind::alternation:
            for (auto const& child : node.children) {
              Info c = visit(child);
              info.nullable = info.nullable || c.nullable;
              append(info.first, c.first);
              append(info.last, c.last);
            }
            break;
          case Kind::concat: {
            info.nullable = true;
            for (auto const& child : node.children) {
              Info c = visit(child);
              link(info.last, c.first);
              if (info.nullable) {
                append(info.first, c.first);
              }
              if (c.nullable) {
                append(info.last, c.last);
              } else {
                info.last = c.last;
              }
              info.nullable = info.nullable && c.nullable;
            }
            break;
          }
          case Kind::star:
          case Kind::plus: {
            info          = visit(node.children.front());
            info.nullable = info.nullable || node.kind == Kind::star;
            link(info.last, info.first);
            break;
          }
        }
        return info;
      }
    };

  }  // namespace

  Dfa compile_dfa(Pattern const& pattern, Limits const& limits) {
    Glushkov     g;
    auto         info = g.visit(pattern.root);
    detail::Nfa  nfa{pattern.alphabet, 0, {}, {}};
    for (std::size_t p = 0; p < g.position_symbol.size(); ++p) {
      nfa.add_state(false);
    }
    nfa.final[0] = info.nullable;
    for (State p : info.last) {
      nfa.final[p] = true;
    }
    auto edge_to = [&](State from, State to) {
      nfa.add_edge(from, pattern.alphabet.index(g.position_symbol[to]), to);
    };
    for (State p : info.first) {
      edge_to(0, p);
    }
    for (State p = 1; p < g.follow.size(); ++p) {
      for (State q : g.follow[p]) {
        edge_to(p, q);
      }
    }
    return minimize(detail::determinize(nfa, limits));
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical numbering and minimization
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // BFS renumbering of the states reachable from `initial`, where `class_of`
    // maps old states to the states of the automaton being built.
    Dfa renumber(Dfa const& dfa, std::vector<State> const& class_of) {
      std::size_t const  k = dfa.alphabet().size();
      std::size_t        classes = 0;
      for (State c : class_of) {
        classes = std::max<std::size_t>(classes, c + 1);
      }
      // one representative per class
      std::vector<State> rep(classes, 0);
      std::vector<bool>  has_rep(classes, false);
      for (State q = 0; q < class_of.size(); ++q) {
        if (!has_rep[class_of[q]]) {
          has_rep[class_of[q]] = true;
          rep[class_of[q]]     = q;
        }
      }
      std::vector<State> id(classes, static_cast<State>(-1));
      std::vector<State> order;
      auto               visit = [&](State c) {
        if (id[c] == static_cast<State>(-1)) {
          id[c] = static_cast<State>(order.size());
          order.push_back(c);
        }
      };
      visit(class_of[dfa.initial()]);
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
          visit(class_of[dfa.next(rep[order[i]], a)]);
        }
      }
      std::vector<State> delta(order.size() * k);
      std::vector<State> finals;
      for (std::size_t i = 0; i < order.size(); ++i) {
        State q = rep[order[i]];
        if (dfa.is_final(q)) {
          finals.push_back(static_cast<State>(i));
        }
        for (Letter a = 0; a < k; ++a) {
          delta[i * k + a] = id[class_of[dfa.next(q, a)]];
        }
      }
      return Dfa(dfa.alphabet(), order.size(), 0, std::move(finals),
                 std::move(delta));
    }

    // Refinable partition for Hopcroft's algorithm.
    struct Partition {
      std::vector<State>       elems;
      std::vector<std::size_t> loc;
      std::vector<std::size_t> block_of;
      std::vector<std::size_t> first, end, marked;

      explicit Partition(std::size_t n) : elems(n), loc(n), block_of(n, 0) {
        for (std::size_t i = 0; i < n; ++i) {
          elems[i] = static_cast<State>(i);
          loc[i]   = i;
        }
        first.push_back(0);
        end.push_back(n);
        marked.push_back(0);
      }

      std::size_t size(std::size_t b) const {
        return end[b] - first[b];
      }

      void mark(State q) {
        std::size_t b = block_of[q];
        std::size_t i = loc[q];
        std::size_t j = first[b] + marked[b];
        if (i < j) {
          return;  // already marked
        }
        std::swap(elems[i], elems[j]);
        loc[elems[i]] = i;
        loc[elems[j]] = j;
        ++marked[b];
      }

      // Splits off the marked prefix of b as a new block (if proper) and
      // returns its id, or returns b itself when nothing changes.
      std::size_t split(std::size_t b) {
        std::size_t m = marked[b];
        marked[b]     = 0;
        if (m == 0 || m == size(b)) {
          return b;
        }
        std::size_t nb = first.size();
        first.push_back(first[b]);
        end.push_back(first[b] + m);
        marked.push_back(0);
        first[b] += m;
        for (std::size_t i = first[nb]; i < end[nb]; ++i) {
          block_of[elems[i]] = nb;
        }
        return nb;
      }
    };

  }  // namespace

  Dfa canonicalize(Dfa const& dfa) {
    std::vector<State> identity(dfa.state_count());
    for (State q = 0; q < identity.size(); ++q) {
      identity[q] = q;
    }
    return renumber(dfa, identity);
  }

  Dfa minimize(Dfa const& input) {
    Dfa const         dfa = canonicalize(input);
    std::size_t const n   = dfa.state_count();
    std::size_t const k   = dfa.alphabet().size();

    // inverse transitions in CSR form, per letter
    std::vector<std::vector<std::size_t>> inv_start(k, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::vector<State>>       inv(k, std::vector<State>(n));
    for (Letter a = 0; a < k; ++a) {
      for (State p = 0; p < n; ++p) {
        ++inv_start[a][dfa.next(p, a) + 1];
      }
      for (std::size_t q = 0; q < n; ++q) {
        inv_start[a][q + 1] += inv_start[a][q];
      }
      std::vector<std::size_t> fill(inv_start[a].begin(), inv_start[a].end() - 1);
      for (State p = 0; p < n; ++p) {
        inv[a][fill[dfa.next(p, a)]++] = p;
      }
    }

    Partition P(n);
    for (State q = 0; q < n; ++q) {
      if (dfa.is_final(q)) {
        P.mark(q);
      }
    }
    P.split(0);

    std::deque<std::pair<std::size_t, Letter>> work;
    std::vector<std::vector<bool>>              queued;
    auto enqueue = [&](std::size_t b, Letter a) {
      if (queued.size() <= b) {
        queued.resize(b + 1, std::vector<bool>(k, false));
      }
      if (!queued[b][a]) {
        queued[b][a] = true;
        work.emplace_back(b, a);
      }
    };
    {
      std::size_t smaller = 0;
      if (P.first.size() > 1 && P.size(1) < P.size(0)) {
        smaller = 1;
      }
      for (Letter a = 0; a < k; ++a) {
        enqueue(smaller, a);
      }
    }

    std::vector<State>       splitter;
    std::vector<std::size_t> touched;
    while (!work.empty()) {
      auto [b, a] = work.front();
      work.pop_front();
      queued[b][a] = false;
      splitter.assign(P.elems.begin() + P.first[b], P.elems.begin() + P.end[b]);
      touched.clear();
      for (State q : splitter) {
        for (std::size_t i = inv_start[a][q]; i < inv_start[a][q + 1]; ++i) {
          State       p  = inv[a][i];
          std::size_t pb = P.block_of[p];
          if (P.marked[pb] == 0) {
            touched.push_back(pb);
          }
          P.mark(p);
        }
      }
      for (std::size_t c : touched) {
        std::size_t nc = P.split(c);
        if (nc == c) {
          continue;
        }
        for (Letter x = 0; x < k; ++x) {
          if (queued.size() > c && queued[c][x]) {
            enqueue(nc, x);
          } else {
            enqueue(P.size(nc) <= P.size(c) ? nc : c, x);
          }
        }
      }
    }

    std::vector<State> class_of(n);
    for (State q = 0; q < n; ++q) {
      class_of[q] = static_cast<State>(P.block_of[q]);
    }
    return renumber(dfa, class_of);
  }

  ////////////////////////////////////////////////////////////////////////
  // Boolean combinations and decision procedures
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void require_same_alphabet(Dfa const& x, Dfa const& y) {
      if (!(x.alphabet() == y.alphabet())) {
        throw AlphabetMismatch("alphabets differ: '" + x.alphabet().symbols()
                               + "' vs '" + y.alphabet().symbols() + "'");
      }
    }

    bool apply(SetOp op, bool x, bool y) {
      switch (op) {
        case SetOp::unite:
          return x || y;
        case SetOp::intersect:
          return x && y;
        case SetOp::subtract:
          return x && !y;
      }
      return false;
    }

  }  // namespace

  Dfa combine(Dfa const& x, Dfa const& y, SetOp op, Limits const& limits) {
    require_same_alphabet(x, y);
    std::size_t const                       k = x.alphabet().size();
    std::map<std::pair<State, State>, State> ids;
    std::vector<std::pair<State, State>>     order;
    auto intern = [&](State p, State q) {
      auto [it, inserted] = ids.emplace(std::pair{p, q}, static_cast<State>(order.size()));
      if (inserted) {
        if (order.size() >= limits.max_states) {
          throw BudgetError("product automaton exceeds the state budget of "
                            + std::to_string(limits.max_states));
        }
        order.emplace_back(p, q);
      }
      return it->second;
    };
    intern(x.initial(), y.initial());
    std::vector<State> delta;
    std::vector<State> finals;
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto [p, q] = order[i];
      if (apply(op, x.is_final(p), y.is_final(q))) {
        finals.push_back(static_cast<State>(i));
      }
      for (Letter a = 0; a < k; ++a) {
        delta.push_back(intern(x.next(p, a), y.next(q, a)));
      }
    }
    return Dfa(x.alphabet(), order.size(), 0, std::move(finals), std::move(delta));
  }

  Dfa complement(Dfa const& dfa) {
    std::vector<State> finals;
    for (State q = 0; q < dfa.state_count(); ++q) {
      if (!dfa.is_final(q)) {
        finals.push_back(q);
      }
    }
    return Dfa(dfa.alphabet(), dfa.state_count(), dfa.initial(), std::move(finals),
               dfa.table());
  }

  std::optional<Word> shortest_accepted(Dfa const& dfa) {
    std::size_t const  n = dfa.state_count();
    std::size_t const  k = dfa.alphabet().size();
    constexpr State    none = static_cast<State>(-1);
    std::vector<State> parent(n, none);
    std::vector<char>  via(n, 0);
    std::vector<bool>  seen(n, false);
    std::queue<State>  queue;
    seen[dfa.initial()] = true;
    queue.push(dfa.initial());
    while (!queue.empty()) {
      State q = queue.front();
      queue.pop();
      if (dfa.is_final(q)) {
        Word w;
        for (State s = q; parent[s] != none; s = parent[s]) {
          w.push_back(via[s]);
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      for (Letter a = 0; a < k; ++a) {
        State r = dfa.next(q, a);
        if (!seen[r]) {
          seen[r]   = true;
          parent[r] = q;
          via[r]    = dfa.alphabet().symbol(a);
          queue.push(r);
        }
      }
    }
    return std::nullopt;
  }

  Inclusion includes(Dfa const& outer, Dfa const& inner) {
    require_same_alphabet(outer, inner);
    Limits unbounded;
    unbounded.max_states = outer.state_count() * inner.state_count() + 1;
    auto witness = shortest_accepted(combine(inner, outer, SetOp::subtract, unbounded));
    return Inclusion{!witness.has_value(), witness};
  }

  bool equivalent(Dfa const& x, Dfa const& y) {
    return includes(x, y).holds && includes(y, x).holds;
  }

  bool is_permutation_automaton(Dfa const& dfa) {
    std::size_t const n = dfa.state_count();
    std::vector<bool> hit(n);
    for (Letter a = 0; a < dfa.alphabet().size(); ++a) {
      std::fill(hit.begin(), hit.end(), false);
      for (State q = 0; q < n; ++q) {
        State r = dfa.next(q, a);
        if (hit[r]) {
          return false;
        }
        hit[r] = true;
      }
    }
    return true;
  }

  Dfa universal_dfa(Alphabet const& alphabet) {
    return Dfa(alphabet, 1, 0, {0}, std::vector<State>(alphabet.size(), 0));
  }

  Dfa empty_dfa(Alphabet const& alphabet) {
    return Dfa(alphabet, 1, 0, {}, std::vector<State>(alphabet.size(), 0));
  }

}  // namespace levelone

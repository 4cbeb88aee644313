#include "parikh_closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace levelone::detail {

  namespace {

    using Vec = std::vector<std::int64_t>;

    std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      std::int64_t q = a / b;
      return (a % b != 0 && a < 0) ? q - 1 : q;
    }

    void axpy(Vec& y, std::int64_t f, Vec const& x) {
      for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += f * x[i];
      }
    }

    bool is_zero(Vec const& v) {
      for (auto x : v) {
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

    // Sublattices of Z^k in Hermite normal form: echelon rows, positive
    // pivots, entries above a pivot reduced into [0, pivot). The form is
    // unique, so it doubles as the interning key.
    class Lattices {
     public:
      explicit Lattices(std::size_t k) : k_(k) {}

      int intern(std::vector<Vec> generators) {
        auto rows          = normal_form(std::move(generators));
        auto [it, created] = ids_.try_emplace(rows, static_cast<int>(forms_.size()));
        if (created) {
          forms_.push_back(std::move(rows));
        }
        return it->second;
      }

      int sum(int a, int b) {
        if (a == b) {
          return a;
        }
        auto key = std::minmax(a, b);
        if (auto it = sums_.find(key); it != sums_.end()) {
          return it->second;
        }
        std::vector<Vec> rows = forms_[a];
        rows.insert(rows.end(), forms_[b].begin(), forms_[b].end());
        int id      = intern(std::move(rows));
        sums_[key]  = id;
        return id;
      }

      // Canonical representative of c + L.
      Vec reduce(int id, Vec c) const {
        for (auto const& row : forms_[id]) {
          std::size_t p = pivot(row);
          axpy(c, -floor_div(c[p], row[p]), row);
        }
        return c;
      }

     private:
      static std::size_t pivot(Vec const& row) {
        std::size_t p = 0;
        while (row[p] == 0) {
          ++p;
        }
        return p;
      }

      std::vector<Vec> normal_form(std::vector<Vec> rows) const {
        std::erase_if(rows, is_zero);
        std::vector<Vec> out;
        for (std::size_t col = 0; col < k_ && !rows.empty(); ++col) {
          while (true) {
            std::size_t best = rows.size(), nonzero = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
              if (rows[i][col] != 0) {
                ++nonzero;
                if (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col])) {
                  best = i;
                }
              }
            }
            if (nonzero == 0) {
              break;
            }
            if (nonzero == 1) {
              Vec p = std::move(rows[best]);
              rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
              if (p[col] < 0) {
                for (auto& x : p) {
                  x = -x;
                }
              }
              for (auto& o : out) {
                axpy(o, -floor_div(o[col], p[col]), p);
              }
              out.push_back(std::move(p));
              break;
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
              if (i != best && rows[i][col] != 0) {
                axpy(rows[i], -(rows[i][col] / rows[best][col]), rows[best]);
              }
            }
          }
          std::erase_if(rows, is_zero);
        }
        return out;
      }

      std::size_t                          k_;
      std::vector<std::vector<Vec>>        forms_;
      std::map<std::vector<Vec>, int>      ids_;
      std::map<std::pair<int, int>, int>   sums_;
    };

    // Components of the right Cayley graph in topological order (Kosaraju,
    // first pass from the identity, which reaches everything).
    std::vector<std::vector<Element>> components(SyntacticMorphism const& m, std::vector<int>& comp) {
      std::size_t const n = m.size();
      std::size_t const k = m.alphabet().size();

      std::vector<Element>                        finished;
      std::vector<bool>                           seen(n, false);
      std::vector<std::pair<Element, Letter>>     stack{{m.identity(), 0}};
      seen[m.identity()] = true;
      while (!stack.empty()) {
        auto& [x, a] = stack.back();
        if (a == k) {
          finished.push_back(x);
          stack.pop_back();
          continue;
        }
        Element y = m.right_letter(x, a++);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back({y, 0});
        }
      }

      std::vector<std::vector<Element>> reverse(n);
      for (Element x = 0; x < n; ++x) {
        for (Letter a = 0; a < k; ++a) {
          reverse[m.right_letter(x, a)].push_back(x);
        }
      }
      comp.assign(n, -1);
      std::vector<std::vector<Element>> out;
      for (auto it = finished.rbegin(); it != finished.rend(); ++it) {
        if (comp[*it] != -1) {
          continue;
        }
        int                  id = static_cast<int>(out.size());
        std::vector<Element> members{*it}, todo{*it};
        comp[*it] = id;
        while (!todo.empty()) {
          Element x = todo.back();
          todo.pop_back();
          for (Element y : reverse[x]) {
            if (comp[y] == -1) {
              comp[y] = id;
              members.push_back(y);
              todo.push_back(y);
            }
          }
        }
        out.push_back(std::move(members));
      }
      return out;
    }

  }  // namespace

  std::optional<PairRelation> amt_pairs_exact(SyntacticMorphism const& m, Limits const& limits) {
    std::size_t const n = m.size();
    std::size_t const k = m.alphabet().size();

    std::vector<int> comp;
    auto const       comps = components(m, comp);
    Lattices         lattices(k);

    // Potentials from a spanning tree inside each component, and the cycle
    // lattice spanned by the non-tree edges.
    std::vector<Vec> phi(n);
    std::vector<int> cycle_lattice(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      Element root = comps[c].front();
      phi[root]    = Vec(k, 0);
      std::vector<Element> queue{root};
      std::vector<bool>    placed(n, false);
      placed[root] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        Element x = queue[i];
        for (Letter a = 0; a < k; ++a) {
          Element y = m.right_letter(x, a);
          if (comp[y] == static_cast<int>(c) && !placed[y]) {
            placed[y] = true;
            phi[y]    = phi[x];
            ++phi[y][a];
            queue.push_back(y);
          }
        }
      }
      std::vector<Vec> generators;
      for (Element x : comps[c]) {
        for (Letter a = 0; a < k; ++a) {
          Element y = m.right_letter(x, a);
          if (comp[y] == static_cast<int>(c)) {
            Vec g = phi[x];
            ++g[a];
            axpy(g, -1, phi[y]);
            if (!is_zero(g)) {
              generators.push_back(std::move(g));
            }
          }
        }
      }
      cycle_lattice[c] = lattices.intern(std::move(generators));
    }

    // Cosets per component, normalized to its root: element x of component
    // c carries offset c0 + phi(x).
    using Coset = std::pair<int, Vec>;
    std::vector<std::set<Coset>> cosets(comps.size());
    {
      int  c = comp[m.identity()];
      Vec  start(k, 0);
      axpy(start, -1, phi[m.identity()]);
      cosets[c].insert({cycle_lattice[c], lattices.reduce(cycle_lattice[c], start)});
    }
    std::size_t total = 1;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (auto const& [lattice, c0] : cosets[c]) {
        for (Element x : comps[c]) {
          for (Letter a = 0; a < k; ++a) {
            Element y = m.right_letter(x, a);
            int     d = comp[y];
            if (d == static_cast<int>(c)) {
              continue;
            }
            int next   = lattices.sum(lattice, cycle_lattice[d]);
            Vec offset = c0;
            axpy(offset, 1, phi[x]);
            ++offset[a];
            axpy(offset, -1, phi[y]);
            if (cosets[d].insert({next, lattices.reduce(next, std::move(offset))}).second &&
                ++total > limits.max_group_nodes) {
              return std::nullopt;
            }
          }
        }
      }
    }

    // Cosets of each element, grouped by lattice.
    std::vector<std::map<int, std::vector<Vec>>> of(n);
    for (Element x = 0; x < n; ++x) {
      for (auto const& [lattice, c0] : cosets[comp[x]]) {
        Vec offset = c0;
        axpy(offset, 1, phi[x]);
        of[x][lattice].push_back(lattices.reduce(lattice, std::move(offset)));
      }
    }

    auto meets = [&](Element s, Element t) {
      for (auto const& [ls, offsets_s] : of[s]) {
        for (auto const& [lt, offsets_t] : of[t]) {
          int           joint = lattices.sum(ls, lt);
          std::set<Vec> left;
          for (auto const& c : offsets_s) {
            left.insert(lattices.reduce(joint, c));
          }
          for (auto const& c : offsets_t) {
            if (left.contains(lattices.reduce(joint, c))) {
              return true;
            }
          }
        }
      }
      return false;
    };

    PairRelation relation(Basis::amt, n);
    for (Element s = 0; s < n; ++s) {
      for (Element t = s; t < n; ++t) {
        if (meets(s, t)) {
          relation.add(s, t, WitnessPair{m.witness(s), m.witness(t)});
          if (s != t) {
            relation.add(t, s, WitnessPair{m.witness(t), m.witness(s)});
          }
        }
      }
    }
    return relation;
  }

}  // namespace levelone::detail

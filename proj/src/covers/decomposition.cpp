#include <json.hpp>
#include <map>

#include "levelone/covers.hpp"
#include "levelone/error.hpp"

namespace levelone {

  namespace {

    struct Split {
      Word    u, v;
      Element link;
    };

    // chunk = a_0 ... a_k with k = |M|^2. Finds the smallest (i, j), i < j,
    // with alpha(a_0..a_i) = alpha(a_0..a_j) and
    // alpha(a_{i+1}..a_k) = alpha(a_{j+1}..a_k).
    Split pigeonhole(SyntacticMorphism const& m, std::string_view chunk) {
      std::size_t const    len = chunk.size();
      std::vector<Element> prefix(len), suffix(len);
      Element              x = m.identity();
      for (std::size_t i = 0; i < len; ++i) {
        x         = m.multiply(x, m.evaluate(chunk.substr(i, 1)));
        prefix[i] = x;
      }
      Element y = m.identity();
      for (std::size_t i = len; i-- > 0;) {
        suffix[i] = y;  // image of a_{i+1} .. a_k
        y         = m.multiply(m.evaluate(chunk.substr(i, 1)), y);
      }

      std::map<std::pair<Element, Element>, std::size_t> first;
      std::size_t best_i = len, best_j = len;
      for (std::size_t j = 0; j < len; ++j) {
        auto [it, fresh] = first.try_emplace({prefix[j], suffix[j]}, j);
        // The second occurrence of a key pairs with its first; keep the
        // smallest first index.
        if (!fresh && it->second < best_i) {
          best_i = it->second;
          best_j = j;
        }
        if (!fresh) {
          it->second = len;  // later repeats never improve on the second one
        }
      }
      if (best_i == len) {
        throw Error("pigeonhole failed: chunk shorter than |M|^2 + 1");
      }
      Split s;
      s.u    = Word(chunk.substr(0, best_i + 1));
      s.v    = Word(chunk.substr(best_i + 1));
      s.link = m.omega(m.evaluate(chunk.substr(best_i + 1, best_j - best_i)));
      return s;
    }

  }  // namespace

  GuardedDecomposition guarded_decomposition(SyntacticMorphism const& m, std::string_view word) {
    if (word.empty()) {
      throw PreconditionError("guarded decomposition of the empty word");
    }
    std::size_t const k = m.size() * m.size();
    if (word.size() <= k) {
      return {{Word(word)}, {}};
    }
    // Peel chunks of k + 1 letters off the right end until at most k letters
    // remain; the leftmost chunk absorbs that remainder.
    std::vector<Split> splits;
    std::size_t        end = word.size();
    while (end > k) {
      splits.push_back(pigeonhole(m, word.substr(end - k - 1, k + 1)));
      end -= k + 1;
    }
    GuardedDecomposition out;
    Word                 head(word.substr(0, end));
    for (std::size_t i = splits.size(); i-- > 0;) {
      Split& s = splits[i];
      if (out.blocks.empty()) {
        out.blocks.push_back(head + s.u);
      } else {
        out.blocks.back() += s.u;
      }
      out.blocks.push_back(std::move(s.v));
      out.links.push_back(s.link);
    }
    return out;
  }

  std::optional<std::string> decomposition_defect(SyntacticMorphism const&    m,
                                                  std::string_view            word,
                                                  GuardedDecomposition const& d) {
    if (d.blocks.empty()) {
      return "no blocks";
    }
    if (d.links.size() + 1 != d.blocks.size()) {
      return "expected one link between consecutive blocks";
    }
    Word joined;
    for (auto const& b : d.blocks) {
      if (b.empty()) {
        return "empty block";
      }
      joined += b;
    }
    if (joined != word) {
      return "blocks do not concatenate to the word";
    }
    for (std::size_t i = 0; i < d.links.size(); ++i) {
      Element e = d.links[i];
      if (e >= m.size() || !m.is_idempotent(e) || !m.in_nonempty_image(e)) {
        return "link " + std::to_string(i + 1) + " is not an idempotent of alpha(A+)";
      }
      Element left  = m.evaluate(d.blocks[i]);
      Element right = m.evaluate(d.blocks[i + 1]);
      if (m.multiply(left, e) != left) {
        return "block " + std::to_string(i + 1) + " does not absorb link " + std::to_string(i + 1);
      }
      if (m.multiply(e, right) != right) {
        return "block " + std::to_string(i + 2) + " does not absorb link " + std::to_string(i + 1);
      }
    }
    return std::nullopt;
  }

  std::string decomposition_to_json_text(GuardedDecomposition const& d, bool verified) {
    nlohmann::json j;
    j["blocks"]   = d.blocks;
    j["links"]    = d.links;
    j["verified"] = verified;
    return j.dump(2);
  }

}  // namespace levelone

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "levelone/pairs.hpp"

namespace levelone {

  // Which characteristic equation a verdict refers to.
  //   POLC   s^(w+1) <= s^w t s^w                  for pairs (s, t)
  //   POLG   1 <= s                                for pairs (1, s)
  //   POLGP  e <= e s e                            for e in E(S), pairs (1, s)
  //   GONE   (qr)^w (st)^(w+1) = (qr)^w q t (st)^w for pairs (q, s)
  //   WGONE  (eqfre)^w (esfte)^(w+1) = (eqfre)^w q f t (esfte)^w
  //   SIMON  (st)^w s = (st)^w = t (st)^w
  //   KNAST  (eqfre)^w (esfte)^w = (eqfre)^w q f t (esfte)^w, q,r,s,t in S
  //   GRBPOL (ef)^w = (fe)^w                       for e, f in E(M)
  enum class Equation { polc, polg, polgp, gone, wgone, simon, knast, grbpol };

  std::string_view        to_string(Equation equation);
  std::optional<Equation> equation_from_string(std::string_view name);

  // Equations decided by the order (<=) rather than by equality.
  bool is_order_equation(Equation equation);

  struct Violation {
    std::optional<Element> q, r, s, t, e, f;
    Element                lhs = 0;
    Element                rhs = 0;
    // Witness word of every bound variable, keyed by its name.
    std::map<std::string, Word> words;

    bool operator==(Violation const&) const = default;
  };

  struct Verdict {
    bool                     member   = true;
    Equation                 equation = Equation::polc;
    std::optional<Violation> violation;

    bool operator==(Verdict const&) const = default;
  };

  // Both sides of an equation on a tuple of bound elements. Unbound
  // variables the equation needs are an error. For SIMON the first of the
  // two equalities that fails is returned (the second when both hold).
  struct Sides {
    Element lhs;
    Element rhs;
  };
  Sides evaluate_sides(SyntacticMorphism const& m, Equation equation, Violation const& tuple);

  // Re-evaluates the cited equation on the stored tuple: true iff the
  // stored lhs/rhs are reproduced and they violate the equation. order is
  // needed for the order equations.
  bool reproduces(Verdict const&           verdict,
                  SyntacticMorphism const& m,
                  OrderRelation const*     order = nullptr);

  Verdict check_pol(SyntacticMorphism const& m, OrderRelation const& order, PairRelation const& pairs);
  Verdict check_pol_group(SyntacticMorphism const& m,
                          OrderRelation const&     order,
                          PairRelation const&      pairs);
  Verdict check_pol_group_plus(SyntacticMorphism const& m,
                               OrderRelation const&     order,
                               PairRelation const&      pairs);

  // The sweeps stop at the first violation in the order (q, s) outer,
  // (e, f) middle, (r, t) inner; serial and parallel runs report the same
  // tuple.
  Verdict check_bpol_group(SyntacticMorphism const& m,
                           PairRelation const&      pairs,
                           Exec                     exec = Exec::parallel);
  Verdict check_bpol_group_plus(SyntacticMorphism const& m,
                                PairRelation const&      pairs,
                                Exec                     exec = Exec::parallel);

  enum class Specialized { simon, knast, grbpol };
  Verdict check_specialized(SyntacticMorphism const& m,
                            Specialized              kind,
                            Exec                     exec = Exec::parallel);

  ////////////////////////////////////////////////////////////////////////
  // Full decisions
  ////////////////////////////////////////////////////////////////////////

  enum class Level { pol, bpol };
  enum class BasisKind { st, mod, amt, gr, custom };

  struct BasisSpec {
    BasisKind                  kind = BasisKind::st;
    std::optional<FiniteGroup> group;  // for custom

    // "st", "mod", "amt", "gr" or "group:<file>". Throws UsageError.
    static BasisSpec parse(std::string_view text);
    std::string      label() const;
  };

  std::string_view to_string(Level level);
  Level            level_from_string(std::string_view text);

  // e.g. "BPol(ST+)".
  std::string class_label(BasisSpec const& basis, Level level, bool plus);
  // e.g. "dot-depth one"; empty when there is no customary name.
  std::string class_nickname(BasisKind basis, Level level, bool plus);

  struct Report {
    std::string input;
    std::string alphabet;
    std::size_t dfa_states  = 0;
    std::size_t monoid_size = 0;
    std::string basis;  // "ST", "MOD", ...
    Level       level = Level::bpol;
    bool        plus  = false;
    std::string class_label;
    std::string class_nickname;
    Verdict     verdict;
    // False when the pair relation is uncertified: the verdict is conditional.
    bool        certified  = true;
    std::size_t pair_count = 0;
    // Parikh modulus the AMT relation was computed with, 0 otherwise.
    std::uint64_t pair_modulus = 0;
    double      elapsed_ms = 0;

    bool member() const noexcept {
      return verdict.member;
    }
    // 0 member, 1 non-member, 3 conditional.
    int exit_code() const noexcept;

    bool operator==(Report const&) const = default;
  };

  struct DecideOptions {
    Limits limits = Limits::from_environment();
    Exec   exec   = Exec::parallel;
  };

  // compile -> minimize -> transition monoid -> (order) -> pairs -> checker.
  // Throws UsageError for GR with level POL or with plus.
  Report decide(Dfa const&           dfa,
                std::string          description,
                BasisSpec const&     basis,
                Level                level,
                bool                 plus,
                DecideOptions const& options = {});
  Report decide(Pattern const&       pattern,
                std::string          description,
                BasisSpec const&     basis,
                Level                level,
                bool                 plus,
                DecideOptions const& options = {});

  // One-paragraph human readable account of a report.
  std::string summary(Report const& report);

  std::string report_to_json_text(Report const& report);
  Report      report_from_json_text(std::string const& text);

}  // namespace levelone

#pragma once

#include <memory>
#include <optional>

#include "levelone/membership.hpp"

namespace levelone::detail {

  // Per-thread scanning state over the outer indices of an equation sweep.
  class Cursor {
   public:
    virtual ~Cursor() = default;
    // First violation among the tuples of outer index k, in sweep order.
    virtual std::optional<Violation> scan(std::size_t k) = 0;
  };

  class Sweep {
   public:
    virtual ~Sweep() = default;
    virtual std::size_t             outer_count() const = 0;
    virtual std::unique_ptr<Cursor> cursor() const      = 0;
  };

  std::optional<Violation> run_serial(Sweep const& sweep);
  // Same result as run_serial: the lowest outer index with a violation wins.
  std::optional<Violation> run_omp(Sweep const& sweep);

  inline std::optional<Violation> run(Sweep const& sweep, Exec exec) {
    return exec == Exec::serial ? run_serial(sweep) : run_omp(sweep);
  }

  // Fills the witness words of the bound variables.
  void attach_words(SyntacticMorphism const& m, Violation& v);

}  // namespace levelone::detail

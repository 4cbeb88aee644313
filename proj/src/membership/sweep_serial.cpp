#include "sweep.hpp"

namespace levelone::detail {

  std::optional<Violation> run_serial(Sweep const& sweep) {
    auto cursor = sweep.cursor();
    for (std::size_t k = 0; k < sweep.outer_count(); ++k) {
      if (auto v = cursor->scan(k)) {
        return v;
      }
    }
    return std::nullopt;
  }

}  // namespace levelone::detail

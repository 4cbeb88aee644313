#include "levelone/limits.hpp"

#include <cstdlib>
#include <string>

namespace levelone {

  Limits Limits::from_environment() {
    Limits      limits;
    char const* raw = std::getenv("HIERARCHY_ONE_BUDGET");
    if (raw == nullptr) {
      return limits;
    }
    try {
      std::size_t used  = 0;
      auto        value = std::stoull(raw, &used);
      if (used == std::string(raw).size() && value > 0) {
        limits.max_states   = value;
        limits.max_elements = value;
      }
    } catch (std::exception const&) {
      // malformed values leave the defaults in place
    }
    return limits;
  }

}  // namespace levelone

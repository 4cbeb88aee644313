#pragma once

#include <cstddef>

namespace levelone {

  // Resource caps shared by every construction in the library.
  struct Limits {
    std::size_t max_states   = std::size_t{1} << 16;
    std::size_t max_elements = 20'000;
    // Cap on |G| * |M| nodes explored by group-morphism saturation.
    std::size_t max_group_nodes = std::size_t{1} << 22;

    // Defaults, with HIERARCHY_ONE_BUDGET (if set to a positive integer)
    // overriding both the state and the element cap.
    static Limits from_environment();
  };

  enum class Exec { serial, parallel };

}  // namespace levelone

#pragma once

#include <string>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/nbs.hpp"

namespace nbs {

// Six open nodes, A-C forward and D-F backward, as (name, g, f):
//   A 7 9, B 4 12, C 2 13 | D 9 9, E 8 12, F 2 13
// prepare_best() on them raises C_lb 0 -> 9 -> 12 and selects (B, E).
struct QueueWalkthrough {
    PrepareStatus status = PrepareStatus::exhausted;
    std::string forward;   // name of the selected forward node
    std::string backward;  // name of the selected backward node
    std::vector<Cost> lower_bounds;
};

[[nodiscard]] QueueWalkthrough run_queue_walkthrough();

}  // namespace nbs

#include "nbs/walkthrough.hpp"

#include <array>

namespace nbs {

QueueWalkthrough run_queue_walkthrough() {
    struct Entry {
        const char* name;
        std::int64_t g;
        std::int64_t f;
    };
    constexpr std::array<Entry, 3> forward{{{"A", 7, 9}, {"B", 4, 12}, {"C", 2, 13}}};
    constexpr std::array<Entry, 3> backward{{{"D", 9, 9}, {"E", 8, 12}, {"F", 2, 13}}};

    NodeStore fwd(Direction::forward);
    NodeStore bwd(Direction::backward);
    DualOpenList open(fwd, bwd);
    open.keep_history(true);
    StateId state = 0;
    for (const Entry& s : forward) open.push(Direction::forward, fwd.add(state++, Cost(s.g), Cost(s.f - s.g), no_node));
    for (const Entry& s : backward)
        open.push(Direction::backward, bwd.add(state++, Cost(s.g), Cost(s.f - s.g), no_node));

    QueueWalkthrough out;
    out.status = open.prepare_best();
    if (out.status == PrepareStatus::found) {
        out.forward = forward[fwd[open.ready_front(Direction::forward)].state].name;
        out.backward = backward[bwd[open.ready_front(Direction::backward)].state - forward.size()].name;
    }
    const auto history = open.lower_bound_history();
    out.lower_bounds.assign(history.begin(), history.end());
    return out;
}

}  // namespace nbs

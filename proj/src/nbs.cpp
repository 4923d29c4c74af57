#include "nbs/nbs.hpp"

#include <algorithm>
#include <chrono>

#include "expansion.hpp"

namespace nbs {

Cost lb(const SearchNode& forward, const SearchNode& backward) {
    return max(max(forward.f, backward.f), forward.g + backward.g);
}

DualOpenList::DualOpenList(const NodeStore& forward, const NodeStore& backward, std::uint64_t* ops)
    : sides_{Side{&forward, IndexedHeap<ByFHighG>{ByFHighG{&forward}, ops}, IndexedHeap<ByLowG>{ByLowG{&forward}, ops}},
             Side{&backward, IndexedHeap<ByFHighG>{ByFHighG{&backward}, ops},
                  IndexedHeap<ByLowG>{ByLowG{&backward}, ops}}} {}

void DualOpenList::push(Direction d, NodeId id) { side(d).waiting.push(id); }

void DualOpenList::erase(Direction d, NodeId id) {
    Side& s = side(d);
    if (s.waiting.contains(id))
        s.waiting.erase(id);
    else
        s.ready.erase(id);
}

bool DualOpenList::contains(Direction d, NodeId id) const {
    return side(d).waiting.contains(id) || side(d).ready.contains(id);
}

Cost DualOpenList::waiting_f(Direction d) const {
    const Side& s = side(d);
    return s.waiting.empty() ? Cost::infinity() : (*s.store)[s.waiting.top()].f;
}

Cost DualOpenList::ready_g(Direction d) const {
    const Side& s = side(d);
    return s.ready.empty() ? Cost::infinity() : (*s.store)[s.ready.top()].g;
}

void DualOpenList::promote(Direction d) {
    Side& s = side(d);
    s.ready.push(s.waiting.pop());
}

void DualOpenList::raise(Cost value) {
    c_lb_ = value;
    if (keep_history_) history_.push_back(value);
}

PrepareStatus DualOpenList::prepare_best() {
    for (Direction d : {Direction::forward, Direction::backward})
        while (waiting_f(d) < c_lb_) promote(d);

    for (;;) {
        if (size(Direction::forward) == 0 || size(Direction::backward) == 0) return PrepareStatus::exhausted;
        const Cost pair = ready_g(Direction::forward) + ready_g(Direction::backward);
        if (pair <= c_lb_) return PrepareStatus::found;

        // One node with f <= C_lb moves per step; a side whose ready queue is
        // empty is served first, then forward.
        const Direction first = ready_size(Direction::forward) == 0 || ready_size(Direction::backward) != 0
                                    ? Direction::forward
                                    : Direction::backward;
        bool moved = false;
        for (Direction d : {first, opposite(first)}) {
            if (waiting_f(d) <= c_lb_) {
                promote(d);
                moved = true;
                break;
            }
        }
        if (!moved) raise(min(min(waiting_f(Direction::forward), waiting_f(Direction::backward)), pair));
    }
}

NbsResult nbs_search(const StateSpace& space, const NbsOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    NbsResult result;
    SearchTrace& trace = result.trace;

    if (space.start() == space.goal()) {
        result.status = SearchStatus::solved;
        result.cost = Cost::zero();
        result.meeting_state = space.start();
        result.solution_path = {space.start()};
        return result;
    }

    detail::Frontier frontier(space, trace);
    DualOpenList open(frontier.store(Direction::forward), frontier.store(Direction::backward), &trace.queue_operations);
    open.keep_history(options.record_lower_bounds);

    auto on_insert = [&](Direction d, NodeId id) { open.push(d, id); };
    auto on_remove = [&](Direction d, NodeId id) { open.erase(d, id); };

    bool roots_ok = true;
    for (Direction d : {Direction::forward, Direction::backward}) {
        const NodeId root = frontier.add_root(d);
        if (root == no_node)
            roots_ok = false;
        else
            open.push(d, root);
    }

    detail::Deadline deadline(options.limits, started);
    bool limited = false;
    while (roots_ok) {
        if (open.prepare_best() == PrepareStatus::exhausted) break;
        if (open.lower_bound() >= frontier.best_cost()) break;
        if (deadline.reached(trace.expanded)) {
            limited = true;
            break;
        }
        const Cost bound = open.lower_bound();
        const NodeId u = open.pop_ready(Direction::forward);
        const NodeId v = open.pop_ready(Direction::backward);
        frontier.expand(Direction::forward, u, bound, on_insert, on_remove);
        frontier.expand(Direction::backward, v, bound, on_insert, on_remove);
        trace.max_open_size = std::max(trace.max_open_size, open.size());
    }

    frontier.finish(result, limited);
    if (options.record_lower_bounds) {
        const auto h = open.lower_bound_history();
        result.lower_bound_history.assign(h.begin(), h.end());
    }
    result.trace.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace nbs

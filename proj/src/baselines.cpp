#include "nbs/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "expansion.hpp"
#include "nbs/indexed_heap.hpp"

namespace nbs {
namespace {

using Clock = std::chrono::steady_clock;

bool trivial(const StateSpace& space, SearchResult& result) {
    if (space.start() != space.goal()) return false;
    result.status = SearchStatus::solved;
    result.cost = Cost::zero();
    result.meeting_state = space.start();
    result.solution_path = {space.start()};
    return true;
}

void stamp(SearchResult& result, Clock::time_point started) {
    result.trace.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
}

// pr(n) = max(f, 2g + epsilon), ties toward smaller g.
struct ByPriority {
    const NodeStore* store;
    Cost epsilon;

    [[nodiscard]] Cost priority(NodeId id) const {
        const SearchNode& n = (*store)[id];
        return max(n.f, 2 * n.g + epsilon);
    }
    bool operator()(NodeId a, NodeId b) const {
        const Cost pa = priority(a);
        const Cost pb = priority(b);
        if (pa != pb) return pa < pb;
        const SearchNode& x = (*store)[a];
        const SearchNode& y = (*store)[b];
        if (x.g != y.g) return x.g < y.g;
        return x.state < y.state;
    }
};

struct ByF {
    const NodeStore* store;
    bool operator()(NodeId a, NodeId b) const {
        const SearchNode& x = (*store)[a];
        const SearchNode& y = (*store)[b];
        if (x.f != y.f) return x.f < y.f;
        return x.state < y.state;
    }
};

}  // namespace

SearchResult astar_search(const StateSpace& space, Direction direction, const SearchLimits& limits) {
    const auto started = Clock::now();
    SearchResult result;
    if (trivial(space, result)) return result;

    SearchTrace& trace = result.trace;
    detail::Frontier frontier(space, trace);
    frontier.seed_target(opposite(direction));
    const NodeStore& store = frontier.store(direction);
    IndexedHeap<ByFHighG> open(ByFHighG{&store}, &trace.queue_operations);

    auto on_insert = [&](Direction, NodeId id) { open.push(id); };
    auto on_remove = [&](Direction, NodeId id) { open.erase(id); };

    if (const NodeId root = frontier.add_root(direction); root != no_node) open.push(root);
    detail::Deadline deadline(limits, started);
    bool limited = false;
    while (!open.empty()) {
        const Cost fmin = store[open.top()].f;
        if (fmin >= frontier.best_cost()) break;
        if (deadline.reached(trace.expanded)) {
            limited = true;
            break;
        }
        const NodeId id = open.pop();
        frontier.expand(direction, id, fmin, on_insert, on_remove);
        trace.max_open_size = std::max(trace.max_open_size, open.size());
    }
    frontier.finish(result, limited);
    stamp(result, started);
    return result;
}

SearchResult mm_search(const StateSpace& space, const MMParams& params, const SearchLimits& limits) {
    const auto started = Clock::now();
    SearchResult result;
    if (trivial(space, result)) return result;

    SearchTrace& trace = result.trace;
    detail::Frontier frontier(space, trace, {.use_heuristic = params.use_heuristic});

    struct Side {
        IndexedHeap<ByPriority> by_priority;
        IndexedHeap<ByF> by_f;
        IndexedHeap<ByLowG> by_g;
    };
    auto make_side = [&](Direction d) {
        const NodeStore* st = &frontier.store(d);
        return Side{IndexedHeap<ByPriority>{ByPriority{st, params.epsilon}, &trace.queue_operations},
                    IndexedHeap<ByF>{ByF{st}, &trace.queue_operations},
                    IndexedHeap<ByLowG>{ByLowG{st}, &trace.queue_operations}};
    };
    Side sides[2] = {make_side(Direction::forward), make_side(Direction::backward)};

    auto on_insert = [&](Direction d, NodeId id) {
        Side& s = sides[index(d)];
        s.by_priority.push(id);
        s.by_f.push(id);
        s.by_g.push(id);
    };
    auto on_remove = [&](Direction d, NodeId id) {
        Side& s = sides[index(d)];
        s.by_priority.erase(id);
        s.by_f.erase(id);
        s.by_g.erase(id);
    };

    for (Direction d : {Direction::forward, Direction::backward})
        if (const NodeId root = frontier.add_root(d); root != no_node) on_insert(d, root);

    detail::Deadline deadline(limits, started);
    bool limited = false;
    for (;;) {
        Side& fw = sides[0];
        Side& bw = sides[1];
        if (fw.by_priority.empty() || bw.by_priority.empty()) break;
        const NodeStore& fs = frontier.store(Direction::forward);
        const NodeStore& bs = frontier.store(Direction::backward);
        const Cost pr_f = ByPriority{&fs, params.epsilon}.priority(fw.by_priority.top());
        const Cost pr_b = ByPriority{&bs, params.epsilon}.priority(bw.by_priority.top());
        const Cost pr_min = min(pr_f, pr_b);
        const Cost bound = max(max(pr_min, max(fs[fw.by_f.top()].f, bs[bw.by_f.top()].f)),
                               fs[fw.by_g.top()].g + bs[bw.by_g.top()].g + params.epsilon);
        if (frontier.best_cost() <= bound) break;
        if (deadline.reached(trace.expanded)) {
            limited = true;
            break;
        }
        const Direction d = pr_f <= pr_b ? Direction::forward : Direction::backward;
        Side& s = sides[index(d)];
        const NodeId id = s.by_priority.pop();
        s.by_f.erase(id);
        s.by_g.erase(id);
        frontier.expand(d, id, frontier.store(d)[id].f, on_insert, on_remove);
        trace.max_open_size = std::max(trace.max_open_size, fw.by_priority.size() + bw.by_priority.size());
    }
    frontier.finish(result, limited);
    stamp(result, started);
    return result;
}

SearchResult bs_star_search(const StateSpace& space, const SearchLimits& limits) {
    const auto started = Clock::now();
    SearchResult result;
    if (trivial(space, result)) return result;

    SearchTrace& trace = result.trace;
    detail::Frontier frontier(space, trace, {.screen = true, .require_consistent = true});
    IndexedHeap<ByFHighG> open[2] = {
        IndexedHeap<ByFHighG>{ByFHighG{&frontier.store(Direction::forward)}, &trace.queue_operations},
        IndexedHeap<ByFHighG>{ByFHighG{&frontier.store(Direction::backward)}, &trace.queue_operations}};

    auto on_insert = [&](Direction d, NodeId id) { open[index(d)].push(id); };
    auto on_remove = [&](Direction d, NodeId id) { open[index(d)].erase(id); };

    // Trimming: drop open nodes that cannot lead to a cheaper solution.
    auto trim = [&](Cost incumbent) {
        for (Direction d : {Direction::forward, Direction::backward}) {
            NodeStore& st = frontier.store(d);
            std::vector<NodeId> doomed;
            for (NodeId id : open[index(d)].items())
                if (st[id].f >= incumbent) doomed.push_back(id);
            for (NodeId id : doomed) {
                open[index(d)].erase(id);
                st.set_status(id, NodeStatus::pruned);
                ++trace.pruned;
            }
        }
    };

    // Pruning: removes the open descendants of `id` from direction d's tree.
    std::vector<Edge> edges;
    std::vector<NodeId> stack;
    auto prune_descendants = [&](Direction d, NodeId id) {
        NodeStore& st = frontier.store(d);
        stack.assign(1, id);
        while (!stack.empty()) {
            const NodeId cur = stack.back();
            stack.pop_back();
            space.expand(d, st[cur].state, edges);
            for (const Edge& e : edges) {
                const NodeId child = st.lookup(e.state);
                if (child == no_node || st[child].parent != cur) continue;
                if (st.status(child) == NodeStatus::open) {
                    open[index(d)].erase(child);
                    st.set_status(child, NodeStatus::pruned);
                    ++trace.pruned;
                } else if (st.status(child) == NodeStatus::closed) {
                    stack.push_back(child);
                }
            }
        }
    };

    for (Direction d : {Direction::forward, Direction::backward})
        if (const NodeId root = frontier.add_root(d); root != no_node) open[index(d)].push(root);

    detail::Deadline deadline(limits, started);
    bool limited = false;
    while (!open[0].empty() && !open[1].empty()) {
        if (deadline.reached(trace.expanded)) {
            limited = true;
            break;
        }
        const Direction d = open[0].size() <= open[1].size() ? Direction::forward : Direction::backward;
        NodeStore& st = frontier.store(d);
        const NodeId id = open[index(d)].pop();
        const SearchNode node = st[id];
        if (node.f >= frontier.best_cost()) {
            st.set_status(id, NodeStatus::pruned);
            ++trace.pruned;
            continue;
        }

        const NodeStore& other = frontier.store(opposite(d));
        if (const NodeId twin = other.lookup(node.state);
            twin != no_node && other.status(twin) == NodeStatus::closed) {
            // Nipping: the opposite search already expanded this state.
            st.set_status(id, NodeStatus::closed);
            ++trace.closed_unexpanded;
            prune_descendants(opposite(d), twin);
            continue;
        }

        const Cost before = frontier.best_cost();
        frontier.expand(d, id, node.f, on_insert, on_remove);
        if (frontier.best_cost() < before) trim(frontier.best_cost());
        trace.max_open_size = std::max(trace.max_open_size, open[0].size() + open[1].size());
    }
    frontier.finish(result, limited);
    stamp(result, started);
    return result;
}

}  // namespace nbs

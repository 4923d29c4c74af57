#include "nbs/core.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "nbs/search.hpp"

namespace nbs {

const char* to_string(Direction d) { return d == Direction::forward ? "forward" : "backward"; }

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::solved: return "solved";
        case SearchStatus::no_solution: return "no_solution";
        case SearchStatus::limit_reached: return "limit_reached";
    }
    return "?";
}

std::string StateSpace::describe(StateId s) const { return std::to_string(s); }

NodeId NodeStore::add(StateId state, Cost g, Cost h, NodeId parent) {
    if (nodes_.size() >= no_node) throw std::length_error("node store full");
    const auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({state, direction_, g, h, g + h, parent});
    status_.push_back(NodeStatus::open);
    return id;
}

void NodeStore::reserve(std::size_t n) {
    nodes_.reserve(n);
    status_.reserve(n);
    index_.reserve(n);
}

std::vector<StateId> reconstruct_path(const NodeStore& store, NodeId id) {
    std::vector<StateId> path;
    std::size_t steps = 0;
    for (NodeId cur = id; cur != no_node; cur = store[cur].parent) {
        if (cur >= store.size() || ++steps > store.size())
            throw InternalError("corrupt parent chain");
        path.push_back(store[cur].state);
    }
    if (store.direction() == Direction::forward) std::reverse(path.begin(), path.end());
    return path;
}

std::vector<StateId> join_paths(const NodeStore& forward, NodeId f, const NodeStore& backward, NodeId b) {
    std::vector<StateId> path = reconstruct_path(forward, f);
    const std::vector<StateId> tail = reconstruct_path(backward, b);
    if (path.empty() || tail.empty() || path.back() != tail.front())
        throw InternalError("forward and backward paths do not meet");
    path.insert(path.end(), tail.begin() + 1, tail.end());
    return path;
}

DistanceMap dijkstra(const StateSpace& space, StateId source, Direction direction, const DijkstraOptions& options) {
    using Item = std::pair<Cost, StateId>;
    auto greater = [](const Item& x, const Item& y) {
        if (x.first != y.first) return y.first < x.first;
        return y.second < x.second;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(greater)> queue(greater);
    DistanceMap tentative;
    DistanceMap settled;
    std::vector<Edge> edges;

    tentative[source] = Cost::zero();
    queue.push({Cost::zero(), source});
    while (!queue.empty()) {
        const auto [dist, state] = queue.top();
        queue.pop();
        if (settled.contains(state) || tentative.at(state) != dist) continue;
        if (!(dist < options.bound)) break;
        settled.emplace(state, dist);
        if (settled.size() > options.max_states) throw std::length_error("dijkstra: state cap exceeded");
        if (options.stop_at && *options.stop_at == state) break;
        space.expand(direction, state, edges);
        for (const Edge& e : edges) {
            const Cost next = dist + e.cost;
            auto it = tentative.find(e.state);
            if (it == tentative.end()) {
                tentative.emplace(e.state, next);
                queue.push({next, e.state});
            } else if (next < it->second) {
                it->second = next;
                queue.push({next, e.state});
            }
        }
    }
    return settled;
}

std::string ConsistencyReport::summary() const {
    std::ostringstream out;
    out << edges_checked << " edges checked, " << violations.size() << " violations";
    for (std::size_t i = 0; i < violations.size() && i < 5; ++i) {
        const auto& v = violations[i];
        out << "\n  state " << v.state << " -> " << v.neighbor << ": h=" << to_string(v.h_state)
            << " > c=" << to_string(v.edge_cost) << " + h'=" << to_string(v.h_neighbor);
    }
    return out.str();
}

ConsistencyReport check_consistency(const StateSpace& space, std::span<const StateId> states) {
    using Kind = ConsistencyViolation::Kind;
    ConsistencyReport report;
    if (Cost h = space.h_forward(space.goal()); h != Cost::zero())
        report.violations.push_back({Kind::goal_anchor, space.goal(), space.goal(), h, Cost::zero(), Cost::zero()});
    if (Cost h = space.h_backward(space.start()); h != Cost::zero())
        report.violations.push_back({Kind::start_anchor, space.start(), space.start(), h, Cost::zero(), Cost::zero()});

    std::vector<Edge> edges;
    for (StateId u : states) {
        const Cost hf_u = space.h_forward(u);
        const Cost hb_u = space.h_backward(u);
        space.successors(u, edges);
        for (const Edge& e : edges) {
            ++report.edges_checked;
            const Cost hf_v = space.h_forward(e.state);
            if (e.cost + hf_v < hf_u) report.violations.push_back({Kind::forward_edge, u, e.state, hf_u, e.cost, hf_v});
            const Cost hb_v = space.h_backward(e.state);
            if (e.cost + hb_u < hb_v) report.violations.push_back({Kind::backward_edge, e.state, u, hb_v, e.cost, hb_u});
        }
    }
    return report;
}

std::vector<StateId> sample_states(const StateSpace& space, std::size_t count, std::mt19937_64& rng) {
    std::vector<StateId> out;
    std::unordered_set<StateId> seen;
    std::vector<Edge> edges;
    StateId cur = space.start();
    std::size_t stale = 0;
    // Walks restart at start every 64 steps; stop when no new states turn up.
    for (std::size_t step = 0; out.size() < count && stale < 64 * count + 1024; ++step) {
        if (seen.insert(cur).second) {
            out.push_back(cur);
            stale = 0;
        } else {
            ++stale;
        }
        space.successors(cur, edges);
        if (edges.empty() || step % 64 == 63) {
            cur = space.start();
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        cur = edges[pick(rng)].state;
    }
    return out;
}

}  // namespace nbs

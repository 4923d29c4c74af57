#include "nbs/domains/explicit_graph.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "nbs/core.hpp"

namespace nbs {
namespace {

void upsert(std::vector<Edge>& edges, StateId to, Cost cost) {
    for (Edge& e : edges) {
        if (e.state == to) {
            e.cost = min(e.cost, cost);
            return;
        }
    }
    edges.push_back({to, cost});
}

}  // namespace

ExplicitGraph::ExplicitGraph(std::size_t states, StateId start, StateId goal)
    : start_(start), goal_(goal), out_(states), in_(states) {
    if (start >= states || goal >= states) throw std::out_of_range("ExplicitGraph: endpoint out of range");
}

void ExplicitGraph::add_edge(StateId from, StateId to, Cost cost) {
    if (from >= size() || to >= size()) throw std::out_of_range("ExplicitGraph: edge endpoint out of range");
    if (cost < Cost::zero() || cost.is_infinite()) throw std::invalid_argument("ExplicitGraph: bad edge cost");
    upsert(out_[from], to, cost);
    upsert(in_[to], from, cost);
}

void ExplicitGraph::add_undirected_edge(StateId a, StateId b, Cost cost) {
    add_edge(a, b, cost);
    add_edge(b, a, cost);
}

void ExplicitGraph::set_endpoints(StateId start, StateId goal) {
    if (start >= size() || goal >= size()) throw std::out_of_range("ExplicitGraph: endpoint out of range");
    start_ = start;
    goal_ = goal;
}

void ExplicitGraph::set_heuristics(std::vector<Cost> forward, std::vector<Cost> backward) {
    if ((!forward.empty() && forward.size() != size()) || (!backward.empty() && backward.size() != size()))
        throw std::invalid_argument("ExplicitGraph: heuristic table size mismatch");
    hf_ = std::move(forward);
    hb_ = std::move(backward);
}

void ExplicitGraph::set_scaled_oracle_heuristics(double alpha) {
    hf_.clear();
    hb_.clear();
    const DistanceMap to_goal = dijkstra(*this, goal_, Direction::backward);
    const DistanceMap from_start = dijkstra(*this, start_, Direction::forward);
    auto scaled = [alpha](const DistanceMap& dist, StateId s) {
        auto it = dist.find(s);
        if (it == dist.end()) return Cost::infinity();
        if (it->second.diagonals() != 0) throw std::invalid_argument("scaled oracle heuristic needs integer costs");
        return Cost{std::llround(alpha * static_cast<double>(it->second.units()))};
    };
    std::vector<Cost> hf(size());
    std::vector<Cost> hb(size());
    for (StateId s = 0; s < size(); ++s) {
        hf[s] = scaled(to_goal, s);
        hb[s] = scaled(from_start, s);
    }
    set_heuristics(std::move(hf), std::move(hb));
}

std::string ExplicitGraph::describe(StateId s) const {
    if (s < names_.size()) return names_[s];
    return std::to_string(s);
}

ExplicitGraph worst_case_fixture(WorstCase which) {
    constexpr StateId s = 0;
    constexpr StateId t = 1;
    constexpr StateId g = 2;
    ExplicitGraph graph(3, s, g);
    graph.set_names({"s", "t", "g"});
    graph.add_edge(s, g, Cost{3});
    if (which == WorstCase::i1) {
        graph.add_edge(s, t, Cost{1});
        graph.add_edge(t, g, Cost{3});
    } else {
        graph.add_edge(s, t, Cost{3});
        graph.add_edge(t, g, Cost{1});
    }
    return graph;
}

ExplicitGraph corridor(std::size_t n) {
    if (n == 0) throw std::invalid_argument("corridor: empty");
    ExplicitGraph graph(n, 0, n - 1);
    for (StateId i = 0; i + 1 < n; ++i) graph.add_undirected_edge(i, i + 1, Cost{1});
    return graph;
}

ExplicitGraph random_graph(std::uint64_t seed, const RandomGraphParams& params) {
    if (params.states < 2) throw std::invalid_argument("random_graph: need at least two states");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<StateId> pick(0, params.states - 1);
    std::uniform_int_distribution<std::int64_t> cost(params.min_cost, params.max_cost);

    const StateId start = pick(rng);
    StateId goal = pick(rng);
    while (goal == start) goal = pick(rng);
    ExplicitGraph graph(params.states, start, goal);

    const auto edges = static_cast<std::size_t>(params.mean_out_degree * static_cast<double>(params.states));
    for (std::size_t i = 0; i < edges; ++i) {
        const StateId a = pick(rng);
        const StateId b = pick(rng);
        if (a != b) graph.add_edge(a, b, Cost{cost(rng)});
    }
    const double alpha = params.alpha < 0.0 ? std::uniform_real_distribution<double>(0.0, 1.0)(rng) : params.alpha;
    graph.set_scaled_oracle_heuristics(alpha);
    return graph;
}

}  // namespace nbs

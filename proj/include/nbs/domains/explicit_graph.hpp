#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

// Finite directed graph held in memory; states are 0..size()-1.
// Parallel edges collapse to the cheapest one.
class ExplicitGraph final : public StateSpace {
  public:
    explicit ExplicitGraph(std::size_t states, StateId start = 0, StateId goal = 0);

    void add_edge(StateId from, StateId to, Cost cost);
    void add_undirected_edge(StateId a, StateId b, Cost cost);
    void set_endpoints(StateId start, StateId goal);
    void set_names(std::vector<std::string> names) { names_ = std::move(names); }
    // Heuristic tables indexed by state; empty means h = 0.
    void set_heuristics(std::vector<Cost> forward, std::vector<Cost> backward);

    // h_F(u) = round(alpha * d(u, goal)), h_B(u) = round(alpha * d(start, u)),
    // infinity where the distance is infinite. Consistent for alpha in [0, 1]
    // on integer-cost graphs. Requires integer costs.
    void set_scaled_oracle_heuristics(double alpha);

    [[nodiscard]] std::size_t size() const { return out_.size(); }
    [[nodiscard]] const std::vector<Edge>& out_edges(StateId s) const { return out_[s]; }

    [[nodiscard]] StateId start() const override { return start_; }
    [[nodiscard]] StateId goal() const override { return goal_; }
    void successors(StateId s, std::vector<Edge>& out) const override { out = out_[s]; }
    void predecessors(StateId s, std::vector<Edge>& out) const override { out = in_[s]; }
    [[nodiscard]] Cost h_forward(StateId s) const override { return hf_.empty() ? Cost::zero() : hf_[s]; }
    [[nodiscard]] Cost h_backward(StateId s) const override { return hb_.empty() ? Cost::zero() : hb_[s]; }
    [[nodiscard]] std::string describe(StateId s) const override;

  private:
    StateId start_;
    StateId goal_;
    std::vector<std::vector<Edge>> out_;
    std::vector<std::vector<Edge>> in_;
    std::vector<Cost> hf_;
    std::vector<Cost> hb_;
    std::vector<std::string> names_;
};

enum class WorstCase { i1, i2 };

// Three states s=0, t=1, g=2 with h = 0 and C* = 3: I1 = {s->g:3, s->t:1,
// t->g:3}, I2 = {s->g:3, s->t:3, t->g:1}. A single backward expansion of g
// proves optimality on I1, a single forward expansion of s on I2.
[[nodiscard]] ExplicitGraph worst_case_fixture(WorstCase which);

// Undirected unit-cost path 0 - 1 - ... - (n-1), start 0, goal n-1, h = 0.
[[nodiscard]] ExplicitGraph corridor(std::size_t n);

struct RandomGraphParams {
    std::size_t states = 200;
    double mean_out_degree = 3.0;
    std::int64_t min_cost = 1;
    std::int64_t max_cost = 10;
    // Negative draws alpha uniformly from [0, 1] per instance.
    double alpha = -1.0;
};

// Random directed graph with random start/goal and scaled-oracle heuristics.
// Deterministic per seed.
[[nodiscard]] ExplicitGraph random_graph(std::uint64_t seed, const RandomGraphParams& params = {});

}  // namespace nbs

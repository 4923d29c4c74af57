#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

// A configured size cap (states, edges, table entries) would be exceeded.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using DistanceMap = std::unordered_map<StateId, Cost>;

struct DijkstraOptions {
    // Stop once the smallest tentative distance reaches this value; states at
    // distance >= bound may or may not be present in the result.
    Cost bound = Cost::infinity();
    // Stop after settling this state.
    std::optional<StateId> stop_at;
    std::size_t max_states = std::numeric_limits<std::size_t>::max();
};

// Exact distances from `source` following edges in `direction`: d(source, .)
// forward, d(., source) backward. Unreachable states are absent.
// Throws std::length_error when more than max_states states are settled.
[[nodiscard]] DistanceMap dijkstra(const StateSpace& space, StateId source, Direction direction,
                                   const DijkstraOptions& options = {});

struct ConsistencyViolation {
    enum class Kind { forward_edge, backward_edge, goal_anchor, start_anchor };
    Kind kind;
    StateId state;     // the state whose heuristic value is too high
    StateId neighbor;  // other end of the offending edge (== state for anchors)
    Cost h_state;
    Cost edge_cost;
    Cost h_neighbor;
};

struct ConsistencyReport {
    std::size_t edges_checked = 0;
    std::vector<ConsistencyViolation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] std::string summary() const;
};

// For every sampled u and edge (u, u', c): h_F(u) <= c + h_F(u') and
// h_B(u') <= c + h_B(u). Also requires h_F(goal) == 0 and h_B(start) == 0.
[[nodiscard]] ConsistencyReport check_consistency(const StateSpace& space, std::span<const StateId> states);

// Up to `count` distinct states reachable from start, collected by random walks
// with restarts. Deterministic for a given rng state.
[[nodiscard]] std::vector<StateId> sample_states(const StateSpace& space, std::size_t count, std::mt19937_64& rng);

}  // namespace nbs

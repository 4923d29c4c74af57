#pragma once

#include "nbs/cost.hpp"
#include "nbs/search.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

// Unidirectional A* in either direction (backward search runs from goal to
// start on predecessor edges with h_B). Expands by lowest f, ties toward higher
// g. Stops once the best solution found is no more than the smallest f in
// Open, so it never expands a node with f >= C.
[[nodiscard]] SearchResult astar_search(const StateSpace& space, Direction direction = Direction::forward,
                                        const SearchLimits& limits = {});

struct MMParams {
    // Added to 2g in the priority and to the gmin_F + gmin_B termination term.
    // Must not exceed the smallest edge cost of the domain.
    Cost epsilon = Cost::zero();
    // false never evaluates a heuristic (MM0, bidirectional brute force).
    bool use_heuristic = true;
};

// MM family. Priority pr(n) = max(f(n), 2g(n) + epsilon); the direction with
// the smaller minimum priority expands its best node (ties: smaller g).
// Terminates when C <= max(min(prmin_F, prmin_B), fmin_F, fmin_B,
// gmin_F + gmin_B + epsilon).
[[nodiscard]] SearchResult mm_search(const StateSpace& space, const MMParams& params = {},
                                     const SearchLimits& limits = {});

// BS*: bidirectional A* that alternates toward the smaller open list, with
// trimming, screening, nipping and pruning. Only correct with consistent
// heuristics; throws PreconditionError when it meets an inconsistent edge.
// Nodes closed without expansion (nipped) are counted in
// trace.closed_unexpanded and do not appear in trace.expansions.
[[nodiscard]] SearchResult bs_star_search(const StateSpace& space, const SearchLimits& limits = {});

}  // namespace nbs

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nbs/cost.hpp"

namespace nbs {

// Compact canonical state encoding; each domain documents its packing.
using StateId = std::uint64_t;

enum class Direction : std::uint8_t { forward = 0, backward = 1 };

[[nodiscard]] constexpr Direction opposite(Direction d) {
    return d == Direction::forward ? Direction::backward : Direction::forward;
}
[[nodiscard]] constexpr int index(Direction d) { return static_cast<int>(d); }
[[nodiscard]] const char* to_string(Direction d);

struct Edge {
    StateId state;
    Cost cost;
};

// Implicit state space with front-to-end heuristics.
//
// successors() and predecessors() must describe the same edge set
// ((v, c) in successors(u) iff (u, c) in predecessors(v)), with non-negative
// costs and at most one edge per ordered state pair. A heuristic value of
// Cost::infinity() means "no path through this state" and prunes it.
//
// Implementations are immutable once built and may be shared across threads.
class StateSpace {
  public:
    virtual ~StateSpace() = default;

    [[nodiscard]] virtual StateId start() const = 0;
    [[nodiscard]] virtual StateId goal() const = 0;

    // Both clear `out` before appending.
    virtual void successors(StateId s, std::vector<Edge>& out) const = 0;
    virtual void predecessors(StateId s, std::vector<Edge>& out) const = 0;

    // Estimate of d(s, goal).
    [[nodiscard]] virtual Cost h_forward(StateId s) const = 0;
    // Estimate of d(start, s).
    [[nodiscard]] virtual Cost h_backward(StateId s) const = 0;

    [[nodiscard]] virtual std::string describe(StateId s) const;

    void expand(Direction d, StateId s, std::vector<Edge>& out) const {
        if (d == Direction::forward)
            successors(s, out);
        else
            predecessors(s, out);
    }
    [[nodiscard]] Cost heuristic(Direction d, StateId s) const {
        return d == Direction::forward ? h_forward(s) : h_backward(s);
    }
    // Root of the search tree grown in direction d.
    [[nodiscard]] StateId root(Direction d) const { return d == Direction::forward ? start() : goal(); }
    [[nodiscard]] StateId target(Direction d) const { return d == Direction::forward ? goal() : start(); }
};

}  // namespace nbs

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

using NodeId = std::uint32_t;
inline constexpr NodeId no_node = std::numeric_limits<NodeId>::max();

// One search path, stored as its end state plus a parent link. Nodes are
// append-only inside a NodeStore, so a parent chain never changes once built.
struct SearchNode {
    StateId state = 0;
    Direction direction = Direction::forward;
    Cost g;
    Cost h;
    Cost f;
    NodeId parent = no_node;
};

enum class NodeStatus : std::uint8_t { open, closed, replaced, pruned };

// Per-direction node pool plus the Open/Closed index keyed by state. Every
// algorithm in the library uses this for duplicate detection.
class NodeStore {
  public:
    explicit NodeStore(Direction d) : direction_(d) {}

    [[nodiscard]] Direction direction() const { return direction_; }

    NodeId add(StateId state, Cost g, Cost h, NodeId parent);

    [[nodiscard]] const SearchNode& operator[](NodeId id) const { return nodes_[id]; }
    [[nodiscard]] NodeStatus status(NodeId id) const { return status_[id]; }
    void set_status(NodeId id, NodeStatus s) { status_[id] = s; }

    // Current best node recorded for `state` (open or closed), or no_node.
    [[nodiscard]] NodeId lookup(StateId state) const {
        auto it = index_.find(state);
        return it == index_.end() ? no_node : it->second;
    }
    void set_best(StateId state, NodeId id) { index_[state] = id; }

    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    [[nodiscard]] std::span<const SearchNode> nodes() const { return nodes_; }
    void reserve(std::size_t n);

  private:
    Direction direction_;
    std::vector<SearchNode> nodes_;
    std::vector<NodeStatus> status_;
    std::unordered_map<StateId, NodeId> index_;
};

struct TraceEntry {
    Direction direction;
    StateId state;
    Cost g;
    Cost f;
    // Lower bound in force when the node was expanded: C_lb for NBS, the
    // node's own f for the other algorithms. Expansions with bound < C* are
    // the "necessary" ones.
    Cost bound;
};

struct SearchTrace {
    std::vector<TraceEntry> expansions;
    std::size_t expanded = 0;
    std::size_t generated = 0;
    std::size_t reopened = 0;
    std::size_t closed_unexpanded = 0;  // BS* nipping
    std::size_t pruned = 0;             // removed from open without expansion
    std::size_t max_open_size = 0;
    std::size_t insertions = 0;         // pushes into the open list
    std::uint64_t queue_operations = 0;  // priority-queue comparisons and moves
    double wall_seconds = 0.0;

    void record(Direction d, const SearchNode& n, Cost bound) {
        expansions.push_back({d, n.state, n.g, n.f, bound});
        ++expanded;
    }
};

enum class SearchStatus : std::uint8_t { solved, no_solution, limit_reached };
[[nodiscard]] const char* to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::no_solution;
    Cost cost = Cost::infinity();
    std::optional<StateId> meeting_state;
    std::vector<StateId> solution_path;
    SearchTrace trace;

    [[nodiscard]] bool solved() const { return status == SearchStatus::solved; }
};

struct SearchLimits {
    std::size_t max_expansions = std::numeric_limits<std::size_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

// Violated algorithm precondition (e.g. BS* handed an inconsistent heuristic).
class PreconditionError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Corrupt internal structure such as a cyclic parent chain.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Path from the root of `store`'s direction to node `id`. Backward chains are
// returned reversed, so they read in the forward (start to goal) order.
[[nodiscard]] std::vector<StateId> reconstruct_path(const NodeStore& store, NodeId id);

// Joins a forward node and a backward node that end in the same state.
[[nodiscard]] std::vector<StateId> join_paths(const NodeStore& forward, NodeId f, const NodeStore& backward, NodeId b);

}  // namespace nbs

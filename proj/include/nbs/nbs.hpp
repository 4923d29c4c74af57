#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/indexed_heap.hpp"
#include "nbs/search.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

// Lower bound on any solution that extends forward path `forward` and
// backward path `backward`: max(f_F, f_B, g_F + g_B).
[[nodiscard]] Cost lb(const SearchNode& forward, const SearchNode& backward);

enum class PrepareStatus : std::uint8_t { found, exhausted };

// NBS open list. Each direction keeps a `waiting` queue ordered by f (ties
// toward larger g) and a `ready` queue ordered by g. Nodes enter waiting and
// are promoted to ready once their f is at most the running lower bound C_lb.
//
// C_lb starts at 0, never decreases, and never exceeds lbmin, the smallest lb
// over all open pairs. After prepare_best() returns `found`, the fronts of the
// two ready queues form a pair whose lb equals C_lb == lbmin.
class DualOpenList {
  public:
    DualOpenList(const NodeStore& forward, const NodeStore& backward, std::uint64_t* ops = nullptr);

    void push(Direction d, NodeId id);
    // Removes an open node from whichever queue holds it.
    void erase(Direction d, NodeId id);
    [[nodiscard]] bool contains(Direction d, NodeId id) const;

    PrepareStatus prepare_best();

    [[nodiscard]] NodeId ready_front(Direction d) const { return side(d).ready.top(); }
    NodeId pop_ready(Direction d) { return side(d).ready.pop(); }

    [[nodiscard]] Cost lower_bound() const { return c_lb_; }
    // Every value C_lb has taken, starting with the initial 0.
    [[nodiscard]] std::span<const Cost> lower_bound_history() const { return history_; }
    void keep_history(bool on) { keep_history_ = on; }

    [[nodiscard]] std::size_t size(Direction d) const { return side(d).waiting.size() + side(d).ready.size(); }
    [[nodiscard]] std::size_t size() const { return size(Direction::forward) + size(Direction::backward); }
    [[nodiscard]] std::size_t waiting_size(Direction d) const { return side(d).waiting.size(); }
    [[nodiscard]] std::size_t ready_size(Direction d) const { return side(d).ready.size(); }

  private:
    struct Side {
        const NodeStore* store;
        IndexedHeap<ByFHighG> waiting;
        IndexedHeap<ByLowG> ready;
    };

    Side& side(Direction d) { return sides_[index(d)]; }
    [[nodiscard]] const Side& side(Direction d) const { return sides_[index(d)]; }
    [[nodiscard]] Cost waiting_f(Direction d) const;
    [[nodiscard]] Cost ready_g(Direction d) const;
    void promote(Direction d);
    void raise(Cost value);

    Side sides_[2];
    Cost c_lb_ = Cost::zero();
    bool keep_history_ = false;
    std::vector<Cost> history_{Cost::zero()};
};

struct NbsOptions {
    SearchLimits limits;
    bool record_lower_bounds = false;
};

struct NbsResult : SearchResult {
    // Lower-bound values recorded by the open list (only when requested).
    std::vector<Cost> lower_bound_history;
};

// Near-Optimal Bidirectional Search. Returns C* for any solvable instance with
// forward- and backward-admissible heuristics. Each iteration expands both
// ends of the pair selected by prepare_best().
[[nodiscard]] NbsResult nbs_search(const StateSpace& space, const NbsOptions& options = {});

}  // namespace nbs

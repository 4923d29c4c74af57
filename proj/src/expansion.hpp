#pragma once

// Node generation and duplicate handling shared by every search algorithm.

#include <chrono>
#include <string>

#include "nbs/search.hpp"
#include "nbs/state_space.hpp"

namespace nbs::detail {

class Deadline {
  public:
    Deadline(const SearchLimits& limits, std::chrono::steady_clock::time_point started)
        : limits_(limits), started_(started) {}

    bool reached(std::size_t expanded) {
        if (expanded >= limits_.max_expansions) return true;
        if ((++calls_ & 255U) != 0) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count() >=
               limits_.max_seconds;
    }

  private:
    SearchLimits limits_;
    std::chrono::steady_clock::time_point started_;
    std::size_t calls_ = 0;
};

struct FrontierOptions {
    bool use_heuristic = true;
    // Generated nodes with f >= incumbent cost are kept out of Open (BS*).
    bool screen = false;
    // Throw PreconditionError on any generated edge that breaks consistency.
    bool require_consistent = false;
};

// Forward and backward node stores plus the incumbent solution.
//
// A generated child W is discarded when its direction already holds a node for
// the same state with g <= g(W). Otherwise it replaces that node (reopening it
// if closed) and is handed to the caller's open list. Any child that reaches a
// state recorded in the opposite direction (open or closed) offers a solution.
class Frontier {
  public:
    Frontier(const StateSpace& space, SearchTrace& trace, FrontierOptions options = {})
        : space_(space), trace_(trace), options_(options), stores_{NodeStore{Direction::forward},
                                                                   NodeStore{Direction::backward}} {}

    [[nodiscard]] NodeStore& store(Direction d) { return stores_[index(d)]; }
    [[nodiscard]] const NodeStore& store(Direction d) const { return stores_[index(d)]; }
    [[nodiscard]] Cost best_cost() const { return best_; }
    [[nodiscard]] const StateSpace& space() const { return space_; }

    [[nodiscard]] Cost heuristic(Direction d, StateId s) const {
        return options_.use_heuristic ? space_.heuristic(d, s) : Cost::zero();
    }

    // Creates the root node of direction d, or returns no_node when its
    // heuristic prunes it.
    NodeId add_root(Direction d) {
        const StateId s = space_.root(d);
        const Cost h = heuristic(d, s);
        if (h.is_infinite()) return no_node;
        NodeStore& st = store(d);
        const NodeId id = st.add(s, Cost::zero(), h, no_node);
        st.set_best(s, id);
        ++trace_.insertions;
        if (const NodeId match = store(opposite(d)).lookup(s); match != no_node) offer(d, id, match);
        return id;
    }

    // Places the root of direction d in its store without opening it, so a
    // one-sided search detects reaching it through the usual collision check.
    void seed_target(Direction d) {
        NodeStore& st = store(d);
        const NodeId id = st.add(space_.root(d), Cost::zero(), Cost::zero(), no_node);
        st.set_best(space_.root(d), id);
        st.set_status(id, NodeStatus::closed);
    }

    template <typename Insert, typename Remove>
    void expand(Direction d, NodeId id, Cost bound, Insert&& on_insert, Remove&& on_remove) {
        NodeStore& st = store(d);
        const NodeStore& other = store(opposite(d));
        const SearchNode node = st[id];
        st.set_status(id, NodeStatus::closed);
        trace_.record(d, node, bound);
        space_.expand(d, node.state, edges_);
        for (const Edge& e : edges_) {
            ++trace_.generated;
            Cost h;
            if (options_.require_consistent) {
                h = heuristic(d, e.state);
                if (e.cost + h < node.h)
                    throw PreconditionError("inconsistent heuristic on edge " + space_.describe(node.state) + " -> " +
                                            space_.describe(e.state));
            }
            const Cost g = node.g + e.cost;
            const NodeId existing = st.lookup(e.state);
            if (existing != no_node && st[existing].g <= g) continue;
            if (!options_.require_consistent) h = heuristic(d, e.state);
            if (h.is_infinite()) continue;
            if (existing != no_node) {
                if (st.status(existing) == NodeStatus::open)
                    on_remove(d, existing);
                else if (st.status(existing) == NodeStatus::closed)
                    ++trace_.reopened;
                st.set_status(existing, NodeStatus::replaced);
            }
            const NodeId child = st.add(e.state, g, h, id);
            st.set_best(e.state, child);
            if (const NodeId match = other.lookup(e.state); match != no_node) offer(d, child, match);
            if (options_.screen && !(st[child].f < best_)) {
                st.set_status(child, NodeStatus::pruned);
                continue;
            }
            ++trace_.insertions;
            on_insert(d, child);
        }
    }

    // Fills status, cost, meeting state and path of `result`.
    void finish(SearchResult& result, bool limited) const {
        if (limited) {
            result.status = SearchStatus::limit_reached;
            return;
        }
        if (best_.is_infinite()) {
            result.status = SearchStatus::no_solution;
            return;
        }
        result.status = SearchStatus::solved;
        result.cost = best_;
        result.meeting_state = store(Direction::forward)[meet_[0]].state;
        result.solution_path = join_paths(store(Direction::forward), meet_[0], store(Direction::backward), meet_[1]);
    }

  private:
    void offer(Direction d, NodeId id, NodeId match) {
        const Cost total = store(d)[id].g + store(opposite(d))[match].g;
        if (!(total < best_)) return;
        best_ = total;
        meet_[index(d)] = id;
        meet_[index(opposite(d))] = match;
    }

    const StateSpace& space_;
    SearchTrace& trace_;
    FrontierOptions options_;
    NodeStore stores_[2];
    Cost best_ = Cost::infinity();
    NodeId meet_[2] = {no_node, no_node};
    std::vector<Edge> edges_;
};

}  // namespace nbs::detail

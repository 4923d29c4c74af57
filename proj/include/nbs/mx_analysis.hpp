#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "nbs/core.hpp"
#include "nbs/cost.hpp"
#include "nbs/search.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

// Undirected bipartite graph; adjacency runs from left indices to right indices.
struct BipartiteGraph {
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    std::vector<std::vector<std::uint32_t>> adjacency;  // size left_size

    [[nodiscard]] std::size_t edge_count() const;
};

inline constexpr std::uint32_t unmatched = UINT32_MAX;

struct Matching {
    std::vector<std::uint32_t> left_mate;   // right index or `unmatched`
    std::vector<std::uint32_t> right_mate;  // left index or `unmatched`
    std::size_t size = 0;
};

struct VertexCover {
    std::vector<std::uint32_t> left;
    std::vector<std::uint32_t> right;

    [[nodiscard]] std::size_t size() const { return left.size() + right.size(); }
};

// Hopcroft-Karp maximum-cardinality matching.
[[nodiscard]] Matching maximum_matching(const BipartiteGraph& g);

// Minimum vertex cover from a maximum matching (Koenig): with Z the vertices
// reachable from unmatched left vertices along alternating paths, the cover is
// (left \ Z) + (right & Z). Its size equals the matching size.
[[nodiscard]] VertexCover minimum_vertex_cover(const BipartiteGraph& g, const Matching& m);
[[nodiscard]] VertexCover minimum_vertex_cover(const BipartiteGraph& g);

// Must-expand graph of an instance with consistent heuristics: left vertex u_F
// and right vertex v_B are adjacent iff
//   max(d_F(u) + h_F(u), d_B(v) + h_B(v), d_F(u) + d_B(v)) < C*,
// where d_F = d(start, .) and d_B = d(., goal). Only vertices with at least one
// edge are kept.
struct MustExpandGraph {
    Cost c_star;
    std::vector<StateId> left;   // u_F vertices
    std::vector<StateId> right;  // v_B vertices
    BipartiteGraph graph;
    DistanceMap d_forward;   // d(start, .) for every state with d < C* (and goal)
    DistanceMap d_backward;  // d(., goal) for every state with d < C*

    [[nodiscard]] std::size_t edge_count() const { return graph.edge_count(); }
};

struct GmxOptions {
    std::size_t max_states = 100'000;  // per direction
    std::size_t max_edges = 50'000'000;
    bool verify_consistency = true;
};

// Throws CapExceeded when enumeration exceeds the caps, PreconditionError when a
// heuristic is inconsistent on an enumerated edge, std::invalid_argument when
// the goal is unreachable.
[[nodiscard]] MustExpandGraph build_gmx(const StateSpace& space, const GmxOptions& options = {});

struct CoverReport {
    std::size_t vc_size = 0;
    // Trace entries whose recorded bound is strictly below C*.
    std::size_t algorithm_cover_size = 0;
    bool is_cover = false;
    // algorithm_cover_size / vc_size, absent when vc_size == 0.
    std::optional<double> ratio;
};

class TraceMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Grades a search trace against the must-expand graph of the same instance.
// is_cover: every edge (u_F, v_B) has u expanded forward or v expanded
// backward. Throws TraceMismatch when a necessary expansion names a state the
// graph's distance maps do not know.
[[nodiscard]] CoverReport grade_trace(const SearchTrace& trace, const MustExpandGraph& g);
[[nodiscard]] CoverReport grade_trace(const SearchTrace& trace, const MustExpandGraph& g, std::size_t vc_size);

// Line-based text form:
//   gmx 1
//   c_star <cost>
//   left <n>            then n lines "<state> <d_F> <f_F>"
//   right <m>           then m lines "<state> <d_B> <f_B>"
//   edges <k>           then k lines "<left-index> <right-index>"
//   cover <c>           then c lines "F <state>" or "B <state>"
// Costs use to_string(Cost). The cover block is optional on input.
struct GmxDocument {
    Cost c_star;
    std::vector<StateId> left;
    std::vector<Cost> left_d;
    std::vector<Cost> left_f;
    std::vector<StateId> right;
    std::vector<Cost> right_d;
    std::vector<Cost> right_f;
    BipartiteGraph graph;
    std::optional<VertexCover> cover;
};

[[nodiscard]] GmxDocument to_document(const StateSpace& space, const MustExpandGraph& g,
                                      const std::optional<VertexCover>& cover);
void write_gmx(std::ostream& out, const GmxDocument& doc);
// Throws std::invalid_argument on malformed input.
[[nodiscard]] GmxDocument read_gmx(std::istream& in);

}  // namespace nbs

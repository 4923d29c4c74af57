#pragma once

// Reference answers computed without the library's search code: rank-indexed
// breadth-first tables, array Dijkstra, Floyd-Warshall, exhaustive vertex cover.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/domains/explicit_graph.hpp"
#include "nbs/domains/grid.hpp"
#include "nbs/state_space.hpp"

namespace oracle {

inline constexpr std::uint8_t unreached = 0xFF;

std::uint64_t factorial(int n);
// Lehmer rank of a permutation of 0..n-1.
std::uint32_t perm_rank(std::span<const int> p);
void perm_unrank(std::uint32_t rank, int n, std::vector<int>& out);

// Prefix-reversal distances from the identity over all permutations of
// 0..n-1, indexed by perm_rank.
class PancakeTable {
  public:
    explicit PancakeTable(int n);
    // Flip distance between stacks of 1..n.
    [[nodiscard]] int distance(std::span<const int> a, std::span<const int> b) const;

  private:
    int n_;
    std::vector<std::uint8_t> d_;
};

// Sliding-tile distances: one table per blank cell k, each a BFS from the board
// with the blank at k and tiles 1..N-1 filling the other cells in order.
class TileTable {
  public:
    TileTable(int width, int height);
    [[nodiscard]] int distance(std::span<const int> a, std::span<const int> b) const;

  private:
    int width_;
    int height_;
    std::vector<std::vector<std::uint8_t>> d_;
};

// 4-peg Tower of Hanoi distances from `source` (peg per disc, disc 0
// smallest) over all 4^discs configurations, indexed by 2-bit packing.
std::vector<std::uint8_t> hanoi_bfs(int discs, std::span<const int> source);

// Exact shortest distances from `source` on an 8-connected grid; infinite cost
// where unreachable. Indexed by y * width + x.
std::vector<nbs::Cost> grid_dijkstra(const nbs::GridMap& map, std::size_t source);

// Array Dijkstra on an explicit graph, along edges (forward) or against them.
std::vector<nbs::Cost> graph_dijkstra(const nbs::ExplicitGraph& g, std::size_t source, bool reverse);
std::vector<std::vector<nbs::Cost>> floyd_warshall(const nbs::ExplicitGraph& g);

// Must-expand edges as (u, v) state pairs straight from the definition, using
// all-pairs distances.
std::vector<std::pair<nbs::StateId, nbs::StateId>> brute_force_gmx_edges(const nbs::ExplicitGraph& g);

// Minimum vertex cover size of a bipartite graph by exhaustive branch and
// bound. adjacency[i] lists right neighbours of left vertex i.
std::size_t exact_vertex_cover(std::size_t left, std::size_t right,
                               const std::vector<std::vector<std::uint32_t>>& adjacency);

// Cost of walking `path` with the cheapest edge between consecutive states,
// or nullopt when some step is not an edge. The path must run start to goal.
std::optional<nbs::Cost> path_cost(const nbs::StateSpace& space, const std::vector<nbs::StateId>& path);

// d(start, u) for Direction::forward and d(u, goal) for Direction::backward.
using DistanceFn = std::function<nbs::Cost(nbs::Direction, nbs::StateId)>;

}  // namespace oracle

#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "nbs/domains/explicit_graph.hpp"
#include "nbs/domains/grid.hpp"
#include "nbs/domains/hanoi.hpp"
#include "nbs/domains/pancake.hpp"
#include "nbs/domains/tile.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

// Seed of the index-th instance drawn from a base seed (splitmix64 mixing).
[[nodiscard]] std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index);

[[nodiscard]] Pancakes random_pancakes(std::mt19937_64& rng, int n);
// Uniform over boards that can reach the canonical goal.
[[nodiscard]] TileBoard random_tile_board(std::mt19937_64& rng, std::size_t width, std::size_t height);
[[nodiscard]] StateId random_hanoi_state(std::mt19937_64& rng, int discs);
// End of a random walk of `steps` predecessor moves from `from`.
[[nodiscard]] StateId random_walk(const StateSpace& space, StateId from, int steps, std::mt19937_64& rng);

// Random distinct passable endpoints that are connected. Throws
// std::runtime_error when the map has no connected pair.
[[nodiscard]] std::pair<StateId, StateId> pick_grid_endpoints(const GridMap& map, std::mt19937_64& rng);

enum class Domain { pancake, tile, hanoi, grid, maze, graph };

[[nodiscard]] const char* to_string(Domain d);
[[nodiscard]] Domain parse_domain(const std::string& name);

struct DomainSpec {
    Domain domain = Domain::pancake;
    int pancakes = 10;
    int gap_k = 0;
    std::size_t width = 3;   // tile board or grid width
    std::size_t height = 3;  // tile board or grid height
    TileHeuristic tile_heuristic = TileHeuristic::manhattan;
    int discs = 8;
    std::vector<int> partition{6, 2};
    double density = 0.25;
    GridHeuristic grid_heuristic = GridHeuristic::octile;
    RandomGraphParams graph;
    // 0: uniformly random start; > 0: start = random walk of this many moves
    // back from the goal (easier instances).
    int difficulty = 0;
};

// Deterministic instance for (spec, seed). Puzzle goals are canonical.
[[nodiscard]] std::unique_ptr<StateSpace> generate_instance(const DomainSpec& spec, std::uint64_t seed);

}  // namespace nbs

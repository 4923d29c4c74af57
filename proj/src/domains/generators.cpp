#include "nbs/domains/generators.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace nbs {

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Pancakes random_pancakes(std::mt19937_64& rng, int n) {
    Pancakes p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

TileBoard random_tile_board(std::mt19937_64& rng, std::size_t width, std::size_t height) {
    TileBoard b = canonical_tile_goal(width, height);
    std::shuffle(b.begin(), b.end(), rng);
    if (!tile_solvable(b, canonical_tile_goal(width, height), width)) {
        // Swapping two tiles flips permutation parity and leaves the blank alone.
        std::size_t i = 0;
        while (b[i] == 0) ++i;
        std::size_t j = i + 1;
        while (b[j] == 0) ++j;
        std::swap(b[i], b[j]);
    }
    return b;
}

StateId random_hanoi_state(std::mt19937_64& rng, int discs) {
    std::uniform_int_distribution<int> peg(0, hanoi_pegs - 1);
    HanoiPegs pegs(static_cast<std::size_t>(discs));
    for (int& p : pegs) p = peg(rng);
    return pack_hanoi(pegs);
}

StateId random_walk(const StateSpace& space, StateId from, int steps, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    StateId cur = from;
    for (int i = 0; i < steps; ++i) {
        space.predecessors(cur, edges);
        if (edges.empty()) break;
        cur = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)].state;
    }
    return cur;
}

std::pair<StateId, StateId> pick_grid_endpoints(const GridMap& map, std::mt19937_64& rng) {
    std::vector<StateId> open;
    for (std::size_t y = 0; y < map.height; ++y)
        for (std::size_t x = 0; x < map.width; ++x)
            if (map.passable(x, y)) open.push_back(map.cell(x, y));
    if (open.size() < 2) throw std::runtime_error("pick_grid_endpoints: fewer than two open cells");
    GridSpace probe(map, open.front(), open.front(), GridHeuristic::zero);
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const StateId a = open[pick(rng)];
        // Component of a by breadth-first flood fill.
        std::vector<char> seen(map.width * map.height, 0);
        std::vector<StateId> component{a};
        seen[a] = 1;
        for (std::size_t head = 0; head < component.size(); ++head) {
            probe.successors(component[head], edges);
            for (const Edge& e : edges)
                if (!seen[e.state]) {
                    seen[e.state] = 1;
                    component.push_back(e.state);
                }
        }
        if (component.size() < 2) continue;
        StateId b = a;
        while (b == a) b = component[std::uniform_int_distribution<std::size_t>(0, component.size() - 1)(rng)];
        return {a, b};
    }
    throw std::runtime_error("pick_grid_endpoints: no connected pair found");
}

const char* to_string(Domain d) {
    switch (d) {
        case Domain::pancake: return "pancake";
        case Domain::tile: return "tile";
        case Domain::hanoi: return "hanoi";
        case Domain::grid: return "grid";
        case Domain::maze: return "maze";
        case Domain::graph: return "graph";
    }
    return "?";
}

Domain parse_domain(const std::string& name) {
    for (Domain d : {Domain::pancake, Domain::tile, Domain::hanoi, Domain::grid, Domain::maze, Domain::graph})
        if (name == to_string(d)) return d;
    throw std::invalid_argument("unknown domain '" + name + "'");
}

std::unique_ptr<StateSpace> generate_instance(const DomainSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    switch (spec.domain) {
        case Domain::pancake: {
            Pancakes start = random_pancakes(rng, spec.pancakes);
            if (spec.difficulty > 0) {
                Pancakes sorted(start.size());
                std::iota(sorted.begin(), sorted.end(), 1);
                const PancakeSpace solved(sorted, spec.gap_k);
                start = unpack_pancakes(random_walk(solved, solved.goal(), spec.difficulty, rng), spec.pancakes);
            }
            return std::make_unique<PancakeSpace>(std::move(start), spec.gap_k);
        }
        case Domain::tile: {
            TileBoard start = random_tile_board(rng, spec.width, spec.height);
            if (spec.difficulty > 0) {
                const TileSpace solved(spec.width, spec.height, canonical_tile_goal(spec.width, spec.height));
                start = unpack_tiles(random_walk(solved, solved.goal(), spec.difficulty, rng), spec.width * spec.height);
            }
            return std::make_unique<TileSpace>(spec.width, spec.height, std::move(start), spec.tile_heuristic);
        }
        case Domain::hanoi: {
            const StateId goal = canonical_hanoi_goal(spec.discs);
            StateId start = random_hanoi_state(rng, spec.discs);
            if (spec.difficulty > 0) {
                std::vector<Edge> edges;
                start = goal;
                for (int i = 0; i < spec.difficulty; ++i) {
                    hanoi_moves(start, spec.discs, edges);
                    start = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)].state;
                }
            }
            return std::make_unique<HanoiSpace>(spec.discs, start, goal, spec.partition);
        }
        case Domain::grid:
        case Domain::maze: {
            GridMap map = spec.domain == Domain::grid ? random_grid_map(rng, spec.width, spec.height, spec.density)
                                                      : maze_map(rng, spec.width, spec.height);
            const auto [start, goal] = pick_grid_endpoints(map, rng);
            return std::make_unique<GridSpace>(std::move(map), start, goal, spec.grid_heuristic);
        }
        case Domain::graph:
            return std::make_unique<ExplicitGraph>(random_graph(seed, spec.graph));
    }
    throw std::invalid_argument("generate_instance: unknown domain");
}

}  // namespace nbs

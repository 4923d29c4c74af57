#include <doctest.h>

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "nbs/core.hpp"
#include "nbs/domains/generators.hpp"
#include "nbs/nbs.hpp"
#include "oracles.hpp"

using namespace nbs;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(NBS_TEST_DATA) + "/" + name);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::vector<StateId> sampled(const StateSpace& space, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_states(space, n, rng);
}

}  // namespace

TEST_CASE("pancake packing and GAP-k values") {
    const Pancakes p{3, 1, 2, 5, 4};
    CHECK(unpack_pancakes(pack_pancakes(p), 5) == p);
    // Gaps: 3|1, 2|5, 4|plate(6).
    CHECK(gap_h(p, 0) == 3);
    CHECK(gap_h(p, 1) == 2);  // 3|1 involves pancake 1
    CHECK(gap_h(p, 2) == 1);  // 2|5 involves pancake 2
    CHECK(gap_h(Pancakes{1, 2, 3}, 0) == 0);
    CHECK_THROWS_AS(PancakeSpace(Pancakes{1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PancakeSpace(Pancakes{2, 1, 3}, 3), std::invalid_argument);
}

TEST_CASE("pancake GAP-k is admissible both ways and consistent") {
    const oracle::PancakeTable table(8);
    std::mt19937_64 rng(12);
    for (int i = 0; i < 40; ++i) {
        for (int k : {0, 2}) {
            const PancakeSpace space(random_pancakes(rng, 8), k);
            const Pancakes start = unpack_pancakes(space.start(), 8);
            const Pancakes goal = unpack_pancakes(space.goal(), 8);
            CHECK(space.h_backward(space.start()) == Cost::zero());
            CHECK(space.h_forward(space.goal()) == Cost::zero());
            const auto states = sampled(space, 200, static_cast<std::uint64_t>(i));
            for (StateId s : states) {
                const Pancakes p = unpack_pancakes(s, 8);
                REQUIRE(space.h_forward(s) <= Cost(table.distance(p, goal)));
                REQUIRE(space.h_backward(s) <= Cost(table.distance(start, p)));
            }
            CHECK(check_consistency(space, states).ok());
            CHECK(nbs_search(space).cost == Cost(table.distance(start, goal)));
        }
    }
}

TEST_CASE("tile solvability matches reachability and Manhattan is admissible") {
    const oracle::TileTable table(3, 3);
    std::mt19937_64 rng(2);
    const TileBoard goal = canonical_tile_goal(3, 3);
    for (int i = 0; i < 300; ++i) {
        TileBoard b = goal;
        std::shuffle(b.begin(), b.end(), rng);
        CHECK(tile_solvable(b, goal, 3) == (table.distance(b, goal) >= 0));
    }
    for (int i = 0; i < 30; ++i) {
        const TileSpace space(3, 3, random_tile_board(rng, 3, 3));
        const TileBoard start = unpack_tiles(space.start(), 9);
        const auto states = sampled(space, 200, static_cast<std::uint64_t>(i));
        for (StateId s : states) {
            const TileBoard b = unpack_tiles(s, 9);
            REQUIRE(space.h_forward(s) == Cost(manhattan_h(b, goal, 3)));
            REQUIRE(space.h_forward(s) <= Cost(table.distance(b, goal)));
            REQUIRE(space.h_backward(s) <= Cost(table.distance(start, b)));
        }
        CHECK(check_consistency(space, states).ok());
        CHECK(nbs_search(space).cost == Cost(table.distance(start, goal)));
    }
    TileBoard unsolvable = goal;
    std::swap(unsolvable[1], unsolvable[2]);
    CHECK_THROWS_AS(TileSpace(3, 3, unsolvable), std::invalid_argument);
    CHECK_THROWS_AS((void)manhattan_h(goal, canonical_tile_goal(2, 2), 3), std::invalid_argument);
}

TEST_CASE("four-peg hanoi: optimal transfer lengths and an admissible PDB") {
    // Minimal moves to transfer n discs between pegs with four pegs.
    const int transfer[] = {0, 1, 3, 5, 9, 13, 17, 25, 33};
    for (int n = 1; n <= 8; ++n) {
        const HanoiPegs all_first(static_cast<std::size_t>(n), 0);
        const std::vector<int> partition = n > 2 ? std::vector<int>{n - 2, 2} : std::vector<int>{n};
        const HanoiSpace space(n, pack_hanoi(all_first), canonical_hanoi_goal(n), partition);
        CHECK(nbs_search(space).cost == Cost(transfer[n]));
        const auto d = oracle::hanoi_bfs(n, unpack_hanoi(canonical_hanoi_goal(n), n));
        CHECK(d[pack_hanoi(all_first)] == transfer[n]);
    }

    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
        const StateId start = random_hanoi_state(rng, 8);
        const HanoiSpace space(8, start, canonical_hanoi_goal(8), std::vector<int>{6, 2});
        const auto to_goal = oracle::hanoi_bfs(8, unpack_hanoi(space.goal(), 8));
        const auto from_start = oracle::hanoi_bfs(8, unpack_hanoi(start, 8));
        for (StateId s = 0; s < (StateId{1} << 16); s += 7) {
            REQUIRE(space.h_forward(s) <= Cost(to_goal[s]));
            REQUIRE(space.h_backward(s) <= Cost(from_start[s]));
        }
        std::vector<StateId> all(1 << 16);
        std::iota(all.begin(), all.end(), StateId{0});
        CHECK(check_consistency(space, all).ok());
    }
    CHECK(parse_partition("6+2") == std::vector<int>{6, 2});
    CHECK_THROWS_AS((void)parse_partition("6+"), std::invalid_argument);
    CHECK_THROWS_AS(HanoiSpace(8, 0, canonical_hanoi_goal(8), std::vector<int>{5, 2}), std::invalid_argument);
    CHECK_THROWS_AS((void)build_hanoi_pdb(8, 0, std::vector<int>{8}, 100), CapExceeded);
}

TEST_CASE("map parsing, emission and errors") {
    const std::string text = read_data("tiny.map");
    const GridMap map = parse_map(text);
    CHECK(map.width == 12);
    CHECK(map.height == 10);
    CHECK_FALSE(map.passable(1, 1));
    CHECK(map.passable(6, 5));  // 'G' is ground
    CHECK_FALSE(map.passable(8, 1));  // tree
    CHECK(parse_map(emit_map(map)).rows == map.rows);

    CHECK_THROWS_AS((void)parse_map("type octile\nheight 1\nwidth 2\nmap\n..\n..\n"), MapParseError);
    CHECK_THROWS_AS((void)parse_map("type octile\nheight 1\nwidth 2\nmap\n.x\n"), MapParseError);
    CHECK_THROWS_AS((void)parse_map("type grid\nheight 1\nwidth 2\nmap\n..\n"), MapParseError);
    CHECK_THROWS_AS((void)parse_map("type octile\nheight 2\nwidth 2\nmap\n..\n.\n"), MapParseError);
}

TEST_CASE("scenario optima agree with exact search") {
    const GridMap map = parse_map(read_data("tiny.map"));
    const auto entries = parse_scen(read_data("tiny.scen"));
    REQUIRE(entries.size() == 12);
    for (const ScenarioEntry& e : entries) {
        const GridSpace space(map, map.cell(e.start_x, e.start_y), map.cell(e.goal_x, e.goal_y));
        const NbsResult r = nbs_search(space);
        CHECK(r.cost.to_double() == doctest::Approx(e.optimal).epsilon(1e-9));
        CHECK(r.cost == oracle::grid_dijkstra(map, space.start())[space.goal()]);
    }
    CHECK_THROWS_AS((void)parse_scen("version 1\n0 m.map 4 4 0 0\n"), MapParseError);
}

TEST_CASE("grid moves forbid corner cutting and octile is exact in open space") {
    const GridMap map = parse_map("type octile\nheight 2\nwidth 2\nmap\n.@\n..\n");
    const GridSpace space(map, map.cell(0, 0), map.cell(1, 1));
    std::vector<Edge> edges;
    space.successors(map.cell(0, 0), edges);
    CHECK(edges.size() == 1);  // down only; the diagonal would cut the wall
    CHECK(nbs_search(space).cost == Cost(2));

    CHECK(octile_h(0, 0, 3, 5) == Cost(2, 3));
    const GridMap open = parse_map("type octile\nheight 4\nwidth 6\nmap\n......\n......\n......\n......\n");
    const GridSpace free(open, open.cell(0, 0), open.cell(5, 3));
    CHECK(nbs_search(free).cost == octile_h(0, 0, 5, 3));
    CHECK(free.h_forward(free.start()) == octile_h(0, 0, 5, 3));
    const GridSpace blind(open, open.cell(0, 0), open.cell(5, 3), GridHeuristic::zero);
    CHECK(blind.h_forward(blind.start()) == Cost::zero());
}

TEST_CASE("generated instances are deterministic and well formed") {
    for (Domain d : {Domain::pancake, Domain::tile, Domain::hanoi, Domain::grid, Domain::maze, Domain::graph}) {
        DomainSpec spec;
        spec.domain = d;
        spec.width = d == Domain::tile ? 3 : 32;
        spec.height = spec.width;
        CAPTURE(to_string(d));
        CHECK(parse_domain(to_string(d)) == d);
        for (std::uint64_t i = 0; i < 5; ++i) {
            const auto a = generate_instance(spec, instance_seed(1, i));
            const auto b = generate_instance(spec, instance_seed(1, i));
            CHECK(a->start() == b->start());
            CHECK(a->goal() == b->goal());
            CHECK(a->h_forward(a->goal()) == Cost::zero());
            CHECK(a->h_backward(a->start()) == Cost::zero());
        }
    }
    CHECK(instance_seed(1, 0) != instance_seed(1, 1));
    CHECK_THROWS_AS((void)parse_domain("sokoban"), std::invalid_argument);
}

TEST_CASE("maze cells are all mutually reachable") {
    std::mt19937_64 rng(6);
    const GridMap maze = maze_map(rng, 21, 15);
    std::size_t first = 0;
    while (!maze.passable(first)) ++first;
    const auto d = oracle::grid_dijkstra(maze, first);
    for (StateId c = 0; c < maze.width * maze.height; ++c)
        if (maze.passable(c)) REQUIRE(d[c].is_finite());
}

TEST_CASE("random walks from the goal give easier instances") {
    DomainSpec spec;
    spec.domain = Domain::tile;
    spec.difficulty = 6;
    const oracle::TileTable table(3, 3);
    for (std::uint64_t i = 0; i < 20; ++i) {
        const auto space = generate_instance(spec, instance_seed(4, i));
        CHECK(table.distance(unpack_tiles(space->start(), 9), canonical_tile_goal(3, 3)) <= 6);
    }
}

TEST_CASE("scaled-oracle graph heuristics are consistent and anchored") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        const ExplicitGraph g = random_graph(instance_seed(2, i));
        std::vector<StateId> all(g.size());
        std::iota(all.begin(), all.end(), StateId{0});
        CHECK(check_consistency(g, all).ok());
        const auto d_b = oracle::graph_dijkstra(g, g.goal(), true);
        for (StateId s : all)
            if (d_b[s].is_finite()) REQUIRE(g.h_forward(s) <= d_b[s]);
    }
}

TEST_CASE("consistency checker reports violations") {
    ExplicitGraph g(3, 0, 2);
    g.add_edge(0, 1, Cost(1));
    g.add_edge(1, 2, Cost(1));
    g.set_heuristics({Cost(2), Cost(0), Cost(0)}, {Cost(0), Cost(1), Cost(2)});
    const std::vector<StateId> all{0, 1, 2};
    const ConsistencyReport report = check_consistency(g, all);
    CHECK_FALSE(report.ok());
    CHECK(report.violations.size() == 1);
    CHECK(report.violations[0].state == 0);
}

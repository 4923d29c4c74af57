#include <doctest.h>

#include <algorithm>

#include "nbs/domains/explicit_graph.hpp"
#include "nbs/domains/generators.hpp"
#include "nbs/mx_analysis.hpp"
#include "nbs/nbs.hpp"
#include "oracles.hpp"

using namespace nbs;

TEST_CASE("nbs expands exactly two states on each worst-case fixture") {
    for (WorstCase which : {WorstCase::i1, WorstCase::i2}) {
        const ExplicitGraph g = worst_case_fixture(which);
        const NbsResult r = nbs_search(g);
        CHECK(r.solved());
        CHECK(r.cost == Cost(3));
        CHECK(r.trace.expanded == 2);
        CHECK(oracle::path_cost(g, r.solution_path) == Cost(3));
    }
}

TEST_CASE("start equal to goal costs nothing and expands nothing") {
    ExplicitGraph g(3, 1, 1);
    g.add_edge(1, 2, Cost(4));
    const NbsResult r = nbs_search(g);
    CHECK(r.solved());
    CHECK(r.cost == Cost::zero());
    CHECK(r.trace.expanded == 0);
    CHECK(r.solution_path == std::vector<StateId>{1});
}

TEST_CASE("unreachable goal reports no solution") {
    ExplicitGraph g(4, 0, 3);
    g.add_edge(0, 1, Cost(1));
    g.add_edge(2, 3, Cost(1));
    const NbsResult r = nbs_search(g);
    CHECK(r.status == SearchStatus::no_solution);
    CHECK(r.cost.is_infinite());
}

TEST_CASE("corridor of n states costs n - 1") {
    for (std::size_t n : {2u, 3u, 10u, 57u}) {
        const ExplicitGraph g = corridor(n);
        const NbsResult r = nbs_search(g);
        CHECK(r.cost == Cost(static_cast<std::int64_t>(n - 1)));
        CHECK(r.solution_path.size() == n);
    }
}

TEST_CASE("expansion cap stops the search") {
    const ExplicitGraph g = corridor(100);
    NbsOptions options;
    options.limits.max_expansions = 5;
    const NbsResult r = nbs_search(g, options);
    CHECK(r.status == SearchStatus::limit_reached);
    CHECK(r.trace.expanded <= 6);
}

TEST_CASE("nbs matches array Dijkstra on random graphs, never reopens, and keeps C_lb monotone") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        RandomGraphParams params;
        params.states = 60;
        const ExplicitGraph g = random_graph(instance_seed(99, i), params);
        const auto d_f = oracle::graph_dijkstra(g, g.start(), false);
        const auto d_b = oracle::graph_dijkstra(g, g.goal(), true);

        NbsOptions options;
        options.record_lower_bounds = true;
        const NbsResult r = nbs_search(g, options);
        REQUIRE(r.cost == d_f[g.goal()]);
        CHECK(r.trace.reopened == 0);
        CHECK(std::is_sorted(r.lower_bound_history.begin(), r.lower_bound_history.end()));
        for (const TraceEntry& e : r.trace.expansions) {
            const Cost expected = e.direction == Direction::forward ? d_f[e.state] : d_b[e.state];
            REQUIRE(e.g == expected);
        }
        if (r.solved()) CHECK(oracle::path_cost(g, r.solution_path) == r.cost);
    }
}

TEST_CASE("nbs on octile grids returns exact a + b sqrt2 optima") {
    DomainSpec spec;
    spec.domain = Domain::grid;
    spec.width = 16;
    spec.height = 16;
    for (std::uint64_t i = 0; i < 60; ++i) {
        const auto space = generate_instance(spec, instance_seed(5, i));
        const auto& grid = dynamic_cast<const GridSpace&>(*space);
        const auto d = oracle::grid_dijkstra(grid.map(), space->start());
        const NbsResult r = nbs_search(*space);
        REQUIRE(r.cost == d[space->goal()]);
        CHECK(oracle::path_cost(*space, r.solution_path) == r.cost);
    }
}

TEST_CASE("nbs necessary expansions stay within twice the minimum vertex cover") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        RandomGraphParams params;
        params.states = 40;
        const ExplicitGraph g = random_graph(instance_seed(17, i), params);
        if (oracle::graph_dijkstra(g, g.start(), false)[g.goal()].is_infinite()) continue;
        const NbsResult r = nbs_search(g);
        const MustExpandGraph mx = build_gmx(g);
        const std::size_t vc = oracle::exact_vertex_cover(mx.left.size(), mx.right.size(), mx.graph.adjacency);
        const CoverReport report = grade_trace(r.trace, mx, vc);
        CHECK(report.is_cover);
        CHECK(report.algorithm_cover_size <= 2 * vc);
        CHECK(vc <= report.algorithm_cover_size);
    }
}

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "nbs/domains/explicit_graph.hpp"
#include "nbs/domains/generators.hpp"
#include "nbs/mx_analysis.hpp"
#include "nbs/nbs.hpp"
#include "oracles.hpp"

using namespace nbs;

namespace {

BipartiteGraph random_bipartite(std::mt19937_64& rng, std::size_t max_side, double max_p) {
    std::uniform_int_distribution<std::size_t> side(1, max_side);
    BipartiteGraph g;
    g.left_size = side(rng);
    g.right_size = side(rng);
    const double p = std::uniform_real_distribution<double>(0.02, max_p)(rng);
    std::bernoulli_distribution edge(p);
    g.adjacency.resize(g.left_size);
    for (std::uint32_t i = 0; i < g.left_size; ++i)
        for (std::uint32_t j = 0; j < g.right_size; ++j)
            if (edge(rng)) g.adjacency[i].push_back(j);
    return g;
}

bool covers(const BipartiteGraph& g, const VertexCover& c) {
    std::set<std::uint32_t> l(c.left.begin(), c.left.end());
    std::set<std::uint32_t> r(c.right.begin(), c.right.end());
    for (std::uint32_t i = 0; i < g.left_size; ++i)
        for (std::uint32_t j : g.adjacency[i])
            if (!l.contains(i) && !r.contains(j)) return false;
    return true;
}

}  // namespace

TEST_CASE("matching is valid and its size equals the exact minimum cover") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const BipartiteGraph g = random_bipartite(rng, 16, 0.4);
        const Matching m = maximum_matching(g);
        std::size_t pairs = 0;
        for (std::uint32_t u = 0; u < g.left_size; ++u) {
            if (m.left_mate[u] == unmatched) continue;
            ++pairs;
            CHECK(m.right_mate[m.left_mate[u]] == u);
            const auto& adj = g.adjacency[u];
            CHECK(std::find(adj.begin(), adj.end(), m.left_mate[u]) != adj.end());
        }
        CHECK(pairs == m.size);
        const VertexCover c = minimum_vertex_cover(g, m);
        CHECK(covers(g, c));
        CHECK(c.size() == m.size);
        CHECK(c.size() == oracle::exact_vertex_cover(g.left_size, g.right_size, g.adjacency));
    }
}

TEST_CASE("empty and edgeless graphs have empty covers") {
    BipartiteGraph g;
    CHECK(minimum_vertex_cover(g).size() == 0);
    g.left_size = 3;
    g.right_size = 2;
    g.adjacency.resize(3);
    CHECK(minimum_vertex_cover(g).size() == 0);
}

TEST_CASE("must-expand graph of I1 and I2") {
    // h = 0 and C* = 3. On I1, d_F(s)=0, d_F(t)=1; d_B(g)=0, d_B(t)=3.
    const MustExpandGraph g1 = build_gmx(worst_case_fixture(WorstCase::i1));
    CHECK(g1.c_star == Cost(3));
    CHECK(g1.edge_count() == 2);  // (s, g) and (t, g)
    CHECK(minimum_vertex_cover(g1.graph).size() == 1);
    const MustExpandGraph g2 = build_gmx(worst_case_fixture(WorstCase::i2));
    CHECK(g2.edge_count() == 2);  // (s, g) and (s, t)
    CHECK(minimum_vertex_cover(g2.graph).size() == 1);
}

TEST_CASE("build_gmx agrees with the Floyd-Warshall definition") {
    for (std::uint64_t i = 0; i < 150; ++i) {
        RandomGraphParams params;
        params.states = 25;
        params.mean_out_degree = 2.5;
        const ExplicitGraph g = random_graph(instance_seed(61, i), params);
        if (oracle::graph_dijkstra(g, g.start(), false)[g.goal()].is_infinite()) continue;
        const MustExpandGraph mx = build_gmx(g);
        std::set<std::pair<StateId, StateId>> built;
        for (std::size_t u = 0; u < mx.left.size(); ++u)
            for (std::uint32_t v : mx.graph.adjacency[u]) built.emplace(mx.left[u], mx.right[v]);
        const auto expected = oracle::brute_force_gmx_edges(g);
        CHECK(built == std::set<std::pair<StateId, StateId>>(expected.begin(), expected.end()));
    }
}

TEST_CASE("build_gmx refuses inconsistent heuristics, caps, and unreachable goals") {
    ExplicitGraph bad(3, 0, 2);
    bad.add_edge(0, 1, Cost(1));
    bad.add_edge(1, 2, Cost(5));
    bad.set_heuristics({Cost(5), Cost(0), Cost(0)}, {});
    CHECK_THROWS_AS((void)build_gmx(bad), PreconditionError);

    CHECK_THROWS_AS((void)build_gmx(corridor(500), {.max_states = 10}), CapExceeded);

    ExplicitGraph cut(3, 0, 2);
    cut.add_edge(0, 1, Cost(1));
    CHECK_THROWS_AS((void)build_gmx(cut), std::invalid_argument);
}

TEST_CASE("grade_trace counts necessary expansions and detects foreign states") {
    const ExplicitGraph g = worst_case_fixture(WorstCase::i1);
    const MustExpandGraph mx = build_gmx(g);
    const NbsResult r = nbs_search(g);
    const CoverReport report = grade_trace(r.trace, mx);
    CHECK(report.vc_size == 1);
    CHECK(report.algorithm_cover_size == 2);
    CHECK(report.is_cover);
    REQUIRE(report.ratio.has_value());
    CHECK(*report.ratio == doctest::Approx(2.0));

    SearchTrace foreign;
    foreign.record(Direction::forward, SearchNode{.state = 77, .g = Cost(0), .f = Cost(0)}, Cost(0));
    CHECK_THROWS_AS((void)grade_trace(foreign, mx), TraceMismatch);

    SearchTrace empty;
    const CoverReport none = grade_trace(empty, mx);
    CHECK_FALSE(none.is_cover);
    CHECK(none.algorithm_cover_size == 0);
}

TEST_CASE("ratio is absent when the cover is empty") {
    // h is perfect, so no pair has lb < C*.
    ExplicitGraph g(2, 0, 1);
    g.add_edge(0, 1, Cost(4));
    g.set_heuristics({Cost(4), Cost(0)}, {Cost(0), Cost(4)});
    const MustExpandGraph mx = build_gmx(g);
    CHECK(mx.edge_count() == 0);
    const CoverReport report = grade_trace(nbs_search(g).trace, mx);
    CHECK(report.vc_size == 0);
    CHECK(report.is_cover);
    CHECK_FALSE(report.ratio.has_value());
}

TEST_CASE("gmx text form round-trips, cover included") {
    RandomGraphParams params;
    params.states = 30;
    const ExplicitGraph g = random_graph(instance_seed(3, 3), params);
    const MustExpandGraph mx = build_gmx(g);
    const VertexCover cover = minimum_vertex_cover(mx.graph);
    const GmxDocument doc = to_document(g, mx, cover);
    std::stringstream text;
    write_gmx(text, doc);
    const GmxDocument back = read_gmx(text);
    CHECK(back.c_star == doc.c_star);
    CHECK(back.left == doc.left);
    CHECK(back.right == doc.right);
    CHECK(back.left_d == doc.left_d);
    CHECK(back.right_f == doc.right_f);
    CHECK(back.graph.adjacency == doc.graph.adjacency);
    REQUIRE(back.cover.has_value());
    CHECK(back.cover->size() == cover.size());
}

TEST_CASE("read_gmx rejects malformed text") {
    std::istringstream bad_magic("gmx 2\n");
    CHECK_THROWS_AS((void)read_gmx(bad_magic), std::invalid_argument);
    std::istringstream truncated("gmx 1\nc_star 3\nleft 2\n0 0 0\n");
    CHECK_THROWS_AS((void)read_gmx(truncated), std::invalid_argument);
    std::istringstream bad_edge("gmx 1\nc_star 3\nleft 1\n0 0 0\nright 1\n2 0 0\nedges 1\n0 4\n");
    CHECK_THROWS_AS((void)read_gmx(bad_edge), std::invalid_argument);
}

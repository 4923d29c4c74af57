#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nbs/bench/experiment.hpp"

using namespace nbs;
using namespace nbs::bench;

namespace {

// CSV with the wall-clock columns blanked out.
std::string stable_csv(const ExperimentResult& r) {
    std::istringstream in(emit(r, Format::csv));
    std::ostringstream out;
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
        for (std::size_t col : {12u, 13u, 14u})
            if (col < cells.size()) cells[col].clear();
        for (const std::string& c : cells) out << c << ',';
        out << '\n';
    }
    return out.str();
}

}  // namespace

TEST_CASE("algorithm names round-trip and unknown names are rejected") {
    for (Algorithm a : all_algorithms()) CHECK(parse_algorithm(to_string(a)) == a);
    CHECK(parse_algorithms("nbs,mm0").size() == 2);
    CHECK_THROWS_AS((void)parse_algorithm("ida"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_format("xml"), std::invalid_argument);
}

TEST_CASE("fixture experiment: every algorithm returns 3") {
    ExperimentConfig config;
    config.fixtures = true;
    config.analyze = true;
    const ExperimentResult r = run_experiment(config);
    CHECK(r.ok());
    CHECK(r.rows.size() == 2 * all_algorithms().size());
    for (const ResultRow& row : r.rows) CHECK(row.cost == Cost(3));
    for (const ResultRow& row : r.rows)
        if (row.algorithm == Algorithm::nbs) CHECK(row.ratio == doctest::Approx(2.0));
}

TEST_CASE("empty table gives a header-only CSV") {
    const ExperimentResult empty;
    CHECK(emit(empty, Format::csv) == csv_header() + "\n");
    CHECK(rows_from_json(emit(empty, Format::json)).empty());
}

TEST_CASE("rows survive a JSON round trip unchanged") {
    ExperimentConfig config;
    config.domain.domain = Domain::graph;
    config.count = 3;
    config.analyze = true;
    const ExperimentResult r = run_experiment(config);
    REQUIRE_FALSE(r.rows.empty());
    CHECK(rows_from_json(emit(r, Format::json)) == r.rows);
}

TEST_CASE("markdown aggregate has one data row per algorithm") {
    ExperimentConfig config;
    config.domain.domain = Domain::tile;
    config.algorithms = {Algorithm::nbs, Algorithm::astar_f};
    config.count = 3;
    const std::string md = emit(run_experiment(config), Format::markdown);
    std::size_t lines = 0;
    for (char c : md) lines += c == '\n';
    CHECK(lines == 2 + 2);
    CHECK(md.find("| nbs |") != std::string::npos);
    CHECK(md.find("| astar_f |") != std::string::npos);
}

TEST_CASE("same config and seed give identical CSV apart from timings") {
    ExperimentConfig config;
    config.domain.domain = Domain::pancake;
    config.domain.pancakes = 8;
    config.count = 4;
    config.seed = 12;
    CHECK(stable_csv(run_experiment(config)) == stable_csv(run_experiment(config)));
}

TEST_CASE("graph analysis keeps every nbs ratio at or below 2") {
    ExperimentConfig config;
    config.domain.domain = Domain::graph;
    config.count = 30;
    config.analyze = true;
    const ExperimentResult r = run_experiment(config);
    CHECK(r.ok());
    for (const ResultRow& row : r.rows)
        if (row.algorithm == Algorithm::nbs && row.ratio) CHECK(*row.ratio <= 2.0);
    for (const ScatterPoint& p : r.scatter)
        if (p.vc_size) CHECK(p.nbs_necessary <= 2 * *p.vc_size);
}

TEST_CASE("capped runs are marked unsolved and left out of the means") {
    ExperimentConfig config;
    config.domain.domain = Domain::tile;
    config.algorithms = {Algorithm::mm0, Algorithm::astar_f};
    config.count = 3;
    config.limits.max_expansions = 2;
    const ExperimentResult r = run_experiment(config);
    CHECK(r.ok());
    for (const AggregateRow& a : r.aggregates) {
        CHECK(a.solved + a.unsolved == 3);
        if (a.algorithm == Algorithm::mm0) CHECK(a.unsolved > 0);
    }
    for (const ResultRow& row : r.rows)
        if (row.status == "limit_reached") CHECK_FALSE(row.solved());
}

TEST_CASE("scenario and instance files feed the runner") {
    ExperimentConfig grid;
    grid.map_file = std::string(NBS_TEST_DATA) + "/tiny.map";
    grid.scen_file = std::string(NBS_TEST_DATA) + "/tiny.scen";
    grid.count = 0;
    grid.domain.domain = Domain::grid;
    const ExperimentResult g = run_experiment(grid);
    CHECK(g.ok());
    CHECK(g.notes.empty());
    CHECK(g.rows.size() == 12 * all_algorithms().size());

    const std::string path = "bench_instances.txt";
    {
        std::ofstream out(path);
        out << "# id then tiles\n1 1 2 0 3 4 5 6 7 8\n8 7 6 5 4 3 2 1 0\n";
    }
    ExperimentConfig tiles;
    tiles.instance_file = path;
    tiles.count = 0;
    tiles.domain.domain = Domain::tile;
    tiles.algorithms = {Algorithm::nbs, Algorithm::astar_f};
    const ExperimentResult t = run_experiment(tiles);
    CHECK(t.ok());
    CHECK(t.rows.size() == 4);
    CHECK(t.rows[0].cost == Cost(2));
    std::remove(path.c_str());
}

TEST_CASE("invalid configurations are rejected") {
    ExperimentConfig config;
    config.algorithms.clear();
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = {};
    config.limits.max_expansions = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = {};
    config.map_file = "x.map";
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = {};
    config.fixtures = true;
    config.instance_file = "x.txt";
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = {};
    config.instance_file = "does-not-exist.txt";
    CHECK_THROWS_AS((void)run_experiment(config), std::invalid_argument);
}

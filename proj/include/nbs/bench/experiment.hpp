#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/domains/generators.hpp"
#include "nbs/mx_analysis.hpp"
#include "nbs/search.hpp"

namespace nbs::bench {

enum class Algorithm { nbs, astar_f, astar_b, bs_star, mm, mme, mm0 };

[[nodiscard]] const char* to_string(Algorithm a);
// Throws std::invalid_argument on unknown names.
[[nodiscard]] Algorithm parse_algorithm(const std::string& name);
[[nodiscard]] std::vector<Algorithm> parse_algorithms(const std::string& comma_list);
[[nodiscard]] const std::vector<Algorithm>& all_algorithms();

// `mme_epsilon` is the smallest edge cost of the domain.
[[nodiscard]] SearchResult run_algorithm(Algorithm a, const StateSpace& space, const SearchLimits& limits,
                                         Cost mme_epsilon = Cost(1));

struct ExperimentConfig {
    DomainSpec domain;
    std::vector<Algorithm> algorithms = all_algorithms();
    std::uint64_t seed = 1;
    std::size_t count = 10;
    // Alternative instance sources. With map_file + scen_file the domain is
    // grid and `count` caps the scenario entries used (0 = all). An
    // instance_file holds one pancake, tile or hanoi configuration per line.
    std::optional<std::string> map_file;
    std::optional<std::string> scen_file;
    std::optional<std::string> instance_file;
    bool fixtures = false;  // the two three-state worst-case instances
    SearchLimits limits{.max_expansions = 10'000'000, .max_seconds = 60.0};
    bool analyze = false;
    GmxOptions gmx;

    // Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;
};

struct ResultRow {
    std::string instance;
    Algorithm algorithm = Algorithm::nbs;
    // solved, no_solution, limit_reached or precondition_failed
    std::string status;
    Cost cost = Cost::infinity();
    std::size_t expanded = 0;
    std::size_t necessary = 0;
    std::size_t generated = 0;
    std::size_t reopened = 0;
    std::size_t closed_unexpanded = 0;
    std::size_t f_equal_cstar = 0;
    double f_equal_cstar_pct = 0.0;  // 100 * f_equal_cstar / expanded
    double wall_seconds = 0.0;
    double expansion_rate = 0.0;     // expanded / wall_seconds
    double setup_seconds = 0.0;      // instance construction (PDB build)
    std::optional<std::size_t> vc_size;
    std::optional<double> ratio;

    [[nodiscard]] bool solved() const { return status == "solved"; }
    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

// Means over solved rows of one algorithm; unsolved rows are only counted.
struct AggregateRow {
    Algorithm algorithm = Algorithm::nbs;
    std::size_t solved = 0;
    std::size_t unsolved = 0;
    double mean_expanded = 0.0;
    double mean_necessary = 0.0;
    double mean_f_equal_cstar_pct = 0.0;
    double mean_wall_seconds = 0.0;
    double expansion_rate = 0.0;  // total expanded / total wall time
};

// NBS necessary expansions against the smallest necessary count among the
// other algorithms on the same instance.
struct ScatterPoint {
    std::string instance;
    std::size_t baseline_necessary = 0;
    std::size_t nbs_necessary = 0;
    std::optional<std::size_t> vc_size;
};

struct ExperimentResult {
    std::string domain;
    std::vector<ResultRow> rows;
    std::vector<AggregateRow> aggregates;
    std::vector<ScatterPoint> scatter;
    std::vector<std::string> mismatches;  // cross-algorithm cost disagreement
    std::vector<std::string> violations;  // NBS necessary > 2 * VC, or not a cover
    std::vector<std::string> notes;       // skipped analysis, reference-cost deviations

    [[nodiscard]] bool ok() const { return mismatches.empty() && violations.empty(); }
};

[[nodiscard]] ExperimentResult run_experiment(const ExperimentConfig& config);

// Recomputes aggregates and scatter from rows (used after filtering).
[[nodiscard]] std::vector<AggregateRow> aggregate(const std::vector<ResultRow>& rows,
                                                  const std::vector<Algorithm>& order);

enum class Format { csv, json, markdown };
[[nodiscard]] Format parse_format(const std::string& name);

// CSV columns, in order:
//   instance,algorithm,status,cost,cost_value,expanded,necessary,generated,
//   reopened,closed_unexpanded,f_equal_cstar,f_equal_cstar_pct,wall_seconds,
//   expansion_rate,setup_seconds,vc_size,ratio
// JSON is an array of row objects with the same keys. Markdown is the
// per-algorithm aggregate table.
[[nodiscard]] std::string emit(const ExperimentResult& result, Format format);
[[nodiscard]] std::string csv_header();
[[nodiscard]] std::vector<ResultRow> rows_from_json(std::string_view text);

}  // namespace nbs::bench

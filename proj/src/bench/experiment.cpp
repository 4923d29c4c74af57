#include "nbs/bench/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nbs/baselines.hpp"
#include "nbs/nbs.hpp"

namespace nbs::bench {

namespace {

constexpr Algorithm algorithm_list[] = {Algorithm::nbs,     Algorithm::astar_f, Algorithm::astar_b, Algorithm::bs_star,
                                        Algorithm::mm,      Algorithm::mme,     Algorithm::mm0};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Instance {
    std::string id;
    std::unique_ptr<StateSpace> space;
    double setup_seconds = 0.0;
    std::optional<double> reference_cost;
};

std::vector<std::vector<int>> read_configurations(const std::string& path, std::size_t width) {
    std::istringstream lines(read_file(path));
    std::vector<std::vector<int>> out;
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::vector<int> values;
        for (int v; fields >> v;) values.push_back(v);
        if (values.empty()) continue;
        if (values.size() == width + 1) values.erase(values.begin());  // leading instance id
        if (values.size() != width)
            throw std::invalid_argument(path + ": expected " + std::to_string(width) + " values per line");
        out.push_back(std::move(values));
    }
    return out;
}

std::unique_ptr<StateSpace> space_from_configuration(const DomainSpec& spec, std::vector<int> values) {
    switch (spec.domain) {
        case Domain::pancake:
            if (std::find(values.begin(), values.end(), 0) != values.end())
                for (int& v : values) ++v;
            return std::make_unique<PancakeSpace>(std::move(values), spec.gap_k);
        case Domain::tile:
            return std::make_unique<TileSpace>(spec.width, spec.height, std::move(values), spec.tile_heuristic);
        case Domain::hanoi:
            return std::make_unique<HanoiSpace>(spec.discs, pack_hanoi(values), canonical_hanoi_goal(spec.discs),
                                                spec.partition);
        default:
            throw std::invalid_argument("instance files hold pancake, tile or hanoi configurations");
    }
}

std::vector<Instance> load_instances(const ExperimentConfig& config) {
    std::vector<Instance> out;
    auto timed = [&](std::string id, auto make) {
        const auto t = Clock::now();
        Instance inst{std::move(id), make(), 0.0, std::nullopt};
        inst.setup_seconds = seconds_since(t);
        out.push_back(std::move(inst));
    };

    if (config.fixtures) {
        timed("I1", [] { return std::make_unique<ExplicitGraph>(worst_case_fixture(WorstCase::i1)); });
        timed("I2", [] { return std::make_unique<ExplicitGraph>(worst_case_fixture(WorstCase::i2)); });
        return out;
    }
    if (config.map_file) {
        const GridMap map = parse_map(read_file(*config.map_file));
        const auto entries = parse_scen(read_file(*config.scen_file));
        for (std::size_t i = 0; i < entries.size() && (config.count == 0 || i < config.count); ++i) {
            const ScenarioEntry& e = entries[i];
            if (e.map_width != map.width || e.map_height != map.height)
                throw std::invalid_argument("scenario entry " + std::to_string(i) + " does not match the map size");
            timed("scen-" + std::to_string(i), [&] {
                return std::make_unique<GridSpace>(map, map.cell(e.start_x, e.start_y), map.cell(e.goal_x, e.goal_y),
                                                   config.domain.grid_heuristic);
            });
            out.back().reference_cost = e.optimal;
        }
        return out;
    }
    if (config.instance_file) {
        const DomainSpec& spec = config.domain;
        const std::size_t width = spec.domain == Domain::pancake ? static_cast<std::size_t>(spec.pancakes)
                                  : spec.domain == Domain::tile  ? spec.width * spec.height
                                                                 : static_cast<std::size_t>(spec.discs);
        const auto configurations = read_configurations(*config.instance_file, width);
        for (std::size_t i = 0; i < configurations.size() && (config.count == 0 || i < config.count); ++i)
            timed(std::string(to_string(spec.domain)) + "-" + std::to_string(i),
                  [&] { return space_from_configuration(spec, configurations[i]); });
        return out;
    }
    for (std::size_t i = 0; i < config.count; ++i)
        timed(std::string(to_string(config.domain.domain)) + "-" + std::to_string(i),
              [&] { return generate_instance(config.domain, instance_seed(config.seed, i)); });
    return out;
}

Cost mme_epsilon(const ExperimentConfig& config) {
    if (!config.fixtures && config.domain.domain == Domain::graph) return Cost(config.domain.graph.min_cost);
    return Cost(1);
}

std::string format_double(double v) {
    std::ostringstream out;
    out << std::setprecision(10) << v;
    return out.str();
}

}  // namespace

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::nbs: return "nbs";
        case Algorithm::astar_f: return "astar_f";
        case Algorithm::astar_b: return "astar_b";
        case Algorithm::bs_star: return "bs_star";
        case Algorithm::mm: return "mm";
        case Algorithm::mme: return "mme";
        case Algorithm::mm0: return "mm0";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name) {
    for (Algorithm a : algorithm_list)
        if (name == to_string(a)) return a;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::vector<Algorithm> parse_algorithms(const std::string& comma_list) {
    std::vector<Algorithm> out;
    std::istringstream in(comma_list);
    for (std::string name; std::getline(in, name, ',');)
        if (!name.empty()) out.push_back(parse_algorithm(name));
    if (out.empty()) throw std::invalid_argument("empty algorithm list");
    return out;
}

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> all(std::begin(algorithm_list), std::end(algorithm_list));
    return all;
}

SearchResult run_algorithm(Algorithm a, const StateSpace& space, const SearchLimits& limits, Cost mme_epsilon) {
    switch (a) {
        case Algorithm::nbs: return nbs_search(space, {.limits = limits, .record_lower_bounds = false});
        case Algorithm::astar_f: return astar_search(space, Direction::forward, limits);
        case Algorithm::astar_b: return astar_search(space, Direction::backward, limits);
        case Algorithm::bs_star: return bs_star_search(space, limits);
        case Algorithm::mm: return mm_search(space, {.epsilon = Cost::zero(), .use_heuristic = true}, limits);
        case Algorithm::mme: return mm_search(space, {.epsilon = mme_epsilon, .use_heuristic = true}, limits);
        case Algorithm::mm0: return mm_search(space, {.epsilon = Cost::zero(), .use_heuristic = false}, limits);
    }
    throw std::invalid_argument("run_algorithm: unknown algorithm");
}

void ExperimentConfig::validate() const {
    if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
    if (limits.max_expansions == 0 || !(limits.max_seconds > 0.0)) throw std::invalid_argument("caps must be positive");
    if (map_file.has_value() != scen_file.has_value()) throw std::invalid_argument("--map and --scen go together");
    const int sources = int(fixtures) + int(map_file.has_value()) + int(instance_file.has_value());
    if (sources > 1) throw std::invalid_argument("choose one instance source");
    if (sources == 0 && count == 0) throw std::invalid_argument("count must be positive");
    if (domain.gap_k < 0) throw std::invalid_argument("k must be non-negative");
    if (domain.domain == Domain::graph && !fixtures && domain.graph.alpha > 1.0)
        throw std::invalid_argument("alpha must be at most 1");
}

std::vector<AggregateRow> aggregate(const std::vector<ResultRow>& rows, const std::vector<Algorithm>& order) {
    std::vector<AggregateRow> out;
    for (Algorithm a : order) {
        AggregateRow agg;
        agg.algorithm = a;
        double expanded = 0, necessary = 0, pct = 0, wall = 0;
        for (const ResultRow& r : rows) {
            if (r.algorithm != a) continue;
            if (!r.solved()) {
                ++agg.unsolved;
                continue;
            }
            ++agg.solved;
            expanded += static_cast<double>(r.expanded);
            necessary += static_cast<double>(r.necessary);
            pct += r.f_equal_cstar_pct;
            wall += r.wall_seconds;
        }
        if (agg.solved > 0) {
            const auto n = static_cast<double>(agg.solved);
            agg.mean_expanded = expanded / n;
            agg.mean_necessary = necessary / n;
            agg.mean_f_equal_cstar_pct = pct / n;
            agg.mean_wall_seconds = wall / n;
            agg.expansion_rate = wall > 0 ? expanded / wall : 0.0;
        }
        out.push_back(agg);
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentResult result;
    result.domain = config.fixtures ? "fixtures" : config.map_file ? "grid" : to_string(config.domain.domain);
    const Cost epsilon = mme_epsilon(config);

    for (Instance& inst : load_instances(config)) {
        std::vector<ResultRow> rows;
        std::vector<SearchTrace> traces;
        for (Algorithm a : config.algorithms) {
            ResultRow row;
            row.instance = inst.id;
            row.algorithm = a;
            row.setup_seconds = inst.setup_seconds;
            const auto t = Clock::now();
            SearchResult r;
            try {
                r = run_algorithm(a, *inst.space, config.limits, epsilon);
                row.status = to_string(r.status);
            } catch (const PreconditionError& e) {
                row.status = "precondition_failed";
                result.notes.push_back(inst.id + " " + to_string(a) + ": " + e.what());
            }
            row.wall_seconds = seconds_since(t);
            row.cost = r.cost;
            row.expanded = r.trace.expanded;
            row.generated = r.trace.generated;
            row.reopened = r.trace.reopened;
            row.closed_unexpanded = r.trace.closed_unexpanded;
            row.expansion_rate = row.wall_seconds > 0 ? static_cast<double>(row.expanded) / row.wall_seconds : 0.0;
            rows.push_back(row);
            traces.push_back(std::move(r.trace));
        }

        // Cross-algorithm agreement on the optimal cost.
        std::optional<Cost> c_star;
        for (const ResultRow& row : rows) {
            if (row.status != "solved" && row.status != "no_solution") continue;
            if (!c_star) {
                c_star = row.cost;
            } else if (*c_star != row.cost) {
                result.mismatches.push_back(inst.id + ": " + to_string(row.algorithm) + " returned " +
                                            to_string(row.cost) + ", expected " + to_string(*c_star));
            }
        }
        if (c_star && inst.reference_cost && c_star->is_finite() &&
            std::abs(c_star->to_double() - *inst.reference_cost) > 1e-3)
            result.notes.push_back(inst.id + ": cost " + to_string(*c_star) + " differs from scenario optimum " +
                                   format_double(*inst.reference_cost));

        if (c_star && c_star->is_finite()) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (const TraceEntry& e : traces[i].expansions) {
                    if (e.bound < *c_star) ++rows[i].necessary;
                    if (e.f == *c_star) ++rows[i].f_equal_cstar;
                }
                if (rows[i].expanded > 0)
                    rows[i].f_equal_cstar_pct =
                        100.0 * static_cast<double>(rows[i].f_equal_cstar) / static_cast<double>(rows[i].expanded);
            }
        }

        std::optional<std::size_t> vc;
        if (config.analyze && c_star && c_star->is_finite()) {
            try {
                const MustExpandGraph g = build_gmx(*inst.space, config.gmx);
                vc = minimum_vertex_cover(g.graph).size();
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (!rows[i].solved()) continue;
                    const CoverReport report = grade_trace(traces[i], g, *vc);
                    rows[i].vc_size = vc;
                    rows[i].ratio = report.ratio;
                    if (rows[i].algorithm == Algorithm::nbs) {
                        if (report.algorithm_cover_size > 2 * *vc)
                            result.violations.push_back(inst.id + ": nbs necessary " +
                                                        std::to_string(report.algorithm_cover_size) + " > 2 * VC " +
                                                        std::to_string(*vc));
                        if (!report.is_cover)
                            result.violations.push_back(inst.id + ": nbs expansions do not cover the must-expand graph");
                    }
                }
            } catch (const CapExceeded& e) {
                result.notes.push_back(inst.id + ": analysis skipped (" + e.what() + ")");
            } catch (const PreconditionError& e) {
                result.notes.push_back(inst.id + ": analysis skipped (" + e.what() + ")");
            }
        }

        const auto nbs_row = std::find_if(rows.begin(), rows.end(),
                                          [](const ResultRow& r) { return r.algorithm == Algorithm::nbs && r.solved(); });
        if (nbs_row != rows.end()) {
            std::optional<std::size_t> best;
            for (const ResultRow& r : rows)
                if (r.algorithm != Algorithm::nbs && r.solved()) best = std::min(best.value_or(r.necessary), r.necessary);
            if (best) result.scatter.push_back({inst.id, *best, nbs_row->necessary, vc});
        }
        for (ResultRow& r : rows) result.rows.push_back(std::move(r));
    }
    result.aggregates = aggregate(result.rows, config.algorithms);
    return result;
}

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "markdown" || name == "md") return Format::markdown;
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::string csv_header() {
    return "instance,algorithm,status,cost,cost_value,expanded,necessary,generated,reopened,closed_unexpanded,"
           "f_equal_cstar,f_equal_cstar_pct,wall_seconds,expansion_rate,setup_seconds,vc_size,ratio";
}

namespace {

nlohmann::json row_to_json(const ResultRow& r) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["algorithm"] = to_string(r.algorithm);
    j["status"] = r.status;
    j["cost"] = to_string(r.cost);
    j["cost_value"] = r.cost.is_finite() ? nlohmann::json(r.cost.to_double()) : nlohmann::json(nullptr);
    j["expanded"] = r.expanded;
    j["necessary"] = r.necessary;
    j["generated"] = r.generated;
    j["reopened"] = r.reopened;
    j["closed_unexpanded"] = r.closed_unexpanded;
    j["f_equal_cstar"] = r.f_equal_cstar;
    j["f_equal_cstar_pct"] = r.f_equal_cstar_pct;
    j["wall_seconds"] = r.wall_seconds;
    j["expansion_rate"] = r.expansion_rate;
    j["setup_seconds"] = r.setup_seconds;
    j["vc_size"] = r.vc_size ? nlohmann::json(*r.vc_size) : nlohmann::json(nullptr);
    j["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr);
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string emit(const ExperimentResult& result, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::csv:
            out << csv_header() << '\n';
            for (const ResultRow& r : result.rows) {
                out << csv_field(r.instance) << ',' << to_string(r.algorithm) << ',' << r.status << ','
                    << to_string(r.cost) << ',' << (r.cost.is_finite() ? format_double(r.cost.to_double()) : "") << ','
                    << r.expanded << ',' << r.necessary << ',' << r.generated << ',' << r.reopened << ','
                    << r.closed_unexpanded << ',' << r.f_equal_cstar << ',' << format_double(r.f_equal_cstar_pct)
                    << ',' << format_double(r.wall_seconds) << ',' << format_double(r.expansion_rate) << ','
                    << format_double(r.setup_seconds) << ',' << (r.vc_size ? std::to_string(*r.vc_size) : "") << ','
                    << (r.ratio ? format_double(*r.ratio) : "") << '\n';
            }
            break;
        case Format::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const ResultRow& r : result.rows) rows.push_back(row_to_json(r));
            out << rows.dump(2) << '\n';
            break;
        }
        case Format::markdown:
            out << "| algorithm | solved | unsolved | mean expanded | mean necessary | f = C* (%) | mean time (s) "
                   "| expansions/s |\n";
            out << "|---|---:|---:|---:|---:|---:|---:|---:|\n";
            for (const AggregateRow& a : result.aggregates) {
                out << std::fixed;
                out << "| " << to_string(a.algorithm) << " | " << a.solved << " | " << a.unsolved << " | "
                    << std::setprecision(1) << a.mean_expanded << " | " << a.mean_necessary << " | "
                    << a.mean_f_equal_cstar_pct << " | " << std::setprecision(6) << a.mean_wall_seconds << " | "
                    << std::setprecision(0) << a.expansion_rate << " |\n";
                out << std::defaultfloat;
            }
            break;
    }
    return out.str();
}

std::vector<ResultRow> rows_from_json(std::string_view text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("rows_from_json: expected an array");
    std::vector<ResultRow> rows;
    for (const auto& j : doc) {
        ResultRow r;
        r.instance = j.at("instance").get<std::string>();
        r.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
        r.status = j.at("status").get<std::string>();
        r.cost = parse_cost(j.at("cost").get<std::string>());
        r.expanded = j.at("expanded").get<std::size_t>();
        r.necessary = j.at("necessary").get<std::size_t>();
        r.generated = j.at("generated").get<std::size_t>();
        r.reopened = j.at("reopened").get<std::size_t>();
        r.closed_unexpanded = j.at("closed_unexpanded").get<std::size_t>();
        r.f_equal_cstar = j.at("f_equal_cstar").get<std::size_t>();
        r.f_equal_cstar_pct = j.at("f_equal_cstar_pct").get<double>();
        r.wall_seconds = j.at("wall_seconds").get<double>();
        r.expansion_rate = j.at("expansion_rate").get<double>();
        r.setup_seconds = j.at("setup_seconds").get<double>();
        if (!j.at("vc_size").is_null()) r.vc_size = j.at("vc_size").get<std::size_t>();
        if (!j.at("ratio").is_null()) r.ratio = j.at("ratio").get<double>();
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace nbs::bench

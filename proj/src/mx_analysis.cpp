#include "nbs/mx_analysis.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

namespace nbs {

std::size_t BipartiteGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& adj : adjacency) n += adj.size();
    return n;
}

Matching maximum_matching(const BipartiteGraph& g) {
    constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
    Matching m;
    m.left_mate.assign(g.left_size, unmatched);
    m.right_mate.assign(g.right_size, unmatched);

    std::vector<std::uint32_t> dist(g.left_size);
    std::vector<std::uint32_t> queue;
    std::vector<std::size_t> next_edge(g.left_size);
    std::vector<std::uint32_t> stack;

    for (;;) {
        // Layer the graph from all free left vertices.
        queue.clear();
        for (std::uint32_t u = 0; u < g.left_size; ++u) {
            if (m.left_mate[u] == unmatched) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = inf;
            }
        }
        bool found = false;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t u = queue[head];
            for (std::uint32_t v : g.adjacency[u]) {
                const std::uint32_t w = m.right_mate[v];
                if (w == unmatched) {
                    found = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (!found) break;

        // Vertex-disjoint shortest augmenting paths, found by iterative DFS.
        std::fill(next_edge.begin(), next_edge.end(), 0);
        for (std::uint32_t root = 0; root < g.left_size; ++root) {
            if (m.left_mate[root] != unmatched) continue;
            stack.assign(1, root);
            while (!stack.empty()) {
                const std::uint32_t u = stack.back();
                if (next_edge[u] == g.adjacency[u].size()) {
                    dist[u] = inf;  // dead end for this phase
                    stack.pop_back();
                    continue;
                }
                const std::uint32_t v = g.adjacency[u][next_edge[u]++];
                const std::uint32_t w = m.right_mate[v];
                if (w == unmatched) {
                    // Augment along the stack: each stacked left vertex takes the
                    // right vertex its last-tried edge points at.
                    for (std::size_t i = stack.size(); i-- > 0;) {
                        const std::uint32_t x = stack[i];
                        const std::uint32_t y = g.adjacency[x][next_edge[x] - 1];
                        m.left_mate[x] = y;
                        m.right_mate[y] = x;
                    }
                    ++m.size;
                    break;
                }
                if (dist[w] == dist[u] + 1) stack.push_back(w);
            }
        }
    }
    return m;
}

VertexCover minimum_vertex_cover(const BipartiteGraph& g, const Matching& m) {
    std::vector<char> left_seen(g.left_size, 0);
    std::vector<char> right_seen(g.right_size, 0);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < g.left_size; ++u) {
        if (m.left_mate[u] == unmatched) {
            left_seen[u] = 1;
            queue.push_back(u);
        }
    }
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t v : g.adjacency[u]) {
            if (right_seen[v]) continue;
            right_seen[v] = 1;
            const std::uint32_t w = m.right_mate[v];
            if (w != unmatched && !left_seen[w]) {
                left_seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    VertexCover cover;
    for (std::uint32_t u = 0; u < g.left_size; ++u)
        if (!left_seen[u] && !g.adjacency[u].empty()) cover.left.push_back(u);
    for (std::uint32_t v = 0; v < g.right_size; ++v)
        if (right_seen[v]) cover.right.push_back(v);
    return cover;
}

VertexCover minimum_vertex_cover(const BipartiteGraph& g) { return minimum_vertex_cover(g, maximum_matching(g)); }

MustExpandGraph build_gmx(const StateSpace& space, const GmxOptions& options) {
    MustExpandGraph gmx;
    if (space.start() == space.goal()) {
        gmx.c_star = Cost::zero();
        gmx.d_forward[space.start()] = Cost::zero();
        gmx.d_backward[space.goal()] = Cost::zero();
        return gmx;
    }

    try {
        gmx.d_forward = dijkstra(space, space.start(), Direction::forward,
                                 {.stop_at = space.goal(), .max_states = options.max_states});
        auto goal = gmx.d_forward.find(space.goal());
        if (goal == gmx.d_forward.end()) throw std::invalid_argument("build_gmx: goal unreachable");
        gmx.c_star = goal->second;
        gmx.d_backward = dijkstra(space, space.goal(), Direction::backward,
                                  {.bound = gmx.c_star, .stop_at = std::nullopt, .max_states = options.max_states});
    } catch (const std::length_error& e) {
        throw CapExceeded(std::string("build_gmx: ") + e.what());
    }

    if (options.verify_consistency) {
        std::vector<StateId> states;
        states.reserve(gmx.d_forward.size() + gmx.d_backward.size());
        for (const auto& [s, d] : gmx.d_forward) states.push_back(s);
        for (const auto& [s, d] : gmx.d_backward) states.push_back(s);
        std::sort(states.begin(), states.end());
        states.erase(std::unique(states.begin(), states.end()), states.end());
        const ConsistencyReport report = check_consistency(space, states);
        if (!report.ok()) throw PreconditionError("build_gmx: heuristic not consistent: " + report.summary());
    }

    const Cost c_star = gmx.c_star;
    struct Candidate {
        StateId state;
        Cost d;
    };
    std::vector<Candidate> lefts;
    std::vector<Candidate> rights;
    for (const auto& [s, d] : gmx.d_forward)
        if (d < c_star && d + space.h_forward(s) < c_star) lefts.push_back({s, d});
    for (const auto& [s, d] : gmx.d_backward)
        if (d < c_star && d + space.h_backward(s) < c_star) rights.push_back({s, d});
    auto by_distance = [](const Candidate& x, const Candidate& y) {
        if (x.d != y.d) return x.d < y.d;
        return x.state < y.state;
    };
    std::sort(lefts.begin(), lefts.end(), by_distance);
    std::sort(rights.begin(), rights.end(), by_distance);

    // Right candidates are sorted by d_B, so u's neighbours form a prefix.
    std::vector<std::uint32_t> right_index(rights.size(), unmatched);
    std::size_t edges = 0;
    for (const Candidate& u : lefts) {
        std::size_t k = 0;
        while (k < rights.size() && u.d + rights[k].d < c_star) ++k;
        if (k == 0) continue;
        edges += k;
        if (edges > options.max_edges) throw CapExceeded("build_gmx: edge cap exceeded");
        std::vector<std::uint32_t> adj;
        adj.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (right_index[j] == unmatched) {
                right_index[j] = static_cast<std::uint32_t>(gmx.right.size());
                gmx.right.push_back(rights[j].state);
            }
            adj.push_back(right_index[j]);
        }
        gmx.left.push_back(u.state);
        gmx.graph.adjacency.push_back(std::move(adj));
    }
    gmx.graph.left_size = gmx.left.size();
    gmx.graph.right_size = gmx.right.size();
    return gmx;
}

CoverReport grade_trace(const SearchTrace& trace, const MustExpandGraph& g) {
    return grade_trace(trace, g, minimum_vertex_cover(g.graph).size());
}

CoverReport grade_trace(const SearchTrace& trace, const MustExpandGraph& g, std::size_t vc_size) {
    CoverReport report;
    report.vc_size = vc_size;
    std::unordered_set<StateId> forward;
    std::unordered_set<StateId> backward;
    for (const TraceEntry& e : trace.expansions) {
        (e.direction == Direction::forward ? forward : backward).insert(e.state);
        if (!(e.bound < g.c_star)) continue;
        ++report.algorithm_cover_size;
        const DistanceMap& known = e.direction == Direction::forward ? g.d_forward : g.d_backward;
        if (!known.contains(e.state))
            throw TraceMismatch("grade_trace: state " + std::to_string(e.state) + " is not part of this instance");
    }
    report.is_cover = true;
    for (std::size_t i = 0; i < g.left.size() && report.is_cover; ++i) {
        if (forward.contains(g.left[i])) continue;
        for (std::uint32_t j : g.graph.adjacency[i]) {
            if (!backward.contains(g.right[j])) {
                report.is_cover = false;
                break;
            }
        }
    }
    if (report.vc_size > 0)
        report.ratio = static_cast<double>(report.algorithm_cover_size) / static_cast<double>(report.vc_size);
    return report;
}

GmxDocument to_document(const StateSpace& space, const MustExpandGraph& g, const std::optional<VertexCover>& cover) {
    GmxDocument doc;
    doc.c_star = g.c_star;
    doc.left = g.left;
    doc.right = g.right;
    doc.graph = g.graph;
    for (StateId s : g.left) {
        const Cost d = g.d_forward.at(s);
        doc.left_d.push_back(d);
        doc.left_f.push_back(d + space.h_forward(s));
    }
    for (StateId s : g.right) {
        const Cost d = g.d_backward.at(s);
        doc.right_d.push_back(d);
        doc.right_f.push_back(d + space.h_backward(s));
    }
    doc.cover = cover;
    return doc;
}

void write_gmx(std::ostream& out, const GmxDocument& doc) {
    out << "gmx 1\n";
    out << "c_star " << to_string(doc.c_star) << '\n';
    out << "left " << doc.left.size() << '\n';
    for (std::size_t i = 0; i < doc.left.size(); ++i)
        out << doc.left[i] << ' ' << to_string(doc.left_d[i]) << ' ' << to_string(doc.left_f[i]) << '\n';
    out << "right " << doc.right.size() << '\n';
    for (std::size_t i = 0; i < doc.right.size(); ++i)
        out << doc.right[i] << ' ' << to_string(doc.right_d[i]) << ' ' << to_string(doc.right_f[i]) << '\n';
    out << "edges " << doc.graph.edge_count() << '\n';
    for (std::size_t i = 0; i < doc.graph.adjacency.size(); ++i)
        for (std::uint32_t j : doc.graph.adjacency[i]) out << i << ' ' << j << '\n';
    if (doc.cover) {
        out << "cover " << doc.cover->size() << '\n';
        for (std::uint32_t i : doc.cover->left) out << "F " << doc.left[i] << '\n';
        for (std::uint32_t j : doc.cover->right) out << "B " << doc.right[j] << '\n';
    }
}

namespace {

class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::istringstream next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
                return std::istringstream(line);
        }
        fail("unexpected end of input");
    }
    bool at_end() {
        in_ >> std::ws;
        return in_.peek() == std::char_traits<char>::eof();
    }
    std::size_t header(const std::string& keyword) {
        auto line = next();
        std::string word;
        std::size_t n = 0;
        if (!(line >> word >> n) || word != keyword) fail("expected '" + keyword + " <count>'");
        return n;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("gmx line " + std::to_string(line_no_) + ": " + what);
    }

  private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

}  // namespace

GmxDocument read_gmx(std::istream& in) {
    LineReader reader(in);
    GmxDocument doc;
    {
        auto line = reader.next();
        std::string magic;
        int version = 0;
        if (!(line >> magic >> version) || magic != "gmx" || version != 1) reader.fail("expected 'gmx 1'");
    }
    {
        auto line = reader.next();
        std::string word;
        std::string cost;
        if (!(line >> word >> cost) || word != "c_star") reader.fail("expected 'c_star <cost>'");
        doc.c_star = parse_cost(cost);
    }
    auto read_side = [&](const std::string& keyword, std::vector<StateId>& states, std::vector<Cost>& ds,
                         std::vector<Cost>& fs) {
        const std::size_t n = reader.header(keyword);
        for (std::size_t i = 0; i < n; ++i) {
            auto line = reader.next();
            StateId s = 0;
            std::string d;
            std::string f;
            if (!(line >> s >> d >> f)) reader.fail("expected '<state> <d> <f>'");
            states.push_back(s);
            ds.push_back(parse_cost(d));
            fs.push_back(parse_cost(f));
        }
    };
    read_side("left", doc.left, doc.left_d, doc.left_f);
    read_side("right", doc.right, doc.right_d, doc.right_f);
    doc.graph.left_size = doc.left.size();
    doc.graph.right_size = doc.right.size();
    doc.graph.adjacency.assign(doc.left.size(), {});
    const std::size_t edges = reader.header("edges");
    for (std::size_t k = 0; k < edges; ++k) {
        auto line = reader.next();
        std::size_t i = 0;
        std::uint32_t j = 0;
        if (!(line >> i >> j) || i >= doc.left.size() || j >= doc.right.size()) reader.fail("bad edge");
        doc.graph.adjacency[i].push_back(j);
    }
    if (!reader.at_end()) {
        const std::size_t n = reader.header("cover");
        std::unordered_map<StateId, std::uint32_t> left_at;
        std::unordered_map<StateId, std::uint32_t> right_at;
        for (std::uint32_t i = 0; i < doc.left.size(); ++i) left_at.emplace(doc.left[i], i);
        for (std::uint32_t j = 0; j < doc.right.size(); ++j) right_at.emplace(doc.right[j], j);
        VertexCover cover;
        for (std::size_t k = 0; k < n; ++k) {
            auto line = reader.next();
            std::string side;
            StateId s = 0;
            if (!(line >> side >> s)) reader.fail("expected 'F|B <state>'");
            const auto& lookup = side == "F" ? left_at : right_at;
            auto it = lookup.find(s);
            if ((side != "F" && side != "B") || it == lookup.end()) reader.fail("unknown cover vertex");
            (side == "F" ? cover.left : cover.right).push_back(it->second);
        }
        doc.cover = std::move(cover);
    }
    return doc;
}

}  // namespace nbs

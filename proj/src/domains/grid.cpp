#include "nbs/domains/grid.hpp"

#include <algorithm>
#include <sstream>

namespace nbs {
namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        lines.push_back(std::move(line));
        pos = end + 1;
    }
    return lines;
}

std::size_t header_value(const std::string& line, std::string_view key) {
    std::istringstream in(line);
    std::string word;
    long long value = -1;
    if (!(in >> word >> value) || word != key || value <= 0 || !(in >> std::ws).eof())
        throw MapParseError("map header: expected '" + std::string(key) + " <positive int>', got '" + line + "'");
    return static_cast<std::size_t>(value);
}

}  // namespace

bool is_passable_glyph(char c) { return c == '.' || c == 'G'; }

bool GridMap::passable(std::size_t x, std::size_t y) const { return is_passable_glyph(rows[y][x]); }

std::size_t GridMap::passable_count() const {
    std::size_t n = 0;
    for (const std::string& row : rows) n += static_cast<std::size_t>(std::count_if(row.begin(), row.end(), is_passable_glyph));
    return n;
}

GridMap parse_map(std::string_view text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.size() < 4) throw MapParseError("map header truncated");
    if (lines[0] != "type octile") throw MapParseError("map header: expected 'type octile'");
    GridMap map;
    map.height = header_value(lines[1], "height");
    map.width = header_value(lines[2], "width");
    if (lines[3] != "map") throw MapParseError("map header: expected 'map'");
    std::size_t last = lines.size();
    while (last > 4 && lines[last - 1].empty()) --last;
    if (last - 4 != map.height)
        throw MapParseError("map has " + std::to_string(last - 4) + " rows, header says " + std::to_string(map.height));
    for (std::size_t y = 0; y < map.height; ++y) {
        const std::string& row = lines[4 + y];
        if (row.size() != map.width)
            throw MapParseError("map row " + std::to_string(y) + " has length " + std::to_string(row.size()));
        for (char c : row)
            if (!is_passable_glyph(c) && c != '@' && c != 'O' && c != 'T' && c != 'W')
                throw MapParseError(std::string("unknown map glyph '") + c + "'");
        map.rows.push_back(row);
    }
    return map;
}

std::string emit_map(const GridMap& map) {
    std::string out = "type octile\nheight " + std::to_string(map.height) + "\nwidth " + std::to_string(map.width) + "\nmap\n";
    for (const std::string& row : map.rows) out += row + '\n';
    return out;
}

std::vector<ScenarioEntry> parse_scen(std::string_view text) {
    std::vector<ScenarioEntry> entries;
    std::size_t line_no = 0;
    for (const std::string& line : split_lines(text)) {
        ++line_no;
        if (line.empty() || line.rfind("version", 0) == 0) continue;
        std::istringstream in(line);
        ScenarioEntry e;
        if (!(in >> e.bucket >> e.map >> e.map_width >> e.map_height >> e.start_x >> e.start_y >> e.goal_x >>
              e.goal_y >> e.optimal))
            throw MapParseError("scenario line " + std::to_string(line_no) + " malformed");
        entries.push_back(std::move(e));
    }
    return entries;
}

Cost octile_h(std::size_t ax, std::size_t ay, std::size_t bx, std::size_t by) {
    const auto dx = static_cast<std::int64_t>(ax > bx ? ax - bx : bx - ax);
    const auto dy = static_cast<std::int64_t>(ay > by ? ay - by : by - ay);
    const std::int64_t lo = std::min(dx, dy);
    const std::int64_t hi = std::max(dx, dy);
    return Cost{hi - lo, lo};
}

GridSpace::GridSpace(GridMap map, StateId start, StateId goal, GridHeuristic heuristic)
    : map_(std::move(map)), start_(start), goal_(goal), heuristic_(heuristic) {
    const std::size_t cells = map_.width * map_.height;
    if (start_ >= cells || goal_ >= cells) throw std::out_of_range("GridSpace: endpoint outside map");
    if (!map_.passable(start_) || !map_.passable(goal_)) throw std::invalid_argument("GridSpace: endpoint blocked");
}

void GridSpace::successors(StateId s, std::vector<Edge>& out) const {
    out.clear();
    const auto x = static_cast<std::int64_t>(s % map_.width);
    const auto y = static_cast<std::int64_t>(s / map_.width);
    const auto w = static_cast<std::int64_t>(map_.width);
    const auto h = static_cast<std::int64_t>(map_.height);
    auto open = [&](std::int64_t cx, std::int64_t cy) {
        return cx >= 0 && cy >= 0 && cx < w && cy < h && map_.passable(static_cast<std::size_t>(cx), static_cast<std::size_t>(cy));
    };
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            if ((dx == 0 && dy == 0) || !open(x + dx, y + dy)) continue;
            if (dx != 0 && dy != 0) {
                if (!open(x + dx, y) || !open(x, y + dy)) continue;
                out.push_back({static_cast<StateId>((y + dy) * w + x + dx), Cost::sqrt2()});
            } else {
                out.push_back({static_cast<StateId>((y + dy) * w + x + dx), Cost{1}});
            }
        }
    }
}

Cost GridSpace::estimate(StateId from, StateId to) const {
    if (heuristic_ == GridHeuristic::zero) return Cost::zero();
    return octile_h(from % map_.width, from / map_.width, to % map_.width, to / map_.width);
}

std::string GridSpace::describe(StateId s) const {
    return "(" + std::to_string(s % map_.width) + "," + std::to_string(s / map_.width) + ")";
}

GridMap random_grid_map(std::mt19937_64& rng, std::size_t width, std::size_t height, double density) {
    GridMap map;
    map.width = width;
    map.height = height;
    std::bernoulli_distribution blocked(density);
    for (std::size_t y = 0; y < height; ++y) {
        std::string row(width, '.');
        for (char& c : row)
            if (blocked(rng)) c = '@';
        map.rows.push_back(std::move(row));
    }
    return map;
}

GridMap maze_map(std::mt19937_64& rng, std::size_t width, std::size_t height) {
    if (width < 3 || height < 3) throw std::invalid_argument("maze_map: too small");
    GridMap map;
    map.width = width;
    map.height = height;
    map.rows.assign(height, std::string(width, '@'));
    const std::size_t cw = (width - 1) / 2;
    const std::size_t ch = (height - 1) / 2;
    std::vector<char> visited(cw * ch, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    visited[0] = 1;
    map.rows[1][1] = '.';
    while (!stack.empty()) {
        const auto [cx, cy] = stack.back();
        std::vector<std::pair<std::size_t, std::size_t>> options;
        if (cx > 0 && !visited[cy * cw + cx - 1]) options.emplace_back(cx - 1, cy);
        if (cx + 1 < cw && !visited[cy * cw + cx + 1]) options.emplace_back(cx + 1, cy);
        if (cy > 0 && !visited[(cy - 1) * cw + cx]) options.emplace_back(cx, cy - 1);
        if (cy + 1 < ch && !visited[(cy + 1) * cw + cx]) options.emplace_back(cx, cy + 1);
        if (options.empty()) {
            stack.pop_back();
            continue;
        }
        const auto [nx, ny] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        visited[ny * cw + nx] = 1;
        map.rows[2 * ny + 1][2 * nx + 1] = '.';
        map.rows[cy + ny + 1][cx + nx + 1] = '.';  // wall between the two cells
        stack.emplace_back(nx, ny);
    }
    return map;
}

}  // namespace nbs

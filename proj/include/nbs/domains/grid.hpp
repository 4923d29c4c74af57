#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

class MapParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Octile benchmark map. Cells are addressed by y * width + x.
struct GridMap {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::string> rows;  // original glyphs, one string per row

    [[nodiscard]] bool passable(std::size_t x, std::size_t y) const;
    [[nodiscard]] bool passable(StateId cell) const { return passable(cell % width, cell / width); }
    [[nodiscard]] StateId cell(std::size_t x, std::size_t y) const { return y * width + x; }
    [[nodiscard]] std::size_t passable_count() const;
};

// `.` and `G` are passable; `@`, `O`, `T`, `W` are blocked.
[[nodiscard]] bool is_passable_glyph(char c);

// Header `type octile`, `height H`, `width W`, `map`, then H rows of W glyphs.
[[nodiscard]] GridMap parse_map(std::string_view text);
[[nodiscard]] std::string emit_map(const GridMap& map);

struct ScenarioEntry {
    int bucket = 0;
    std::string map;
    std::size_t map_width = 0;
    std::size_t map_height = 0;
    std::size_t start_x = 0;
    std::size_t start_y = 0;
    std::size_t goal_x = 0;
    std::size_t goal_y = 0;
    double optimal = 0.0;
};

// Scenario file: optional `version` line, then whitespace-separated
// `bucket map width height sx sy gx gy optimal` records.
[[nodiscard]] std::vector<ScenarioEntry> parse_scen(std::string_view text);

// Octile distance max(dx, dy) + (sqrt2 - 1) * min(dx, dy) as the exact
// pair (max - min) + min * sqrt2.
[[nodiscard]] Cost octile_h(std::size_t ax, std::size_t ay, std::size_t bx, std::size_t by);

enum class GridHeuristic { octile, zero };

// 8-connected movement, cardinal cost 1, diagonal cost sqrt2. A diagonal move
// needs both adjacent cardinal cells passable.
class GridSpace final : public StateSpace {
  public:
    GridSpace(GridMap map, StateId start, StateId goal, GridHeuristic heuristic = GridHeuristic::octile);

    [[nodiscard]] const GridMap& map() const { return map_; }

    [[nodiscard]] StateId start() const override { return start_; }
    [[nodiscard]] StateId goal() const override { return goal_; }
    void successors(StateId s, std::vector<Edge>& out) const override;
    void predecessors(StateId s, std::vector<Edge>& out) const override { successors(s, out); }
    [[nodiscard]] Cost h_forward(StateId s) const override { return estimate(s, goal_); }
    [[nodiscard]] Cost h_backward(StateId s) const override { return estimate(s, start_); }
    [[nodiscard]] std::string describe(StateId s) const override;

  private:
    [[nodiscard]] Cost estimate(StateId from, StateId to) const;

    GridMap map_;
    StateId start_;
    StateId goal_;
    GridHeuristic heuristic_;
};

// Obstacle field: each cell blocked with probability `density`.
[[nodiscard]] GridMap random_grid_map(std::mt19937_64& rng, std::size_t width, std::size_t height, double density);

// Maze carved by randomized depth-first search on odd coordinates; every open
// cell is reachable from every other.
[[nodiscard]] GridMap maze_map(std::mt19937_64& rng, std::size_t width, std::size_t height);

}  // namespace nbs

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

// Board listed row by row; 0 is the blank. Packed 4 bits per cell with cell 0
// in the low nibble, so boards have at most 16 cells.
using TileBoard = std::vector<int>;

[[nodiscard]] StateId pack_tiles(std::span<const int> board);
[[nodiscard]] TileBoard unpack_tiles(StateId s, std::size_t cells);

// Canonical goal: blank in the first cell, then tiles 1..W*H-1.
[[nodiscard]] TileBoard canonical_tile_goal(std::size_t width, std::size_t height);

// True iff `board` can reach `goal` by sliding moves: permutation parity
// (blank included) equals the parity of the blank's taxicab displacement.
[[nodiscard]] bool tile_solvable(std::span<const int> board, std::span<const int> goal, std::size_t width);

// Sum over non-blank tiles of |drow| + |dcol| between their cells in `board`
// and in `goal`. Throws std::invalid_argument on shape mismatch.
[[nodiscard]] int manhattan_h(std::span<const int> board, std::span<const int> goal, std::size_t width);

enum class TileHeuristic { manhattan, zero };

class TileSpace final : public StateSpace {
  public:
    TileSpace(std::size_t width, std::size_t height, TileBoard start, TileHeuristic heuristic = TileHeuristic::manhattan);

    [[nodiscard]] std::size_t width() const { return width_; }
    [[nodiscard]] std::size_t height() const { return height_; }

    [[nodiscard]] StateId start() const override { return start_; }
    [[nodiscard]] StateId goal() const override { return goal_; }
    void successors(StateId s, std::vector<Edge>& out) const override;
    void predecessors(StateId s, std::vector<Edge>& out) const override { successors(s, out); }
    [[nodiscard]] Cost h_forward(StateId s) const override { return distance(s, goal_cell_); }
    [[nodiscard]] Cost h_backward(StateId s) const override { return distance(s, start_cell_); }
    [[nodiscard]] std::string describe(StateId s) const override;

  private:
    [[nodiscard]] Cost distance(StateId s, const std::vector<int>& anchor_cell) const;

    std::size_t width_;
    std::size_t height_;
    std::size_t cells_;
    TileHeuristic heuristic_;
    StateId start_;
    StateId goal_;
    std::vector<int> goal_cell_;   // tile -> cell in goal
    std::vector<int> start_cell_;  // tile -> cell in start
    std::vector<int> md_;          // cells x cells Manhattan table
};

}  // namespace nbs

#include "nbs/domains/tile.hpp"

#include <cstdlib>
#include <stdexcept>


namespace nbs {
namespace {

constexpr std::size_t max_cells = 16;

bool is_board(std::span<const int> board) {
    std::vector<char> seen(board.size(), 0);
    for (int v : board) {
        if (v < 0 || v >= static_cast<int>(board.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<int> cell_of(std::span<const int> board) {
    std::vector<int> where(board.size());
    for (std::size_t c = 0; c < board.size(); ++c) where[board[c]] = static_cast<int>(c);
    return where;
}

}  // namespace

StateId pack_tiles(std::span<const int> board) {
    StateId s = 0;
    for (std::size_t i = 0; i < board.size(); ++i) s |= static_cast<StateId>(board[i]) << (4 * i);
    return s;
}

TileBoard unpack_tiles(StateId s, std::size_t cells) {
    TileBoard b(cells);
    for (std::size_t i = 0; i < cells; ++i) b[i] = static_cast<int>((s >> (4 * i)) & 0xF);
    return b;
}

TileBoard canonical_tile_goal(std::size_t width, std::size_t height) {
    TileBoard b(width * height);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<int>(i);
    return b;
}

bool tile_solvable(std::span<const int> board, std::span<const int> goal, std::size_t width) {
    if (board.size() != goal.size() || !is_board(board) || !is_board(goal))
        throw std::invalid_argument("tile_solvable: boards differ in shape or are not permutations");
    // Parity of the permutation taking goal cells to board cells.
    const std::vector<int> goal_cell = cell_of(goal);
    std::vector<int> perm(board.size());
    for (std::size_t c = 0; c < board.size(); ++c) perm[c] = goal_cell[board[c]];
    int transpositions = 0;
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
        }
        transpositions += static_cast<int>(len) - 1;
    }
    const std::vector<int> board_cell = cell_of(board);
    const int bw = static_cast<int>(width);
    const int blank_distance = std::abs(board_cell[0] % bw - goal_cell[0] % bw) + std::abs(board_cell[0] / bw - goal_cell[0] / bw);
    return (transpositions % 2) == (blank_distance % 2);
}

int manhattan_h(std::span<const int> board, std::span<const int> goal, std::size_t width) {
    if (board.size() != goal.size() || width == 0 || board.size() % width != 0)
        throw std::invalid_argument("manhattan_h: shape mismatch");
    const std::vector<int> goal_cell = cell_of(goal);
    const int w = static_cast<int>(width);
    int sum = 0;
    for (std::size_t c = 0; c < board.size(); ++c) {
        if (board[c] == 0) continue;
        const int g = goal_cell[board[c]];
        const int here = static_cast<int>(c);
        sum += std::abs(here % w - g % w) + std::abs(here / w - g / w);
    }
    return sum;
}

TileSpace::TileSpace(std::size_t width, std::size_t height, TileBoard start, TileHeuristic heuristic)
    : width_(width), height_(height), cells_(width * height), heuristic_(heuristic) {
    if (width < 2 || height < 2 || cells_ > max_cells) throw std::invalid_argument("TileSpace: board must be 2x2 .. 16 cells");
    if (start.size() != cells_ || !is_board(start)) throw std::invalid_argument("TileSpace: start is not a board of this shape");
    const TileBoard goal = canonical_tile_goal(width, height);
    if (!tile_solvable(start, goal, width)) throw std::invalid_argument("TileSpace: start cannot reach the goal");
    start_ = pack_tiles(start);
    goal_ = pack_tiles(goal);
    goal_cell_ = cell_of(goal);
    start_cell_ = cell_of(start);
    md_.resize(cells_ * cells_);
    const int w = static_cast<int>(width);
    for (std::size_t a = 0; a < cells_; ++a)
        for (std::size_t b = 0; b < cells_; ++b)
            md_[a * cells_ + b] = std::abs(static_cast<int>(a) % w - static_cast<int>(b) % w) +
                                  std::abs(static_cast<int>(a) / w - static_cast<int>(b) / w);
}

void TileSpace::successors(StateId s, std::vector<Edge>& out) const {
    out.clear();
    std::size_t blank = 0;
    while (((s >> (4 * blank)) & 0xF) != 0) ++blank;
    const std::size_t x = blank % width_;
    const std::size_t y = blank / width_;
    auto slide = [&](std::size_t from) {
        const StateId tile = (s >> (4 * from)) & 0xF;
        const StateId t = (s & ~(StateId{0xF} << (4 * from))) | (tile << (4 * blank));
        out.push_back({t, Cost{1}});
    };
    if (y > 0) slide(blank - width_);
    if (y + 1 < height_) slide(blank + width_);
    if (x > 0) slide(blank - 1);
    if (x + 1 < width_) slide(blank + 1);
}

Cost TileSpace::distance(StateId s, const std::vector<int>& anchor_cell) const {
    if (heuristic_ == TileHeuristic::zero) return Cost::zero();
    int sum = 0;
    for (std::size_t c = 0; c < cells_; ++c) {
        const auto tile = static_cast<std::size_t>((s >> (4 * c)) & 0xF);
        if (tile != 0) sum += md_[c * cells_ + static_cast<std::size_t>(anchor_cell[tile])];
    }
    return Cost{sum};
}

std::string TileSpace::describe(StateId s) const {
    std::string out;
    for (int v : unpack_tiles(s, cells_)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace nbs

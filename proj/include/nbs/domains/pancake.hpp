#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

// Stack of pancakes 1..N, index 0 = top. Packed 4 bits per position (value - 1),
// position 0 in the low nibble, so N <= 16.
using Pancakes = std::vector<int>;

[[nodiscard]] StateId pack_pancakes(std::span<const int> stack);
[[nodiscard]] Pancakes unpack_pancakes(StateId s, int n);
[[nodiscard]] bool is_permutation_of_1_to_n(std::span<const int> stack);

// GAP-k: number of adjacent positions i (the plate N+1 sits below the last
// pancake) with |p_i - p_{i+1}| > 1, ignoring gaps where min(p_i, p_{i+1}) <= k.
// k = 0 is the plain GAP heuristic.
[[nodiscard]] int gap_h(std::span<const int> stack, int k);

// Prefix-reversal puzzle with unit costs and the sorted stack as goal.
// h_F is GAP-k against the goal; h_B is GAP-k after relabelling each pancake by
// its position in the start stack.
class PancakeSpace final : public StateSpace {
  public:
    PancakeSpace(Pancakes start, int k = 0);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] int k() const { return k_; }

    [[nodiscard]] StateId start() const override { return start_; }
    [[nodiscard]] StateId goal() const override { return goal_; }
    void successors(StateId s, std::vector<Edge>& out) const override;
    void predecessors(StateId s, std::vector<Edge>& out) const override { successors(s, out); }
    [[nodiscard]] Cost h_forward(StateId s) const override;
    [[nodiscard]] Cost h_backward(StateId s) const override;
    [[nodiscard]] std::string describe(StateId s) const override;

  private:
    int n_;
    int k_;
    StateId start_;
    StateId goal_;
    std::vector<int> start_position_;  // pancake value -> 1-based position in start
};

}  // namespace nbs

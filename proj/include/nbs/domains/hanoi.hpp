#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nbs/cost.hpp"
#include "nbs/state_space.hpp"

namespace nbs {

inline constexpr int hanoi_pegs = 4;

// Peg (0..3) of each disc; disc 0 is the smallest. Packed 2 bits per disc with
// disc 0 in the lowest bits, so at most 32 discs. Stack order on a peg is
// implied by disc size, so every assignment is a legal configuration.
using HanoiPegs = std::vector<int>;

[[nodiscard]] StateId pack_hanoi(std::span<const int> pegs);
[[nodiscard]] HanoiPegs unpack_hanoi(StateId s, int discs);
// All discs on the last peg.
[[nodiscard]] StateId canonical_hanoi_goal(int discs);

// Legal moves: the top (smallest) disc of a peg moves onto an empty peg or onto
// a peg whose top disc is larger. Unit cost; every move is reversible.
void hanoi_moves(StateId s, int discs, std::vector<Edge>& out);

// Additive pattern database. Discs are split into groups of consecutive sizes,
// the first group holding the largest discs. Each group's table stores exact
// move counts to the anchor's projection in the puzzle that contains only that
// group's discs; h is the sum of the group lookups. A move changes exactly one
// group's projection by one move, so the sum is admissible and consistent.
class AdditivePDB {
  public:
    struct Group {
        int first_disc;  // smallest disc of the group
        int size;
        std::vector<std::uint8_t> table;  // indexed by the packed projection
    };

    [[nodiscard]] Cost lookup(StateId s) const;
    [[nodiscard]] std::span<const Group> groups() const { return groups_; }
    [[nodiscard]] StateId anchor() const { return anchor_; }

    friend AdditivePDB build_hanoi_pdb(int discs, StateId anchor, std::span<const int> partition,
                                       std::size_t max_entries);

  private:
    StateId anchor_ = 0;
    std::vector<Group> groups_;
};

// Throws std::invalid_argument when the partition does not sum to `discs`,
// CapExceeded when a group's table would exceed max_entries.
[[nodiscard]] AdditivePDB build_hanoi_pdb(int discs, StateId anchor, std::span<const int> partition,
                                          std::size_t max_entries = std::size_t{1} << 26);

// 4-peg Tower of Hanoi with a goal-anchored PDB for h_F and a start-anchored
// PDB for h_B, both built from the same partition.
class HanoiSpace final : public StateSpace {
  public:
    HanoiSpace(int discs, StateId start, StateId goal, std::span<const int> partition,
               std::size_t max_entries = std::size_t{1} << 26);

    [[nodiscard]] int discs() const { return discs_; }
    [[nodiscard]] const AdditivePDB& forward_pdb() const { return forward_pdb_; }
    [[nodiscard]] const AdditivePDB& backward_pdb() const { return backward_pdb_; }

    [[nodiscard]] StateId start() const override { return start_; }
    [[nodiscard]] StateId goal() const override { return goal_; }
    void successors(StateId s, std::vector<Edge>& out) const override { hanoi_moves(s, discs_, out); }
    void predecessors(StateId s, std::vector<Edge>& out) const override { hanoi_moves(s, discs_, out); }
    [[nodiscard]] Cost h_forward(StateId s) const override { return forward_pdb_.lookup(s); }
    [[nodiscard]] Cost h_backward(StateId s) const override { return backward_pdb_.lookup(s); }
    [[nodiscard]] std::string describe(StateId s) const override;

  private:
    int discs_;
    StateId start_;
    StateId goal_;
    AdditivePDB forward_pdb_;
    AdditivePDB backward_pdb_;
};

// "6+2" -> {6, 2}. Throws std::invalid_argument on malformed text.
[[nodiscard]] std::vector<int> parse_partition(const std::string& text);

}  // namespace nbs

#include "nbs/domains/hanoi.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "nbs/core.hpp"

namespace nbs {

StateId pack_hanoi(std::span<const int> pegs) {
    if (pegs.size() > 32) throw std::invalid_argument("pack_hanoi: at most 32 discs");
    StateId s = 0;
    for (std::size_t d = 0; d < pegs.size(); ++d) {
        if (pegs[d] < 0 || pegs[d] >= hanoi_pegs) throw std::invalid_argument("pack_hanoi: peg out of range");
        s |= static_cast<StateId>(pegs[d]) << (2 * d);
    }
    return s;
}

HanoiPegs unpack_hanoi(StateId s, int discs) {
    HanoiPegs pegs(static_cast<std::size_t>(discs));
    for (int d = 0; d < discs; ++d) pegs[d] = static_cast<int>((s >> (2 * d)) & 3U);
    return pegs;
}

StateId canonical_hanoi_goal(int discs) {
    StateId s = 0;
    for (int d = 0; d < discs; ++d) s |= StateId{hanoi_pegs - 1} << (2 * d);
    return s;
}

void hanoi_moves(StateId s, int discs, std::vector<Edge>& out) {
    out.clear();
    int top[hanoi_pegs];
    for (int& t : top) t = std::numeric_limits<int>::max();
    // Scan from the largest disc down so the smallest disc on each peg wins.
    for (int d = discs - 1; d >= 0; --d) top[(s >> (2 * d)) & 3U] = d;
    for (int from = 0; from < hanoi_pegs; ++from) {
        const int disc = top[from];
        if (disc == std::numeric_limits<int>::max()) continue;
        for (int to = 0; to < hanoi_pegs; ++to) {
            if (to == from || top[to] < disc) continue;
            const int shift = 2 * disc;
            const StateId t = (s & ~(StateId{3} << shift)) | (static_cast<StateId>(to) << shift);
            out.push_back({t, Cost{1}});
        }
    }
}

Cost AdditivePDB::lookup(StateId s) const {
    std::int64_t sum = 0;
    for (const Group& g : groups_) {
        const StateId mask = g.size >= 32 ? ~StateId{0} : (StateId{1} << (2 * g.size)) - 1;
        sum += g.table[(s >> (2 * g.first_disc)) & mask];
    }
    return Cost{sum};
}

AdditivePDB build_hanoi_pdb(int discs, StateId anchor, std::span<const int> partition, std::size_t max_entries) {
    if (std::accumulate(partition.begin(), partition.end(), 0) != discs)
        throw std::invalid_argument("build_hanoi_pdb: partition does not sum to the disc count");
    AdditivePDB pdb;
    pdb.anchor_ = anchor;
    int next_largest = discs;  // groups are taken from the largest discs down
    std::vector<Edge> moves;
    for (int size : partition) {
        if (size <= 0) throw std::invalid_argument("build_hanoi_pdb: empty group");
        if (2 * size >= 64 || (std::size_t{1} << (2 * size)) > max_entries)
            throw CapExceeded("build_hanoi_pdb: group of " + std::to_string(size) + " discs exceeds the table cap");
        AdditivePDB::Group group;
        group.first_disc = next_largest - size;
        group.size = size;
        next_largest -= size;

        const std::size_t entries = std::size_t{1} << (2 * size);
        constexpr std::uint8_t unseen = std::numeric_limits<std::uint8_t>::max();
        group.table.assign(entries, unseen);
        const StateId root = (anchor >> (2 * group.first_disc)) & (entries - 1);
        // Breadth-first search in the abstract puzzle of this group's discs.
        std::vector<StateId> frontier{root};
        group.table[root] = 0;
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const StateId cur = frontier[head];
            hanoi_moves(cur, size, moves);
            for (const Edge& e : moves) {
                if (group.table[e.state] != unseen) continue;
                if (group.table[cur] + 1 >= unseen) throw CapExceeded("build_hanoi_pdb: distance overflow");
                group.table[e.state] = static_cast<std::uint8_t>(group.table[cur] + 1);
                frontier.push_back(e.state);
            }
        }
        pdb.groups_.push_back(std::move(group));
    }
    return pdb;
}

HanoiSpace::HanoiSpace(int discs, StateId start, StateId goal, std::span<const int> partition, std::size_t max_entries)
    : discs_(discs),
      start_(start),
      goal_(goal),
      forward_pdb_(build_hanoi_pdb(discs, goal, partition, max_entries)),
      backward_pdb_(build_hanoi_pdb(discs, start, partition, max_entries)) {
    if (discs < 1 || discs > 32) throw std::invalid_argument("HanoiSpace: 1..32 discs");
}

std::string HanoiSpace::describe(StateId s) const {
    std::string out;
    for (int p : unpack_hanoi(s, discs_)) out += static_cast<char>('0' + p);
    return out;
}

std::vector<int> parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('+', pos);
        if (end == std::string::npos) end = text.size();
        const std::string piece = text.substr(pos, end - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (piece.empty() || used != piece.size() || value <= 0)
            throw std::invalid_argument("malformed partition '" + text + "'");
        parts.push_back(value);
        pos = end + 1;
    }
    return parts;
}

}  // namespace nbs

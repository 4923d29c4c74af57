#include "nbs/domains/pancake.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace nbs {
namespace {

constexpr int max_pancakes = 16;

int gap_of(const int* p, int n, int k) {
    int gaps = 0;
    for (int i = 0; i < n; ++i) {
        const int a = p[i];
        const int b = i + 1 < n ? p[i + 1] : n + 1;
        if (std::abs(a - b) > 1 && std::min(a, b) > k) ++gaps;
    }
    return gaps;
}

}  // namespace

StateId pack_pancakes(std::span<const int> stack) {
    StateId s = 0;
    for (std::size_t i = 0; i < stack.size(); ++i) s |= static_cast<StateId>(stack[i] - 1) << (4 * i);
    return s;
}

Pancakes unpack_pancakes(StateId s, int n) {
    Pancakes p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = static_cast<int>((s >> (4 * i)) & 0xF) + 1;
    return p;
}

bool is_permutation_of_1_to_n(std::span<const int> stack) {
    std::vector<char> seen(stack.size() + 1, 0);
    for (int v : stack) {
        if (v < 1 || v > static_cast<int>(stack.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

int gap_h(std::span<const int> stack, int k) { return gap_of(stack.data(), static_cast<int>(stack.size()), k); }

PancakeSpace::PancakeSpace(Pancakes start, int k) : n_(static_cast<int>(start.size())), k_(k) {
    if (n_ < 2 || n_ > max_pancakes) throw std::invalid_argument("PancakeSpace: need 2..16 pancakes");
    if (!is_permutation_of_1_to_n(start)) throw std::invalid_argument("PancakeSpace: start is not a permutation");
    if (k < 0 || k >= n_) throw std::invalid_argument("PancakeSpace: GAP-k needs 0 <= k < N");
    Pancakes sorted(start.size());
    for (int i = 0; i < n_; ++i) sorted[i] = i + 1;
    start_ = pack_pancakes(start);
    goal_ = pack_pancakes(sorted);
    start_position_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int i = 0; i < n_; ++i) start_position_[start[i]] = i + 1;
}

void PancakeSpace::successors(StateId s, std::vector<Edge>& out) const {
    out.clear();
    std::array<int, max_pancakes> p{};
    for (int i = 0; i < n_; ++i) p[i] = static_cast<int>((s >> (4 * i)) & 0xF);
    for (int len = 2; len <= n_; ++len) {
        StateId t = s;
        for (int i = 0; i < len; ++i) {
            const int shift = 4 * i;
            t = (t & ~(StateId{0xF} << shift)) | (static_cast<StateId>(p[len - 1 - i]) << shift);
        }
        out.push_back({t, Cost{1}});
    }
}

Cost PancakeSpace::h_forward(StateId s) const {
    std::array<int, max_pancakes> p{};
    for (int i = 0; i < n_; ++i) p[i] = static_cast<int>((s >> (4 * i)) & 0xF) + 1;
    return Cost{gap_of(p.data(), n_, k_)};
}

Cost PancakeSpace::h_backward(StateId s) const {
    std::array<int, max_pancakes> p{};
    for (int i = 0; i < n_; ++i) p[i] = start_position_[((s >> (4 * i)) & 0xF) + 1];
    return Cost{gap_of(p.data(), n_, k_)};
}

std::string PancakeSpace::describe(StateId s) const {
    std::string out;
    for (int v : unpack_pancakes(s, n_)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace nbs

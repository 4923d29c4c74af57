#include "nbs/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace nbs {

double Cost::to_double() const {
    if (inf_) return std::numeric_limits<double>::infinity();
    return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(2.0);
}

std::string to_string(Cost c) {
    if (c.is_infinite()) return "inf";
    if (c.diagonals() == 0) return std::to_string(c.units());
    return std::to_string(c.units()) + "+" + std::to_string(c.diagonals()) + "*sqrt2";
}

Cost parse_cost(const std::string& text) {
    if (text == "inf") return Cost::infinity();
    try {
        std::size_t used = 0;
        const long long a = std::stoll(text, &used);
        if (used == text.size()) return Cost{a};
        static constexpr std::string_view suffix = "*sqrt2";
        if (text[used] != '+' || text.size() <= used + 1 + suffix.size() ||
            text.compare(text.size() - suffix.size(), suffix.size(), suffix) != 0)
            throw std::invalid_argument(text);
        const std::string middle = text.substr(used + 1, text.size() - used - 1 - suffix.size());
        std::size_t used_b = 0;
        const long long b = std::stoll(middle, &used_b);
        if (used_b != middle.size()) throw std::invalid_argument(text);
        return Cost{a, b};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed cost: '" + text + "'");
    }
}

}  // namespace nbs

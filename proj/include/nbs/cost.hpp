#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace nbs {

// Exact path cost of the form a + b*sqrt(2) with integer a, b.
//
// Integer-cost domains only ever use b == 0. Octile grids use b for the number
// of diagonal moves, so costs compare exactly and ties at the termination test
// are decided without floating-point noise. Infinity is a distinct value that
// absorbs addition.
class Cost {
  public:
    constexpr Cost() = default;
    constexpr explicit Cost(std::int64_t units, std::int64_t diagonals = 0) : a_(units), b_(diagonals) {}

    static constexpr Cost zero() { return Cost{}; }
    static constexpr Cost infinity() {
        Cost c;
        c.a_ = std::numeric_limits<std::int64_t>::max();
        c.b_ = 0;
        c.inf_ = true;
        return c;
    }
    static constexpr Cost sqrt2() { return Cost{0, 1}; }

    [[nodiscard]] constexpr bool is_infinite() const { return inf_; }
    [[nodiscard]] constexpr bool is_finite() const { return !inf_; }
    [[nodiscard]] constexpr std::int64_t units() const { return a_; }
    [[nodiscard]] constexpr std::int64_t diagonals() const { return b_; }
    [[nodiscard]] double to_double() const;

    friend constexpr Cost operator+(Cost x, Cost y) {
        if (x.inf_ || y.inf_) return infinity();
        return Cost{x.a_ + y.a_, x.b_ + y.b_};
    }
    constexpr Cost& operator+=(Cost y) { return *this = *this + y; }
    friend constexpr Cost operator*(std::int64_t k, Cost x) {
        if (x.inf_) return infinity();
        return Cost{k * x.a_, k * x.b_};
    }

    friend constexpr bool operator==(Cost x, Cost y) {
        if (x.inf_ || y.inf_) return x.inf_ == y.inf_;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend constexpr std::strong_ordering operator<=>(Cost x, Cost y) {
        if (x.inf_ || y.inf_) return static_cast<int>(x.inf_) <=> static_cast<int>(y.inf_);
        if (x.b_ == y.b_) return x.a_ <=> y.a_;
        // sign of (x.a - y.a) + (x.b - y.b) * sqrt(2); sqrt(2) is irrational so
        // the value is zero only when both differences vanish.
        const __int128 da = static_cast<__int128>(x.a_) - y.a_;
        const __int128 db = static_cast<__int128>(x.b_) - y.b_;
        if (da >= 0 && db >= 0) return std::strong_ordering::greater;
        if (da <= 0 && db <= 0) return std::strong_ordering::less;
        const __int128 lhs = da * da;
        const __int128 rhs = 2 * db * db;
        if (da > 0) return lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::less;
        return rhs > lhs ? std::strong_ordering::greater : std::strong_ordering::less;
    }

  private:
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
    bool inf_ = false;
};

[[nodiscard]] constexpr Cost min(Cost x, Cost y) { return y < x ? y : x; }
[[nodiscard]] constexpr Cost max(Cost x, Cost y) { return x < y ? y : x; }

// "3", "2+1*sqrt2", "inf". parse_cost accepts exactly what to_string emits.
[[nodiscard]] std::string to_string(Cost c);
[[nodiscard]] Cost parse_cost(const std::string& text);

}  // namespace nbs

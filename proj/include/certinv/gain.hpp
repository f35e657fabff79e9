#pragma once

#include <compare>
#include <limits>
#include <ostream>

namespace certinv {

/// A gain value on the extended real line: finite or symbolic +infinity.
///
/// The saturation branch of a gain function is a semantic case (order to
/// capacity, emit the full interval), so it is carried as a flag rather than
/// as a floating-point overflow. Consumers branch on is_infinite().
class Gain {
public:
    constexpr Gain() = default;

    static constexpr Gain finite(double v) { return Gain{v, false}; }
    static constexpr Gain infinity() { return Gain{0.0, true}; }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    /// Finite value; +inf as a double when saturated (for printing only).
    constexpr double value() const {
        return infinite_ ? std::numeric_limits<double>::infinity() : value_;
    }

    friend constexpr bool operator==(const Gain& a, const Gain& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend constexpr std::partial_ordering operator<=>(const Gain& a, const Gain& b) {
        if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
        if (a.infinite_) return std::partial_ordering::greater;
        if (b.infinite_) return std::partial_ordering::less;
        return a.value_ <=> b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Gain& g) {
        if (g.infinite_) return os << "+inf";
        return os << g.value_;
    }

private:
    constexpr Gain(double v, bool inf) : value_(v), infinite_(inf) {}

    double value_ = 0.0;
    bool infinite_ = false;
};

} // namespace certinv

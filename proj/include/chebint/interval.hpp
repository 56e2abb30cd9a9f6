#pragma once

#include <stdexcept>
#include <string>

namespace chebint {

/// Closed real interval [lo, hi] together with the affine map to the
/// canonical domain [-1, 1] used by all Chebyshev machinery.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi)) {
            throw std::invalid_argument("interval: lo must be < hi (got lo=" +
                                        std::to_string(lo_) + ", hi=" + std::to_string(hi_) + ")");
        }
    }

    static Interval unit() { return {-1.0, 1.0}; }

    /// x in [lo, hi] -> t in [-1, 1]: t = (2x - lo - hi) / (hi - lo)
    [[nodiscard]] double to_unit(double x) const { return (2.0 * x - lo - hi) / (hi - lo); }

    /// t in [-1, 1] -> x in [lo, hi]
    [[nodiscard]] double from_unit(double t) const { return 0.5 * ((hi - lo) * t + (lo + hi)); }

    [[nodiscard]] double width() const { return hi - lo; }
    [[nodiscard]] bool contains(double x) const { return x >= lo && x <= hi; }
};

}  // namespace chebint

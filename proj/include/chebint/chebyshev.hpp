#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "interval.hpp"

namespace chebint {

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

/// T_n(x) by the three-term recurrence T_{n+1} = 2x T_n - T_{n-1}.
/// Valid for any real x, including |x| > 1.
[[nodiscard]] inline double cheb_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("n: polynomial order must be >= 0");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int i = 2; i <= n; ++i) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Normalized value Tbar_n(x): 1/sqrt(2) for n = 0, T_n(x) otherwise.
///
/// The normalization touches only the n = 0 value. Running the recurrence on
/// normalized values would be wrong from Tbar_2 on (2x*Tbar_1 - Tbar_0 uses
/// the scaled constant), so the recurrence always operates on the raw T_n
/// sequence and the scale is applied at the output.
[[nodiscard]] inline double cheb_eval_normalized(int n, double x) {
    if (n < 0) throw std::invalid_argument("n: polynomial order must be >= 0");
    return n == 0 ? kInvSqrt2 : cheb_eval(n, x);
}

/// One interpolation block: the N+1 roots of T_{N+1}, in ascending order,
/// affinely mapped into the interval.
struct ChebyshevWindow {
    int degree;                 // N
    std::vector<double> nodes;  // N+1 values, strictly increasing, strictly inside (lo, hi)
    Interval interval;

    [[nodiscard]] int count() const { return degree + 1; }
};

/// Ascending root set of T_{N+1} on the given interval.
///
/// Node i is -cos((2i+1)pi/(2n)) in the canonical domain, computed in the
/// equivalent form sin(pi*(2i+1-n)/(2n)) whose argument is antisymmetric in
/// i <-> n-1-i, so the node set is exactly symmetric about the midpoint (and
/// the middle node of an odd count is exactly 0).
[[nodiscard]] inline ChebyshevWindow cheb_nodes(int degree, const Interval& interval = Interval::unit()) {
    if (degree < 0) throw std::invalid_argument("degree: must be >= 0");
    const int n = degree + 1;
    std::vector<double> nodes(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = std::sin(std::numbers::pi * (2 * i + 1 - n) / (2.0 * n));
        nodes[static_cast<size_t>(i)] = interval.from_unit(t);
    }
    return {degree, std::move(nodes), interval};
}

}  // namespace chebint

#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "chebyshev.hpp"
#include "dct.hpp"

namespace chebint {

/// P_N(x) = sum_i c_i Tbar_i(t(x)), with the Tbar values produced by the
/// running recurrence (one update plus one multiply-add per term).
/// Evaluation outside the window's interval is permitted; it is ordinary
/// polynomial extrapolation and callers decide whether to flag it.
[[nodiscard]] inline double interpolate(const CoefficientSet& cs, double x) {
    const double t = cs.window.interval.to_unit(x);
    double sum = cs.coeffs[0] * kInvSqrt2;
    if (cs.degree >= 1) {
        double prev = 1.0;
        double cur = t;
        sum += cs.coeffs[1] * t;
        for (int i = 2; i <= cs.degree; ++i) {
            const double next = 2.0 * t * cur - prev;
            sum += cs.coeffs[static_cast<size_t>(i)] * next;
            prev = cur;
            cur = next;
        }
    }
    return sum;
}

/// Cardinal interpolation weight phi_i(t) on the canonical domain:
///
///   phi_i(t) = sum_k mu_k * Tbar_k(t) * cos(k*pi*(2i+1)/(2(N+1)))
///
/// i.e. column i of the coefficient matrix contracted with the Tbar values.
/// phi_i is 1 at canonical node i (ascending order) and 0 at the others,
/// and the set sums to 1 everywhere.
[[nodiscard]] inline double ctif(int i, double t, int degree) {
    if (degree < 0) throw std::invalid_argument("degree: must be >= 0");
    if (i < 0 || i > degree) {
        throw std::out_of_range("i: cardinal index must be in [0, " + std::to_string(degree) + "]");
    }
    const int n = degree + 1;
    double total = 0.0;
    double prev = 1.0;
    double cur = t;
    for (int k = 0; k <= degree; ++k) {
        const double mu = (k == 0) ? std::numbers::sqrt2 / n : 2.0 * ((k & 1) ? -1.0 : 1.0) / n;
        double tbar;
        if (k == 0) {
            tbar = kInvSqrt2;
        } else if (k == 1) {
            tbar = t;
        } else {
            const double next = 2.0 * t * cur - prev;
            prev = cur;
            cur = next;
            tbar = next;
        }
        total += mu * tbar * std::cos(k * std::numbers::pi * (2 * i + 1) / (2.0 * n));
    }
    return total;
}

/// Time-domain interpolation sum_i f(t_i) phi_i(t) on the canonical domain;
/// samples in ascending node order. Same arithmetic as the transform route
/// (coefficients then summation), reordered.
[[nodiscard]] inline double interpolate_ctif(std::span<const double> samples, double t) {
    if (samples.empty()) throw std::invalid_argument("samples: need at least one value");
    const int degree = static_cast<int>(samples.size()) - 1;
    double sum = 0.0;
    for (int i = 0; i <= degree; ++i) {
        sum += samples[static_cast<size_t>(i)] * ctif(i, t, degree);
    }
    return sum;
}

}  // namespace chebint

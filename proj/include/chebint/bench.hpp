#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dct.hpp"
#include "interpolate.hpp"
#include "interval.hpp"
#include "lagrange.hpp"
#include "signal.hpp"

namespace chebint::bench {

enum class Scheme { chebyshev, equispaced };

[[nodiscard]] inline const char* to_string(Scheme s) {
    return s == Scheme::chebyshev ? "chebyshev" : "equispaced";
}

[[nodiscard]] inline Scheme parse_scheme(const std::string& tag) {
    if (tag == "chebyshev") return Scheme::chebyshev;
    if (tag == "equispaced") return Scheme::equispaced;
    throw std::invalid_argument("scheme: unsupported tag '" + tag +
                                "' (expected chebyshev or equispaced)");
}

/// Uniform sampling grid with both endpoints included; a single point sits
/// at the midpoint.
struct EquispacedWindow {
    int count;
    std::vector<double> nodes;
    Interval interval;
};

[[nodiscard]] inline EquispacedWindow equispaced_nodes(int count,
                                                       const Interval& interval = Interval::unit()) {
    if (count < 1) throw std::invalid_argument("count: need at least one node");
    std::vector<double> nodes(static_cast<size_t>(count));
    if (count == 1) {
        nodes[0] = 0.5 * (interval.lo + interval.hi);
    } else {
        for (int i = 0; i < count; ++i) {
            nodes[static_cast<size_t>(i)] = interval.lo + i * interval.width() / (count - 1);
        }
    }
    return {count, std::move(nodes), interval};
}

/// Worst-case deviation of the interpolant from the signal over a dense
/// uniform evaluation grid, as a percentage of the signal's own maximum on
/// that grid.
struct ErrorReport {
    double max_abs_error;
    double normalizer;              // max |signal| over the evaluation grid
    double relative_error_percent;  // 100 * max_abs_error / normalizer
    int grid_density;
    Scheme scheme;
};

[[nodiscard]] inline ErrorReport measure_error(const SignalSpec& signal, Scheme scheme,
                                               int n_points, const Interval& interval,
                                               int grid_density = 2001) {
    if (n_points < 2) throw std::invalid_argument("n_points: need at least 2 sample points");
    if (grid_density < 1000) throw std::invalid_argument("grid_density: must be >= 1000");

    // The chebyshev route goes through the transform-domain interpolant so the
    // comparison exercises exactly the arithmetic the rest of the project uses;
    // the equispaced baseline interpolates through all its points at full degree.
    const ChebyshevWindow cheb_window =
        scheme == Scheme::chebyshev ? cheb_nodes(n_points - 1, interval) : cheb_nodes(0);
    const std::vector<double> nodes = scheme == Scheme::chebyshev
                                          ? cheb_window.nodes
                                          : equispaced_nodes(n_points, interval).nodes;
    std::vector<double> samples;
    samples.reserve(nodes.size());
    for (const double xn : nodes) samples.push_back(signal(xn));

    CoefficientSet cs{0, {}, cheb_window};
    if (scheme == Scheme::chebyshev) cs = compute_coeffs(samples, cheb_window);

    double max_err = 0.0;
    double max_sig = 0.0;
    for (int g = 0; g < grid_density; ++g) {
        const double x = interval.lo + g * interval.width() / (grid_density - 1);
        const double truth = signal(x);
        const double approx = (scheme == Scheme::chebyshev)
                                  ? interpolate(cs, x)
                                  : lagrange_interpolate(nodes, samples, x);
        max_err = std::max(max_err, std::abs(approx - truth));
        max_sig = std::max(max_sig, std::abs(truth));
    }
    const double rel = (max_err == 0.0) ? 0.0
                       : (max_sig > 0.0) ? 100.0 * max_err / max_sig
                                         : std::numeric_limits<double>::infinity();
    return {max_err, max_sig, rel, grid_density, scheme};
}

/// Result of the smallest-point-count scan; reached == false means no count
/// in [2, n_max] met the target.
struct MinPointsResult {
    bool reached;
    int n_points;  // the answer when reached, n_max otherwise
};

/// Smallest n in [2, n_max] whose relative error is below target_percent.
/// Linear scan: equispaced errors are not monotone in n, so bisection is not
/// sound here.
[[nodiscard]] inline MinPointsResult min_points_for_error(const SignalSpec& signal, Scheme scheme,
                                                          double target_percent,
                                                          const Interval& interval, int n_max,
                                                          int grid_density = 2001) {
    if (target_percent <= 0.0) throw std::invalid_argument("target_percent: must be > 0");
    if (n_max < 2) throw std::invalid_argument("n_max: must be >= 2");
    for (int n = 2; n <= n_max; ++n) {
        if (measure_error(signal, scheme, n, interval, grid_density).relative_error_percent <
            target_percent) {
            return {true, n};
        }
    }
    return {false, n_max};
}

}  // namespace chebint::bench

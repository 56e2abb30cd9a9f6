#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chebint {

/// Value at x of the unique degree-(n-1) polynomial through the given
/// distinct nodes, in the (second) barycentric form. Exact at the nodes by
/// construction. Stable on any node distribution, unlike the Vandermonde
/// route it is validated against at small n.
[[nodiscard]] inline double lagrange_interpolate(std::span<const double> nodes,
                                                 std::span<const double> samples, double x) {
    const size_t n = nodes.size();
    if (samples.size() != n) throw std::invalid_argument("samples: length must match nodes");
    if (n == 0) throw std::invalid_argument("nodes: need at least one node");
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (nodes[i] == nodes[j]) {
                throw std::invalid_argument("nodes: duplicate node at indices " +
                                            std::to_string(i) + " and " + std::to_string(j));
            }
        }
    }
    for (size_t j = 0; j < n; ++j) {
        if (x == nodes[j]) return samples[j];
    }
    std::vector<double> w(n, 1.0);
    for (size_t j = 0; j < n; ++j) {
        for (size_t m = 0; m < n; ++m) {
            if (m != j) w[j] /= (nodes[j] - nodes[m]);
        }
    }
    double num = 0.0;
    double den = 0.0;
    for (size_t j = 0; j < n; ++j) {
        const double term = w[j] / (x - nodes[j]);
        num += term * samples[j];
        den += term;
    }
    return num / den;
}

}  // namespace chebint

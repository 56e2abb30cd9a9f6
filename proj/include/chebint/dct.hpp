#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chebyshev.hpp"

namespace chebint {

/// The (N+1)x(N+1) sample-to-coefficient matrix
///
///   entries[j][k] = mu_j * cos(j*pi*(2k+1) / (2(N+1)))
///   mu_0 = sqrt(2)/(N+1),  mu_j = 2(-1)^j/(N+1) for j >= 1.
///
/// The alternating sign in mu_j is what makes the matrix act on samples
/// listed in *ascending* node order: with descending samples every odd
/// coefficient comes out with the wrong sign (easily seen on f(x) = x at
/// two nodes). Row 0 is constant, every entry exactly sqrt(2)/(N+1).
struct CoefficientMatrix {
    int degree;
    std::vector<std::vector<double>> entries;
};

[[nodiscard]] inline CoefficientMatrix dct_matrix(int degree) {
    if (degree < 0) throw std::invalid_argument("degree: must be >= 0");
    const int n = degree + 1;
    std::vector<std::vector<double>> entries(static_cast<size_t>(n),
                                             std::vector<double>(static_cast<size_t>(n)));
    for (int j = 0; j < n; ++j) {
        const double mu = (j == 0) ? std::numbers::sqrt2 / n : 2.0 * ((j & 1) ? -1.0 : 1.0) / n;
        for (int k = 0; k < n; ++k) {
            entries[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                mu * std::cos(j * std::numbers::pi * (2 * k + 1) / (2.0 * n));
        }
    }
    return {degree, std::move(entries)};
}

/// Expansion coefficients c_0..c_N of the interpolating polynomial
/// sum_i c_i Tbar_i, together with the window the samples came from.
struct CoefficientSet {
    int degree;
    std::vector<double> coeffs;
    ChebyshevWindow window;
};

/// c = C * samples. Samples must be listed in ascending node order (the
/// same order as window.nodes).
[[nodiscard]] inline CoefficientSet compute_coeffs(std::span<const double> samples,
                                                   const ChebyshevWindow& window) {
    const int n = window.degree + 1;
    if (static_cast<int>(samples.size()) != n) {
        throw std::invalid_argument("samples: expected " + std::to_string(n) + " values, got " +
                                    std::to_string(samples.size()));
    }
    const CoefficientMatrix C = dct_matrix(window.degree);
    std::vector<double> coeffs(static_cast<size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) {
            acc += C.entries[static_cast<size_t>(j)][static_cast<size_t>(k)] *
                   samples[static_cast<size_t>(k)];
        }
        coeffs[static_cast<size_t>(j)] = acc;
    }
    return {window.degree, std::move(coeffs), window};
}

}  // namespace chebint

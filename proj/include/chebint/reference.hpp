#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace chebint::reference {

/// Dense linear solve by Gaussian elimination with partial pivoting.
/// Brute-force on purpose: this is the independent route the transform-based
/// results are checked against, so it must not share any code with them.
[[nodiscard]] inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                                     std::vector<double> b) {
    const size_t n = b.size();
    if (a.size() != n) throw std::invalid_argument("matrix: row count must match rhs length");
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (a[pivot][col] == 0.0) throw std::domain_error("matrix: singular system");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (size_t r = col + 1; r < n; ++r) {
            const double factor = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (size_t i = n; i-- > 0;) {
        double s = b[i];
        for (size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

/// Monomial coefficients (decreasing powers x^{n-1}..x^0) of the unique
/// polynomial through (nodes[k], samples[k]), via the Vandermonde system.
[[nodiscard]] inline std::vector<double> vandermonde_coeffs(std::span<const double> nodes,
                                                            std::span<const double> samples) {
    const size_t n = nodes.size();
    if (samples.size() != n) throw std::invalid_argument("samples: length must match nodes");
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 1.0));
    for (size_t k = 0; k < n; ++k) {
        for (size_t j = n; j-- > 1;) {
            // column j holds x^{n-1-j}; build right-to-left
            v[k][j - 1] = v[k][j] * nodes[k];
        }
    }
    return solve_dense(std::move(v), std::vector<double>(samples.begin(), samples.end()));
}

/// Horner evaluation of coefficients stored in decreasing-power order.
[[nodiscard]] inline double horner_descending(std::span<const double> coeffs, double x) {
    double s = 0.0;
    for (const double c : coeffs) s = s * x + c;
    return s;
}

}  // namespace chebint::reference

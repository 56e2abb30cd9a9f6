#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "chebyshev.hpp"
#include "dct.hpp"

namespace chebint {

/// Monomial coefficients of the Chebyshev polynomials: row i holds T_i on
/// the powers x^N .. x^0 (decreasing). Exists for small-N cross-checks and
/// documentation only; the monomial form is ill-conditioned for large N, so
/// evaluation always goes through the recurrence.
struct PowerBasisMatrix {
    int degree;
    std::vector<std::vector<double>> rows;
};

[[nodiscard]] inline PowerBasisMatrix power_basis_matrix(int degree) {
    if (degree < 0) throw std::invalid_argument("degree: must be >= 0");
    const auto n = static_cast<size_t>(degree + 1);
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    rows[0][n - 1] = 1.0;                  // T_0 = 1
    if (degree >= 1) rows[1][n - 2] = 1.0; // T_1 = x
    for (size_t i = 1; i + 1 < n; ++i) {
        // row_{i+1} = 2 * shift(row_i) - row_{i-1}; shifting by one power of x
        // moves entries one column toward the high end.
        for (size_t col = 0; col < n; ++col) {
            const double shifted = (col + 1 < n) ? rows[i][col + 1] : 0.0;
            rows[i + 1][col] = 2.0 * shifted - rows[i - 1][col];
        }
    }
    return {degree, std::move(rows)};
}

/// Monomial coefficients (decreasing powers) of sum_i c_i Tbar_i.
[[nodiscard]] inline std::vector<double> to_power_basis(const CoefficientSet& cs) {
    const PowerBasisMatrix T = power_basis_matrix(cs.degree);
    const auto n = static_cast<size_t>(cs.degree + 1);
    std::vector<double> out(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        const double ci = (i == 0) ? cs.coeffs[0] * kInvSqrt2 : cs.coeffs[i];
        for (size_t col = 0; col < n; ++col) out[col] += ci * T.rows[i][col];
    }
    return out;
}

}  // namespace chebint

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <chebint/chebyshev.hpp>
#include <chebint/power_basis.hpp>
#include <chebint/reference.hpp>
#include <chebint/signal.hpp>

using namespace chebint;

TEST_CASE("power basis rows hold the monomial coefficients", "[power_basis]") {
    const auto T = power_basis_matrix(3);
    CHECK(T.rows[0] == std::vector<double>{0, 0, 0, 1});
    CHECK(T.rows[1] == std::vector<double>{0, 0, 1, 0});
    CHECK(T.rows[2] == std::vector<double>{0, 2, 0, -1});
    CHECK(T.rows[3] == std::vector<double>{4, 0, -3, 0});
}

TEST_CASE("leading coefficient of T_i is 2^(i-1)", "[power_basis][property]") {
    const int degree = 12;
    const auto T = power_basis_matrix(degree);
    for (int i = 1; i <= degree; ++i) {
        const auto& row = T.rows[static_cast<size_t>(i)];
        const size_t lead = static_cast<size_t>(degree - i);
        CHECK(row[lead] == std::ldexp(1.0, i - 1));
        for (size_t col = 0; col < lead; ++col) CHECK(row[col] == 0.0);
    }
}

TEST_CASE("monomial rows agree with the recurrence evaluation", "[power_basis]") {
    const auto T = power_basis_matrix(8);
    for (int i = 0; i <= 8; ++i) {
        const double via_row = reference::horner_descending(T.rows[static_cast<size_t>(i)], 0.37);
        CHECK(via_row == Catch::Approx(cheb_eval(i, 0.37)).margin(1e-12));
    }
}

TEST_CASE("transform route equals the direct linear solve", "[power_basis][oracle]") {
    for (const auto& f : {SignalSpec::harmonic(), SignalSpec::damped()}) {
        for (int N = 0; N <= 10; ++N) {
            const auto w = cheb_nodes(N);
            std::vector<double> samples;
            for (const double x : w.nodes) samples.push_back(f(x));
            const auto via_transform = to_power_basis(compute_coeffs(samples, w));
            const auto via_solve = reference::vandermonde_coeffs(w.nodes, samples);
            double scale = 1.0;
            for (const double v : via_solve) scale = std::max(scale, std::abs(v));
            for (size_t j = 0; j < via_solve.size(); ++j) {
                CHECK(std::abs(via_transform[j] - via_solve[j]) <= 1e-8 * scale);
            }
        }
    }
}

TEST_CASE("reference solver rejects degenerate systems", "[power_basis][oracle]") {
    const std::vector<double> nodes{0.5, 0.5};
    const std::vector<double> samples{1.0, 2.0};
    CHECK_THROWS_AS(reference::vandermonde_coeffs(nodes, samples), std::domain_error);
    CHECK_THROWS_AS(power_basis_matrix(-1), std::invalid_argument);
}

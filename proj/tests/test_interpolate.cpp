#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include <chebint/dct.hpp>
#include <chebint/interpolate.hpp>
#include <chebint/signal.hpp>

using namespace chebint;

namespace {
std::vector<double> sample_at(const SignalSpec& f, const std::vector<double>& nodes) {
    std::vector<double> s;
    for (const double x : nodes) s.push_back(f(x));
    return s;
}
}  // namespace

TEST_CASE("constant signals reproduce exactly", "[interpolate]") {
    const auto f = SignalSpec::constant(5.0);
    const auto w = cheb_nodes(6);
    const auto cs = compute_coeffs(sample_at(f, w.nodes), w);
    for (const double x : {-0.9, -0.2, 0.0, 0.4, 0.99}) {
        CHECK(interpolate(cs, x) == Catch::Approx(5.0).margin(1e-12));
    }
}

TEST_CASE("the identity through two nodes stays the identity", "[interpolate]") {
    const auto w = cheb_nodes(1);
    const auto cs = compute_coeffs(w.nodes, w);
    CHECK(interpolate(cs, 0.25) == Catch::Approx(0.25).margin(1e-15));
    CHECK(interpolate(cs, -0.8) == Catch::Approx(-0.8).margin(1e-15));
}

TEST_CASE("degree-d polynomials are reproduced exactly for d <= N", "[interpolate][property]") {
    const auto f = SignalSpec::polynomial({0.3, -1.2, 0.0, 2.5, -0.7, 0.1});  // degree 5
    const auto w = cheb_nodes(7);
    const auto cs = compute_coeffs(sample_at(f, w.nodes), w);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double x = unit(rng);
        const double truth = f(x);
        CHECK(std::abs(interpolate(cs, x) - truth) <= 1e-10 * std::max(1.0, std::abs(truth)));
    }
}

TEST_CASE("evaluation outside the window is permitted", "[interpolate]") {
    const auto f = SignalSpec::harmonic();
    const auto w = cheb_nodes(7);
    const auto cs = compute_coeffs(sample_at(f, w.nodes), w);
    CHECK(std::isfinite(interpolate(cs, 1.3)));
    CHECK(std::isfinite(interpolate(cs, -2.0)));
}

TEST_CASE("cardinal functions partition unity and hit the nodes", "[interpolate][property]") {
    const int N = 7;
    const auto w = cheb_nodes(N);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double x = unit(rng);
        double sum = 0.0;
        for (int i = 0; i <= N; ++i) sum += ctif(i, x, N);
        CHECK(std::abs(sum - 1.0) <= 1e-10);
    }
    for (int i = 0; i <= N; ++i) {
        for (int j = 0; j <= N; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            CHECK(std::abs(ctif(i, w.nodes[static_cast<size_t>(j)], N) - expected) <= 1e-10);
        }
    }
}

TEST_CASE("cardinal function equals the matrix-column contraction", "[interpolate]") {
    const int N = 7;
    const double x = 0.2;
    const auto C = dct_matrix(N);
    for (int i : {0, 3, 7}) {
        double via_column = 0.0;
        for (int k = 0; k <= N; ++k) {
            via_column += C.entries[static_cast<size_t>(k)][static_cast<size_t>(i)] *
                          cheb_eval_normalized(k, x);
        }
        CHECK(ctif(i, x, N) == Catch::Approx(via_column).margin(1e-14));
    }
}

TEST_CASE("cardinal index bounds are enforced", "[interpolate]") {
    CHECK_THROWS_AS(ctif(-1, 0.0, 7), std::out_of_range);
    CHECK_THROWS_AS(ctif(8, 0.0, 7), std::out_of_range);
    CHECK_THROWS_AS(interpolate_ctif(std::vector<double>{}, 0.0), std::invalid_argument);
}

TEST_CASE("time-domain route agrees with the transform route", "[interpolate][property]") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const auto w = cheb_nodes(7);
    const std::vector<SignalSpec> signals{SignalSpec::harmonic(), SignalSpec::damped(),
                                          SignalSpec::polynomial({1.0, -0.5, 2.0}),
                                          SignalSpec::constant(3.25)};
    for (int trial = 0; trial < 100; ++trial) {
        const auto& f = signals[static_cast<size_t>(trial) % signals.size()];
        const double x = unit(rng);
        const auto samples = sample_at(f, w.nodes);
        double max_sample = 0.0;
        for (const double s : samples) max_sample = std::max(max_sample, std::abs(s));
        const double transform_route = interpolate(compute_coeffs(samples, w), x);
        const double time_route = interpolate_ctif(samples, x);
        CHECK(std::abs(transform_route - time_route) <= 1e-12 * std::max(1.0, max_sample));
    }
}

TEST_CASE("time-domain route handles the two-node identity", "[interpolate]") {
    const auto w = cheb_nodes(1);
    CHECK(interpolate_ctif(w.nodes, -0.4) == Catch::Approx(-0.4).margin(1e-15));
    const std::vector<double> constant{2.0, 2.0};
    CHECK(interpolate_ctif(constant, 0.77) == Catch::Approx(2.0).margin(1e-14));
}

#include <catch2/catch_amalgamated.hpp>

#include <chebint/repro.hpp>

using namespace chebint;

TEST_CASE("the checklist runs every check and reports one honest failure", "[repro]") {
    const auto results = repro::run_checks();
    REQUIRE(results.size() == 8);
    for (size_t i = 0; i < results.size(); ++i) {
        CHECK(results[i].id == static_cast<int>(i) + 1);
        CHECK_FALSE(results[i].name.empty());
        CHECK_FALSE(results[i].expected.empty());
        CHECK_FALSE(results[i].actual.empty());
        if (results[i].id == 4) {
            // the reference point counts do not reproduce under the pinned
            // error metric; the checklist reports that instead of hiding it
            CHECK_FALSE(results[i].passed);
        } else {
            CHECK(results[i].passed);
        }
    }
}

TEST_CASE("a tampered tolerance fails its own row with expected-vs-actual", "[repro]") {
    repro::Tolerances t;
    t.ratio_lo = 4.9;
    t.ratio_hi = 4.99;  // the measured ratio is ~4.64
    const auto row = repro::check_error_ratio(t);
    CHECK_FALSE(row.passed);
    CHECK(row.expected.find("4.9") != std::string::npos);
    CHECK(row.actual.find("ratio") != std::string::npos);

    repro::Tolerances t2;
    t2.power_total_au = 9999;
    const auto power_row = repro::check_power_accounting(t2);
    CHECK_FALSE(power_row.passed);
    CHECK(power_row.expected.find("9999") != std::string::npos);
    CHECK(power_row.actual.find("1552") != std::string::npos);

    repro::Tolerances t3;
    t3.window8_latency = 17;
    const auto arch_row = repro::check_architecture_metrics(t3);
    CHECK_FALSE(arch_row.passed);
    CHECK(arch_row.actual.find("latency 16 != 17") != std::string::npos);
}

TEST_CASE("checklist results are deterministic", "[repro]") {
    const auto a = repro::run_checks();
    const auto b = repro::run_checks();
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].passed == b[i].passed);
        CHECK(a[i].actual == b[i].actual);
    }
}

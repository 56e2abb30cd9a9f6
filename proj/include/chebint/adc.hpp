#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chebyshev.hpp"

namespace chebint::adc {

// Behavioral model of a flash+SAR hybrid sampler for one Chebyshev window.
// The window's inter-node gaps, measured in units of the smallest gap (one
// flash period), decide which samples the slow converter can take; power is
// counted in comparator firings: a thermometric b-bit flash burns 2^b
// comparisons per sample, a SAR burns b.

/// Inter-node gaps of an N+1 sample window in flash-period units:
/// gap_k = sin(k*c)/sin(c), c = pi/(N+1), k = 1..N. This is the consecutive
/// node difference 2*sin(k*c)*sin(c/2) divided by the smallest (edge) gap,
/// so gap_1 = gap_N = 1 and the list is palindromic.
struct SamplingTimeline {
    ChebyshevWindow window;
    std::vector<double> gaps_in_flash_units;  // N values, gap k at index k-1
};

[[nodiscard]] inline SamplingTimeline build_timeline(int degree) {
    if (degree < 1) throw std::invalid_argument("degree: need N >= 1, a single sample has no gaps");
    const int n = degree + 1;
    const double c = std::numbers::pi / n;
    std::vector<double> gaps(static_cast<size_t>(degree));
    for (int k = 1; k <= degree; ++k) {
        // sin(k*c) == sin((n-k)*c); using the smaller index keeps the
        // palindrome exact in floating point.
        const int kk = std::min(k, n - k);
        gaps[static_cast<size_t>(k - 1)] = std::sin(kk * c) / std::sin(c);
    }
    return {cheb_nodes(degree), std::move(gaps)};
}

enum class Policy { both_adjacent, preceding_gap_only, greedy_nonoverlap };
enum class AdcKind { flash, sar };

[[nodiscard]] inline const char* to_string(Policy p) {
    switch (p) {
        case Policy::both_adjacent: return "both_adjacent";
        case Policy::preceding_gap_only: return "preceding_gap_only";
        default: return "greedy_nonoverlap";
    }
}

[[nodiscard]] inline Policy parse_policy(const std::string& tag) {
    if (tag == "both_adjacent") return Policy::both_adjacent;
    if (tag == "preceding_gap_only") return Policy::preceding_gap_only;
    if (tag == "greedy_nonoverlap") return Policy::greedy_nonoverlap;
    throw std::invalid_argument("policy: unknown tag '" + tag + "'");
}

[[nodiscard]] inline const char* to_string(AdcKind k) {
    return k == AdcKind::flash ? "flash" : "sar";
}

/// Which converter takes each of the N+1 samples (ascending node order).
struct AdcSplit {
    std::vector<AdcKind> assignments;
    int a_flash = 0;
    int a_sar = 0;
    double t_sar = 0.0;  // SAR acquisition+conversion time, flash periods
    Policy policy = Policy::both_adjacent;
};

/// Assign samples to the SAR converter where the timeline leaves it room.
///
///   both_adjacent      sample i goes to SAR iff floor(gap) >= t_sar on BOTH
///                      sides (acquisition before, conversion after); the
///                      out-of-window gaps at the edges count as zero.
///   preceding_gap_only single-sided reading of the same threshold, on the
///                      gap before the sample only.
///   greedy_nonoverlap  walk the actual sampling instants and take every
///                      interior sample whose distance from the previous SAR
///                      sample is >= t_sar and whose conversion finishes
///                      within the window.
///
/// Every policy yields SAR instants spaced at least t_sar apart.
[[nodiscard]] inline AdcSplit split_samples(const SamplingTimeline& timeline, double t_sar,
                                            Policy policy = Policy::both_adjacent) {
    if (t_sar < 0.0) throw std::invalid_argument("t_sar: must be >= 0");
    const auto& gaps = timeline.gaps_in_flash_units;
    const int count = static_cast<int>(gaps.size()) + 1;  // N+1 samples

    auto gap_before = [&](int i) { return i == 0 ? 0.0 : gaps[static_cast<size_t>(i - 1)]; };
    auto gap_after = [&](int i) {
        return i == count - 1 ? 0.0 : gaps[static_cast<size_t>(i)];
    };

    AdcSplit split;
    split.t_sar = t_sar;
    split.policy = policy;
    split.assignments.assign(static_cast<size_t>(count), AdcKind::flash);

    if (policy == Policy::greedy_nonoverlap) {
        std::vector<double> instants(static_cast<size_t>(count), 0.0);
        for (int i = 1; i < count; ++i) {
            instants[static_cast<size_t>(i)] =
                instants[static_cast<size_t>(i - 1)] + gaps[static_cast<size_t>(i - 1)];
        }
        const double window_end = instants.back();
        double last_sar = -std::numeric_limits<double>::infinity();
        for (int i = 1; i < count - 1; ++i) {
            const double t = instants[static_cast<size_t>(i)];
            if (t - last_sar >= t_sar && window_end - t >= t_sar) {
                split.assignments[static_cast<size_t>(i)] = AdcKind::sar;
                last_sar = t;
            }
        }
    } else {
        for (int i = 0; i < count; ++i) {
            const bool before_ok = std::floor(gap_before(i)) >= t_sar;
            const bool after_ok = std::floor(gap_after(i)) >= t_sar;
            const bool take = (policy == Policy::both_adjacent) ? (before_ok && after_ok)
                                                                : before_ok;
            if (take) split.assignments[static_cast<size_t>(i)] = AdcKind::sar;
        }
    }

    for (const AdcKind k : split.assignments) {
        if (k == AdcKind::sar) ++split.a_sar;
        else ++split.a_flash;
    }
    return split;
}

/// Comparator-firing energy account for one window, in arbitrary units.
struct PowerReport {
    int bits = 0;
    long flash_comparisons_per_sample = 0;  // 2^bits (thermometric flash)
    long sar_comparisons_per_sample = 0;    // bits
    long total_au = 0;                      // a_flash * 2^b + a_sar * b
    long baseline_au = 0;                   // baseline_points * 2^b (flash-only sampler)
    double savings_percent = 0.0;           // 100 * (baseline - total) / baseline
};

/// baseline_points is the sample count of the equispaced flash-only system
/// meeting the same error target.
[[nodiscard]] inline PowerReport power_report(const AdcSplit& split, int bits,
                                              int baseline_points) {
    if (bits < 1) throw std::invalid_argument("bits: must be >= 1");
    if (baseline_points < 1) throw std::invalid_argument("baseline_points: must be >= 1");
    PowerReport r;
    r.bits = bits;
    r.flash_comparisons_per_sample = 1L << bits;
    r.sar_comparisons_per_sample = bits;
    r.total_au = split.a_flash * r.flash_comparisons_per_sample +
                 split.a_sar * r.sar_comparisons_per_sample;
    r.baseline_au = baseline_points * r.flash_comparisons_per_sample;
    r.savings_percent =
        100.0 * static_cast<double>(r.baseline_au - r.total_au) / static_cast<double>(r.baseline_au);
    return r;
}

}  // namespace chebint::adc

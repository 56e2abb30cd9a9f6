#pragma once

#include <charconv>
#include <string>

#include <json.hpp>

#include "adc.hpp"
#include "bench.hpp"
#include "chebyshev.hpp"
#include "dct.hpp"
#include "systolic.hpp"

namespace chebint::io {

using json = nlohmann::ordered_json;

/// Shortest round-trip decimal form, locale independent ('.' separator).
[[nodiscard]] inline std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

[[nodiscard]] inline json to_json(const Interval& iv) { return {{"lo", iv.lo}, {"hi", iv.hi}}; }

[[nodiscard]] inline json to_json(const ChebyshevWindow& w) {
    return {{"degree", w.degree}, {"nodes", w.nodes}, {"interval", to_json(w.interval)}};
}

[[nodiscard]] inline json to_json(const CoefficientSet& cs) {
    json j = to_json(cs.window);
    j["coeffs"] = cs.coeffs;
    return j;
}

[[nodiscard]] inline json stage_ops_json(const systolic::StageOps& ops) {
    // plain counts stay numeric, qualitative entries become strings
    if (ops.has_count && !ops.stored && !ops.lower_bound) return ops.count;
    return ops.to_string();
}

[[nodiscard]] inline json to_json(const systolic::ArchMetrics& m) {
    return {{"architecture", systolic::to_string(m.architecture)},
            {"buffering", systolic::to_string(m.buffering)},
            {"io_type", systolic::to_string(m.io_type)},
            {"peak_ops_coeff", stage_ops_json(m.peak_ops_coeff)},
            {"peak_ops_poly", stage_ops_json(m.peak_ops_poly)},
            {"peak_ops_fir", stage_ops_json(m.peak_ops_fir)},
            {"latency", m.latency},
            {"hue_percent", m.hue_percent}};
}

[[nodiscard]] inline json to_json(const adc::PowerReport& report, const adc::AdcSplit& split) {
    json assignments = json::array();
    for (const auto k : split.assignments) assignments.push_back(adc::to_string(k));
    return {{"assignments", assignments}, {"a_flash", split.a_flash},
            {"a_sar", split.a_sar},       {"total_au", report.total_au},
            {"baseline_au", report.baseline_au}, {"savings_percent", report.savings_percent}};
}

inline constexpr const char* kErrorCsvHeader =
    "signal,scheme,n_points,max_abs_error,relative_error_percent";

[[nodiscard]] inline std::string error_csv_row(const std::string& signal_name,
                                               const bench::ErrorReport& report, int n_points) {
    return signal_name + "," + bench::to_string(report.scheme) + "," + std::to_string(n_points) +
           "," + fmt(report.max_abs_error) + "," + fmt(report.relative_error_percent);
}

inline constexpr const char* kTraceCsvHeader = "cycle,stage,unit_id,busy,op_count,mux_state";

/// One row per cycle, stage and unit.
[[nodiscard]] inline std::string trace_csv(const systolic::SystolicTrace& trace) {
    std::string out = kTraceCsvHeader;
    out += '\n';
    for (const auto& rec : trace.records) {
        for (size_t u = 0; u < rec.units.size(); ++u) {
            const auto& unit = rec.units[u];
            out += std::to_string(rec.cycle_index);
            out += ',';
            out += systolic::to_string(rec.stage);
            out += ',';
            out += std::to_string(u);
            out += ',';
            out += unit.busy ? '1' : '0';
            out += ',';
            out += std::to_string(unit.op_count);
            out += ',';
            out += systolic::to_string(unit.mux);
            out += '\n';
        }
    }
    return out;
}

}  // namespace chebint::io

#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chebyshev.hpp"
#include "dct.hpp"

namespace chebint::systolic {

// Cycle-accurate model of the word-serial interpolation datapath. Three
// linear arrays of n = window_size MAC units each share one clock:
//
//   coeff : word-serial matrix-vector product. Sample k arrives at cycle k
//           and every unit j folds it in the same cycle (c_j += C[j][k]*f_k),
//           so the coefficients are complete after n cycles with exactly one
//           sample consumed per cycle.
//   poly  : one n-cycle pass per query point, one pass slot per unit, passes
//           entering one cycle apart in query order. A pass produces one
//           Tbar_i per cycle: the first cycle multiplies out the normalized
//           constant (mux position load_t0), the second multiplies the query
//           abscissa into the unit output (load_t1), and the remaining
//           cycles run the recurrence on the raw T values (iir). Every pass
//           cycle is one multiply(-accumulate) on its unit.
//   fir   : accumulates acc += c_i * Tbar_i one product per cycle, one unit
//           per in-flight query, lagging the poly pass by one cycle.
//
// Query q therefore completes at cycle 2n + q: first-in to first-out latency
// is 2n cycles, and with a query stream matched to the sample rate every
// unit of every stage is busy every steady-state cycle.
//
// The datapath operates on the canonical [-1, 1] abscissa; callers map query
// points through their interval first.

enum class Stage { coeff, poly, fir };
enum class MuxState { none, load_t0, load_t1, iir };
enum class Architecture { proposed, zhu_time, zhu_transform };
enum class Buffering { none, samples_and_T, T_only };
enum class IoType { word_serial, word_parallel };

[[nodiscard]] inline const char* to_string(Stage s) {
    switch (s) {
        case Stage::coeff: return "coeff";
        case Stage::poly: return "poly";
        default: return "fir";
    }
}

[[nodiscard]] inline const char* to_string(MuxState m) {
    switch (m) {
        case MuxState::none: return "none";
        case MuxState::load_t0: return "load_t0";
        case MuxState::load_t1: return "load_t1";
        default: return "iir";
    }
}

[[nodiscard]] inline const char* to_string(Architecture a) {
    switch (a) {
        case Architecture::proposed: return "proposed";
        case Architecture::zhu_time: return "zhu_time";
        default: return "zhu_transform";
    }
}

[[nodiscard]] inline Architecture parse_architecture(const std::string& tag) {
    if (tag == "proposed") return Architecture::proposed;
    if (tag == "zhu_time") return Architecture::zhu_time;
    if (tag == "zhu_transform") return Architecture::zhu_transform;
    throw std::invalid_argument("architecture: unknown tag '" + tag + "'");
}

[[nodiscard]] inline const char* to_string(Buffering b) {
    switch (b) {
        case Buffering::none: return "none";
        case Buffering::samples_and_T: return "samples_and_T";
        default: return "T_only";
    }
}

[[nodiscard]] inline const char* to_string(IoType io) {
    return io == IoType::word_serial ? "word_serial" : "word_parallel";
}

/// One processing element: at most one multiply-accumulate per cycle.
struct MacUnit {
    int id = 0;
    double state = 0.0;
    bool busy_this_cycle = false;
};

struct SystolicConfig {
    int window_size = 8;  // N+1 samples per block
    int mac_count = 8;    // units per stage; equals window_size
    std::array<int, 2> schedule_vector{1, 1};
    std::array<int, 2> projection_vector{1, 0};

    [[nodiscard]] static SystolicConfig proposed(int window_size) {
        if (window_size < 1) throw std::invalid_argument("window_size: must be >= 1");
        return {window_size, window_size, {1, 1}, {1, 0}};
    }

    void validate() const {
        if (window_size < 1) throw std::invalid_argument("window_size: must be >= 1");
        if (mac_count != window_size) {
            throw std::invalid_argument("mac_count: must equal window_size for the coefficient array");
        }
        if (schedule_vector != std::array<int, 2>{1, 1}) {
            throw std::invalid_argument("schedule_vector: must be [1,1]");
        }
        if (projection_vector != std::array<int, 2>{1, 0}) {
            throw std::invalid_argument("projection_vector: must be [1,0]");
        }
    }
};

struct UnitActivity {
    bool busy = false;
    int op_count = 0;
    MuxState mux = MuxState::none;
};

/// Activity of one stage in one cycle.
struct StageCycleRecord {
    long cycle_index = 0;
    Stage stage = Stage::coeff;
    int ops_issued = 0;
    std::vector<UnitActivity> units;
    MuxState mux_state = MuxState::none;  // input-mux position seen by the stage this cycle
};

/// Producer/consumer cycle pair for a value flowing between recorded ops.
struct DependenceEdge {
    long producer_cycle;
    long consumer_cycle;
};

struct SampleRead {
    long cycle;
    int sample_index;
};

struct PortEvent {
    enum class Kind { sample_in, query_in, result_out };
    long cycle;
    Kind kind;
    int index;
};

struct SystolicTrace {
    std::vector<StageCycleRecord> records;    // one record per stage per cycle
    std::vector<DependenceEdge> dependences;  // every op-to-op data dependence
    std::vector<SampleRead> sample_reads;
    std::vector<PortEvent> ports;
    long latency_cycles = 0;  // first result_out cycle - first sample_in cycle
    std::vector<std::pair<double, double>> outputs;  // (query_x, value)
    std::vector<double> coefficients;                // c_j at the end of the input phase
};

/// Run one window through the datapath. Samples in ascending node order on
/// the canonical domain, at least one query point.
[[nodiscard]] inline SystolicTrace simulate_window(std::span<const double> samples,
                                                   std::span<const double> query_points,
                                                   const SystolicConfig& config) {
    config.validate();
    const int n = config.window_size;
    if (static_cast<int>(samples.size()) != n) {
        throw std::invalid_argument("samples: expected " + std::to_string(n) + " values, got " +
                                    std::to_string(samples.size()));
    }
    if (query_points.empty()) throw std::invalid_argument("query_points: need at least one");

    const CoefficientMatrix C = dct_matrix(n - 1);
    const int q_count = static_cast<int>(query_points.size());
    const long t_end = 2L * n + q_count - 1;  // cycle of the last output

    SystolicTrace trace;
    trace.records.reserve(static_cast<size_t>(3 * (t_end + 1)));
    trace.coefficients.assign(static_cast<size_t>(n), 0.0);
    trace.outputs.reserve(static_cast<size_t>(q_count));

    std::vector<MacUnit> coeff_units(static_cast<size_t>(n));
    std::vector<MacUnit> fir_units(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) coeff_units[static_cast<size_t>(j)].id = j;
    for (int j = 0; j < n; ++j) fir_units[static_cast<size_t>(j)].id = j;

    // Per-slot recurrence registers and the one-cycle pipe into the fir stage.
    std::vector<double> t_prev(static_cast<size_t>(n), 0.0);
    std::vector<double> t_prevprev(static_cast<size_t>(n), 0.0);
    std::vector<double> tbar_pipe(static_cast<size_t>(n), 0.0);

    auto& c = trace.coefficients;

    for (long t = 0; t <= t_end; ++t) {
        StageCycleRecord rc{t, Stage::coeff, 0, std::vector<UnitActivity>(static_cast<size_t>(n)),
                            MuxState::none};
        StageCycleRecord rp{t, Stage::poly, 0, std::vector<UnitActivity>(static_cast<size_t>(n)),
                            MuxState::none};
        StageCycleRecord rf{t, Stage::fir, 0, std::vector<UnitActivity>(static_cast<size_t>(n)),
                            MuxState::none};

        // --- fir stage first: it consumes the Tbar value pipelined out of the
        // poly stage on the previous cycle.
        for (int q = 0; q < q_count; ++q) {
            const long start = n + q + 1;  // first fir cycle of query q
            if (t < start || t > start + n - 1) continue;
            const int i = static_cast<int>(t - start);  // index of the term folded in
            const int slot = q % n;
            auto& unit = fir_units[static_cast<size_t>(slot)];
            const double term = c[static_cast<size_t>(i)] * tbar_pipe[static_cast<size_t>(slot)];
            unit.state = (i == 0) ? term : unit.state + term;
            unit.busy_this_cycle = true;
            rf.units[static_cast<size_t>(slot)] = {true, 1, MuxState::none};
            rf.ops_issued += 1;
            trace.dependences.push_back({t - 1, t});      // Tbar_i from the poly pass
            trace.dependences.push_back({n - 1L, t});     // c_i, final after the input phase
            if (i > 0) trace.dependences.push_back({t - 1, t});  // running accumulation
            if (i == n - 1) {
                trace.outputs.emplace_back(query_points[static_cast<size_t>(q)], unit.state);
                trace.ports.push_back({t, PortEvent::Kind::result_out, q});
            }
        }

        // --- coefficient stage: one sample per cycle, broadcast to all rows.
        if (t < n) {
            const int k = static_cast<int>(t);
            trace.ports.push_back({t, PortEvent::Kind::sample_in, k});
            trace.sample_reads.push_back({t, k});
            for (int j = 0; j < n; ++j) {
                c[static_cast<size_t>(j)] +=
                    C.entries[static_cast<size_t>(j)][static_cast<size_t>(k)] *
                    samples[static_cast<size_t>(k)];
                coeff_units[static_cast<size_t>(j)].busy_this_cycle = true;
                rc.units[static_cast<size_t>(j)] = {true, 1, MuxState::none};
                if (k > 0) trace.dependences.push_back({t - 1, t});  // accumulator carry
            }
            rc.ops_issued = n;
        }

        // --- poly stage: staggered n-cycle passes, one Tbar per cycle.
        for (int q = 0; q < q_count; ++q) {
            const long start = n + q;
            if (t < start || t > start + n - 1) continue;
            const int i = static_cast<int>(t - start);  // Tbar index produced this cycle
            const int slot = q % n;
            const double x = query_points[static_cast<size_t>(q)];
            MuxState mux;
            double out;
            if (i == 0) {
                trace.ports.push_back({t, PortEvent::Kind::query_in, q});
                t_prevprev[static_cast<size_t>(slot)] = 1.0;  // raw T_0 kept for the recurrence
                out = kInvSqrt2 * 1.0;
                mux = MuxState::load_t0;
            } else if (i == 1) {
                t_prev[static_cast<size_t>(slot)] = x * 1.0;
                out = t_prev[static_cast<size_t>(slot)];
                mux = MuxState::load_t1;
                trace.dependences.push_back({start, t});
            } else {
                const double next = 2.0 * x * t_prev[static_cast<size_t>(slot)] -
                                    t_prevprev[static_cast<size_t>(slot)];
                t_prevprev[static_cast<size_t>(slot)] = t_prev[static_cast<size_t>(slot)];
                t_prev[static_cast<size_t>(slot)] = next;
                out = next;
                mux = MuxState::iir;
                trace.dependences.push_back({t - 1, t});
                trace.dependences.push_back({t - 2, t});
            }
            tbar_pipe[static_cast<size_t>(slot)] = out;
            rp.units[static_cast<size_t>(slot)] = {true, 1, mux};
            rp.ops_issued += 1;
            if (i == 0) rp.mux_state = MuxState::load_t0;
        }
        if (rp.mux_state == MuxState::none && rp.ops_issued > 0) {
            bool any_t1 = false;
            for (const auto& u : rp.units) any_t1 = any_t1 || (u.busy && u.mux == MuxState::load_t1);
            rp.mux_state = any_t1 ? MuxState::load_t1 : MuxState::iir;
        }

        trace.records.push_back(std::move(rc));
        trace.records.push_back(std::move(rp));
        trace.records.push_back(std::move(rf));
    }

    long first_in = -1;
    long first_out = -1;
    for (const auto& p : trace.ports) {
        if (p.kind == PortEvent::Kind::sample_in && (first_in < 0 || p.cycle < first_in))
            first_in = p.cycle;
        if (p.kind == PortEvent::Kind::result_out && (first_out < 0 || p.cycle < first_out))
            first_out = p.cycle;
    }
    trace.latency_cycles = first_out - first_in;
    return trace;
}

/// Peak per-cycle operation count of one stage; some comparison entries are
/// qualitative (precomputed tables) rather than plain counts.
struct StageOps {
    int count = 0;
    bool has_count = true;
    bool stored = false;       // values precomputed and held in memory
    bool lower_bound = false;  // count is a strict lower bound (">count")

    [[nodiscard]] static StageOps exact(int c) { return {c, true, false, false}; }
    [[nodiscard]] static StageOps stored_table() { return {0, false, true, false}; }
    [[nodiscard]] static StageOps more_than_stored(int c) { return {c, true, true, true}; }

    [[nodiscard]] std::string to_string() const {
        if (!has_count) return "stored";
        std::string s = (lower_bound ? ">" : "") + std::to_string(count);
        if (stored) s += ", stored";
        return s;
    }

    [[nodiscard]] bool operator==(const StageOps&) const = default;
};

struct ArchMetrics {
    Architecture architecture = Architecture::proposed;
    Buffering buffering = Buffering::none;
    IoType io_type = IoType::word_serial;
    StageOps peak_ops_coeff;
    StageOps peak_ops_poly;
    StageOps peak_ops_fir;
    long latency = 0;
    double hue_percent = 0.0;
};

/// Metrics of a simulated run. Utilization is accounted against steady-state
/// back-to-back operation: with Q queries per window of n samples a new
/// window starts every max(n, Q) cycles, so the available unit-cycles per
/// window are 3n * max(n, Q); the pipeline fill and drain of a lone window
/// are exactly the overlap with its neighbours and are not charged.
[[nodiscard]] inline ArchMetrics compute_metrics(const SystolicTrace& trace,
                                                 const SystolicConfig& config) {
    config.validate();
    const int n = config.window_size;
    int peak_coeff = 0;
    int peak_poly = 0;
    int peak_fir = 0;
    long busy_total = 0;
    for (const auto& r : trace.records) {
        for (const auto& u : r.units) busy_total += u.busy ? 1 : 0;
        switch (r.stage) {
            case Stage::coeff: peak_coeff = std::max(peak_coeff, r.ops_issued); break;
            case Stage::poly: peak_poly = std::max(peak_poly, r.ops_issued); break;
            case Stage::fir: peak_fir = std::max(peak_fir, r.ops_issued); break;
        }
    }
    const long q_count = static_cast<long>(trace.outputs.size());
    const long available = 3L * n * std::max<long>(n, q_count);
    ArchMetrics m;
    m.architecture = Architecture::proposed;
    m.buffering = Buffering::none;
    m.io_type = IoType::word_serial;
    m.peak_ops_coeff = StageOps::exact(peak_coeff);
    m.peak_ops_poly = StageOps::exact(peak_poly);
    m.peak_ops_fir = StageOps::exact(peak_fir);
    m.latency = trace.latency_cycles;
    m.hue_percent = available > 0 ? 100.0 * static_cast<double>(busy_total) / available : 0.0;
    return m;
}

/// Closed-form comparison numbers for the two word-parallel reference
/// architectures; no simulation behind them. The time-domain variant
/// precomputes the cardinal-function table (more than one op per output
/// value per cycle, or a stored table), the transform-domain variant stores
/// the polynomial values at its fixed output nodes.
[[nodiscard]] inline ArchMetrics analytic_metrics(Architecture architecture, int window_size) {
    if (window_size < 1) throw std::invalid_argument("window_size: must be >= 1");
    ArchMetrics m;
    m.architecture = architecture;
    m.io_type = IoType::word_parallel;
    m.latency = 2L * window_size;
    m.hue_percent = 100.0;
    switch (architecture) {
        case Architecture::zhu_time:
            m.buffering = Buffering::samples_and_T;
            m.peak_ops_coeff = StageOps::more_than_stored(window_size);
            m.peak_ops_poly = StageOps::exact(0);
            m.peak_ops_fir = StageOps::exact(window_size);
            break;
        case Architecture::zhu_transform:
            m.buffering = Buffering::T_only;
            m.peak_ops_coeff = StageOps::exact(window_size);
            m.peak_ops_poly = StageOps::stored_table();
            m.peak_ops_fir = StageOps::exact(window_size);
            break;
        default:
            throw std::invalid_argument(
                "architecture: analytic metrics cover zhu_time and zhu_transform; the proposed "
                "datapath is simulated (simulate_window + compute_metrics)");
    }
    return m;
}

}  // namespace chebint::systolic

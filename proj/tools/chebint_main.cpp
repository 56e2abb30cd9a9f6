// Command-line experiment runner: exposes the interpolation core, the error
// benchmarks, the datapath simulator and the hybrid-ADC power model as
// subcommands emitting plot-ready CSV and structured JSON.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <chebint/adc.hpp>
#include <chebint/bench.hpp>
#include <chebint/chebyshev.hpp>
#include <chebint/dct.hpp>
#include <chebint/interpolate.hpp>
#include <chebint/io.hpp>
#include <chebint/repro.hpp>
#include <chebint/signal.hpp>
#include <chebint/systolic.hpp>

namespace {

using namespace chebint;

std::vector<double> parse_number_list(const std::string& text, const std::string& field) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument(field + ": '" + item + "' is not a number");
        }
    }
    if (out.empty()) throw std::invalid_argument(field + ": empty list");
    return out;
}

/// Signal descriptors: harmonic | damped | constant:V | poly:c0,c1,... |
/// harmonics:a1,w1,a2,w2,... | dampedsine:decay,omega
SignalSpec parse_signal(const std::string& desc) {
    if (desc == "harmonic") return SignalSpec::harmonic();
    if (desc == "damped") return SignalSpec::damped();
    const auto colon = desc.find(':');
    const std::string head = desc.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : desc.substr(colon + 1);
    if (head == "constant") {
        const auto v = parse_number_list(args, "signal");
        if (v.size() != 1) throw std::invalid_argument("signal: constant takes one value");
        return SignalSpec::constant(v[0]);
    }
    if (head == "poly") {
        return SignalSpec::polynomial(parse_number_list(args, "signal"));
    }
    if (head == "harmonics") {
        const auto v = parse_number_list(args, "signal");
        if (v.size() % 2 != 0) {
            throw std::invalid_argument("signal: harmonics takes amplitude,frequency pairs");
        }
        HarmonicSum h;
        for (size_t i = 0; i < v.size(); i += 2) h.terms.emplace_back(v[i], v[i + 1]);
        return {h, "harmonics"};
    }
    if (head == "dampedsine") {
        const auto v = parse_number_list(args, "signal");
        if (v.size() != 2) throw std::invalid_argument("signal: dampedsine takes decay,omega");
        return {DampedSine{v[0], v[1]}, "dampedsine"};
    }
    throw std::invalid_argument("signal: unknown descriptor '" + desc +
                                "' (harmonic, damped, constant:V, poly:c0,c1,..., "
                                "harmonics:a,w,..., dampedsine:decay,omega)");
}

Interval make_interval(const std::vector<double>& bounds) {
    return Interval(bounds.at(0), bounds.at(1));
}

/// Relative output paths land in $CHEBINT_OUT_DIR when it is set.
std::filesystem::path out_path(const std::string& p) {
    std::filesystem::path path(p);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("CHEBINT_OUT_DIR")) path = std::filesystem::path(dir) / path;
    }
    return path;
}

void write_output(const std::string& file, const std::string& content) {
    if (file.empty()) {
        std::cout << content;
        return;
    }
    const auto path = out_path(file);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("out: cannot open '" + path.string() + "' for writing");
    os << content;
}

std::string json_text(const io::json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- nodes ---

struct NodesArgs {
    int degree = 7;
    std::vector<double> interval{-1.0, 1.0};
    std::string signal;
    std::string out;
};

int run_nodes(const NodesArgs& a) {
    const ChebyshevWindow window = cheb_nodes(a.degree, make_interval(a.interval));
    if (a.signal.empty()) {
        write_output(a.out, json_text(io::to_json(window)));
        return 0;
    }
    const SignalSpec f = parse_signal(a.signal);
    std::vector<double> samples;
    samples.reserve(window.nodes.size());
    for (const double x : window.nodes) samples.push_back(f(x));
    write_output(a.out, json_text(io::to_json(compute_coeffs(samples, window))));
    return 0;
}

// -------------------------------------------------------------- compare ---

struct CompareArgs {
    std::string signal = "harmonic";
    std::vector<double> interval{-1.0, 1.0};
    int n = 8;
    int n_min = 4;
    int n_max = 16;
    int grid_density = 2001;
    double target_percent = 0.0;
    int jobs = 1;
    std::string out;
};

int run_compare(const CompareArgs& a) {
    if (a.n_min < 2) throw std::invalid_argument("n-min: must be >= 2");
    if (a.n_max < a.n_min) throw std::invalid_argument("n-max: must be >= n-min");
    if (a.jobs < 1) throw std::invalid_argument("jobs: must be >= 1");
    const SignalSpec f = parse_signal(a.signal);
    const Interval iv = make_interval(a.interval);

    struct Row {
        int n;
        bench::ErrorReport cheb;
        bench::ErrorReport equi;
    };
    const int count = a.n_max - a.n_min + 1;
    std::vector<Row> rows(static_cast<size_t>(count));
    auto compute_row = [&](int idx) {
        const int n = a.n_min + idx;
        rows[static_cast<size_t>(idx)] = {
            n, bench::measure_error(f, bench::Scheme::chebyshev, n, iv, a.grid_density),
            bench::measure_error(f, bench::Scheme::equispaced, n, iv, a.grid_density)};
    };
    if (a.jobs == 1) {
        for (int i = 0; i < count; ++i) compute_row(i);
    } else {
        // sweep points are independent; results land at their index, so the
        // output order never depends on scheduling
        std::vector<std::future<void>> futures;
        std::atomic<int> next{0};
        const int workers = std::min(a.jobs, count);
        for (int wkr = 0; wkr < workers; ++wkr) {
            futures.push_back(std::async(std::launch::async, [&]() {
                for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) compute_row(i);
            }));
        }
        for (auto& fu : futures) fu.get();
    }

    std::string csv = std::string(io::kErrorCsvHeader) + "\n";
    for (const auto& row : rows) {
        csv += io::error_csv_row(f.name(), row.cheb, row.n) + "\n";
        csv += io::error_csv_row(f.name(), row.equi, row.n) + "\n";
    }
    write_output(a.out, csv);

    std::ostream& info = a.out.empty() ? std::cerr : std::cout;
    if (a.n >= a.n_min && a.n <= a.n_max) {
        const auto& row = rows[static_cast<size_t>(a.n - a.n_min)];
        info << "error ratio at n=" << a.n << " (equispaced/chebyshev): "
             << io::fmt(row.equi.relative_error_percent / row.cheb.relative_error_percent) << "\n";
    } else {
        const auto cheb = bench::measure_error(f, bench::Scheme::chebyshev, a.n, iv, a.grid_density);
        const auto equi = bench::measure_error(f, bench::Scheme::equispaced, a.n, iv, a.grid_density);
        info << "error ratio at n=" << a.n << " (equispaced/chebyshev): "
             << io::fmt(equi.relative_error_percent / cheb.relative_error_percent) << "\n";
    }
    if (a.target_percent > 0.0) {
        for (const auto scheme : {bench::Scheme::chebyshev, bench::Scheme::equispaced}) {
            const auto mp =
                bench::min_points_for_error(f, scheme, a.target_percent, iv, a.n_max, a.grid_density);
            if (mp.reached) {
                info << "min points for <" << io::fmt(a.target_percent) << "% ("
                     << bench::to_string(scheme) << "): " << mp.n_points << "\n";
            } else {
                info << "min points for <" << io::fmt(a.target_percent) << "% ("
                     << bench::to_string(scheme) << "): not reached within n_max=" << a.n_max
                     << "\n";
            }
        }
    }
    return 0;
}

// ------------------------------------------------------------- systolic ---

struct SystolicArgs {
    std::string arch = "proposed";
    int window = 8;
    std::string signal = "harmonic";
    std::vector<double> interval{-1.0, 1.0};
    std::string queries;
    int num_queries = 0;  // 0 -> window size
    std::string trace_out;
    std::string metrics_out;
    std::string outputs_out;
};

int run_systolic(const SystolicArgs& a) {
    const auto arch = systolic::parse_architecture(a.arch);
    if (arch != systolic::Architecture::proposed) {
        if (!a.trace_out.empty() || !a.outputs_out.empty()) {
            throw std::invalid_argument(
                "arch: trace/outputs exist only for the simulated proposed datapath");
        }
        write_output(a.metrics_out, json_text(io::to_json(systolic::analytic_metrics(arch, a.window))));
        return 0;
    }

    const SignalSpec f = parse_signal(a.signal);
    const Interval iv = make_interval(a.interval);
    const ChebyshevWindow window = cheb_nodes(a.window - 1, iv);
    std::vector<double> samples;
    samples.reserve(window.nodes.size());
    for (const double x : window.nodes) samples.push_back(f(x));

    std::vector<double> queries_physical;
    if (!a.queries.empty()) {
        queries_physical = parse_number_list(a.queries, "queries");
    } else {
        const int q = a.num_queries > 0 ? a.num_queries : a.window;
        queries_physical.resize(static_cast<size_t>(q));
        for (int i = 0; i < q; ++i) {
            queries_physical[static_cast<size_t>(i)] = iv.lo + (i + 0.5) * iv.width() / q;
        }
    }
    // the datapath runs on the canonical abscissa
    std::vector<double> queries_unit;
    queries_unit.reserve(queries_physical.size());
    for (const double x : queries_physical) queries_unit.push_back(iv.to_unit(x));

    const auto cfg = systolic::SystolicConfig::proposed(a.window);
    auto trace = systolic::simulate_window(samples, queries_unit, cfg);
    for (size_t i = 0; i < trace.outputs.size(); ++i) {
        trace.outputs[i].first = queries_physical[i];  // report physical coordinates
    }

    if (!a.trace_out.empty()) write_output(a.trace_out, io::trace_csv(trace));
    if (!a.outputs_out.empty()) {
        std::string csv = "query_x,value\n";
        for (const auto& [x, v] : trace.outputs) csv += io::fmt(x) + "," + io::fmt(v) + "\n";
        write_output(a.outputs_out, csv);
    }
    write_output(a.metrics_out, json_text(io::to_json(systolic::compute_metrics(trace, cfg))));
    return 0;
}

// ---------------------------------------------------------------- power ---

struct PowerArgs {
    int bits = 8;
    double t_sar = 2.0;
    int degree = 7;
    std::string policy = "both_adjacent";
    int baseline_points = 0;       // 0 -> derive or default
    double target_percent = 0.0;   // >0 -> derive baseline from the error target
    std::string signal = "harmonic";
    std::vector<double> interval{-1.0, 1.0};
    int n_max = 20;
    std::string out;
};

int run_power(const PowerArgs& a) {
    const auto timeline = adc::build_timeline(a.degree);
    const auto split = adc::split_samples(timeline, a.t_sar, adc::parse_policy(a.policy));

    int baseline_points = a.baseline_points;
    if (baseline_points <= 0) {
        if (a.target_percent > 0.0) {
            const auto mp = bench::min_points_for_error(parse_signal(a.signal),
                                                        bench::Scheme::equispaced, a.target_percent,
                                                        make_interval(a.interval), a.n_max);
            if (!mp.reached) {
                throw std::invalid_argument("target-percent: <" + io::fmt(a.target_percent) +
                                            "% not reached by the equispaced baseline within "
                                            "n-max=" + std::to_string(a.n_max));
            }
            baseline_points = mp.n_points;
        } else {
            baseline_points = 10;  // published equispaced count for the default setup
        }
    }

    const auto report = adc::power_report(split, a.bits, baseline_points);
    write_output(a.out, json_text(io::to_json(report, split)));
    return 0;
}

// ---------------------------------------------------------------- repro ---

int run_repro(bool as_json) {
    const auto results = repro::run_checks();
    bool all_passed = true;
    if (as_json) {
        io::json arr = io::json::array();
        for (const auto& r : results) {
            all_passed = all_passed && r.passed;
            arr.push_back({{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"expected", r.expected},
                           {"actual", r.actual}});
        }
        std::cout << json_text({{"all_passed", all_passed}, {"checks", arr}});
    } else {
        for (const auto& r : results) {
            all_passed = all_passed && r.passed;
            std::cout << "[" << r.id << "/" << results.size() << "] "
                      << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "\n";
            if (!r.passed) {
                std::cout << "      expected: " << r.expected << "\n";
                std::cout << "      actual:   " << r.actual << "\n";
            }
        }
        std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev interpolation toolkit: transform-domain interpolation, "
                 "equispaced-baseline error benchmarks, a cycle-accurate word-serial "
                 "datapath simulator and a flash/SAR hybrid-ADC power model"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file (subcommand.option=value)");

    NodesArgs na;
    auto* nodes = app.add_subcommand("nodes", "emit a sampling window (and optional coefficients) as JSON");
    nodes->add_option("--degree", na.degree, "polynomial degree N (N+1 nodes)")
        ->check(CLI::NonNegativeNumber);
    nodes->add_option("--interval", na.interval, "interval lo hi")->expected(2);
    nodes->add_option("--signal", na.signal, "sample this signal and include coefficients");
    nodes->add_option("--out", na.out, "output file (stdout when omitted)");

    CompareArgs ca;
    auto* compare = app.add_subcommand("compare", "error sweep of both sampling schemes as CSV");
    compare->add_option("--signal", ca.signal, "signal descriptor");
    compare->add_option("--interval", ca.interval, "interval lo hi")->expected(2);
    compare->add_option("--n", ca.n, "point count for the ratio summary");
    compare->add_option("--n-min", ca.n_min, "sweep start");
    compare->add_option("--n-max", ca.n_max, "sweep end");
    compare->add_option("--grid-density", ca.grid_density, "evaluation grid points");
    compare->add_option("--target-percent", ca.target_percent,
                        "also report min points reaching this relative error");
    compare->add_option("--jobs", ca.jobs, "parallel workers for the sweep");
    compare->add_option("--out", ca.out, "CSV file (stdout when omitted)");

    SystolicArgs sa;
    auto* syst = app.add_subcommand("systolic", "simulate the word-serial datapath / tabulate references");
    syst->add_option("--arch", sa.arch, "proposed | zhu_time | zhu_transform");
    syst->add_option("--window", sa.window, "samples per window")->check(CLI::PositiveNumber);
    syst->add_option("--signal", sa.signal, "signal descriptor");
    syst->add_option("--interval", sa.interval, "interval lo hi")->expected(2);
    syst->add_option("--queries", sa.queries, "comma-separated query points");
    syst->add_option("--num-queries", sa.num_queries, "evenly spaced query count (default window)")
        ->check(CLI::NonNegativeNumber);
    syst->add_option("--trace-out", sa.trace_out, "per-cycle activity CSV");
    syst->add_option("--metrics-out", sa.metrics_out, "metrics JSON (stdout when omitted)");
    syst->add_option("--outputs-out", sa.outputs_out, "interpolated outputs CSV");

    PowerArgs pa;
    auto* power = app.add_subcommand("power", "hybrid flash/SAR power report as JSON");
    power->add_option("--bits", pa.bits, "converter resolution");
    power->add_option("--t-sar", pa.t_sar, "SAR sample+conversion time in flash periods");
    power->add_option("--degree", pa.degree, "window degree N (N+1 samples)");
    power->add_option("--policy", pa.policy,
                      "both_adjacent | preceding_gap_only | greedy_nonoverlap");
    power->add_option("--baseline-points", pa.baseline_points,
                      "equispaced flash-only sample count (default 10)");
    power->add_option("--target-percent", pa.target_percent,
                      "derive the baseline count from this error target");
    power->add_option("--signal", pa.signal, "signal for the derived baseline");
    power->add_option("--interval", pa.interval, "interval lo hi")->expected(2);
    power->add_option("--n-max", pa.n_max, "scan limit for the derived baseline");
    power->add_option("--out", pa.out, "output file (stdout when omitted)");

    bool repro_json = false;
    auto* repro_cmd = app.add_subcommand("repro", "run the full reproduction checklist");
    repro_cmd->add_flag("--json", repro_json, "machine-readable result object");

    try {
        app.parse(argc, argv);
        if (nodes->parsed()) return run_nodes(na);
        if (compare->parsed()) return run_compare(ca);
        if (syst->parsed()) return run_systolic(sa);
        if (power->parsed()) return run_power(pa);
        if (repro_cmd->parsed()) return run_repro(repro_json);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

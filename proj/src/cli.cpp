#include "steerscope/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "steerscope/errors.hpp"
#include "steerscope/monogamy.hpp"
#include "steerscope/optimizer.hpp"
#include "steerscope/parallel.hpp"
#include "steerscope/state_io.hpp"

namespace steerscope::cli {

namespace {

using nlohmann::json;

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json mat_json(const RealMatrix3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) rows.push_back(json::array({m(i, 0), m(i, 1), m(i, 2)}));
    return rows;
}

json config_json(const MeasurementConfiguration& c) {
    return {{"a_hat", vec_json(c.a_hat)},
            {"a_prime_hat", vec_json(c.a_prime_hat)},
            {"b_hat", vec_json(c.b_hat)},
            {"b_prime_hat", vec_json(c.b_prime_hat)}};
}

json monogamy_json(const MonogamyReport& r) {
    return {{"s_ba_max", r.s_ba_max}, {"s_ca_max", r.s_ca_max}, {"lhs", r.lhs},
            {"bound", r.bound},       {"slack", r.slack},       {"saturated", r.saturated}};
}

// Output sink: --out file if given, otherwise the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) throw ParseError("cannot write " + path);
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }
    void finish() {
        stream_->flush();
        if (!*stream_) throw ParseError("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

struct CommonFlags {
    std::string input;
    std::string out;
    std::string direction = "btoa";
    std::string kind;
    std::string format = "json";
    std::string criterion = "cffw";
    std::optional<std::uint64_t> seed;
    std::size_t samples = 0;
    std::optional<double> tolerance;
    bool repair = false;
};

ValidationOptions validation_options(const CommonFlags& f) {
    ValidationOptions opts;
    opts.repair = f.repair;
    return opts;
}

EnsembleSpec scan_spec(const CommonFlags& f) {
    if (f.kind.empty()) throw InvalidInput("--kind is required");
    if (!f.seed) throw InvalidInput("--seed is required for sampling");
    if (f.samples < 1) throw InvalidInput("--samples must be at least 1");
    return {parse_ensemble_kind(f.kind), f.samples, *f.seed};
}

int cmd_analyze(const CommonFlags& f, std::ostream& out) {
    const ParsedState parsed = read_state_file(f.input);
    if (parsed.n_qubits != 2) throw ValidationError(Invariant::Dimension, static_cast<double>(parsed.matrix.dim()));
    const auto state = TwoQubitState::from_matrix(parsed.matrix, validation_options(f));

    AnalyzeOptions opts;
    opts.direction = parse_direction(f.direction);
    opts.seed = f.seed.value_or(0);
    if (f.tolerance) opts.tolerance = *f.tolerance;
    const json report = analyze_report(state, opts);

    Sink sink(f.out, out);
    sink.stream() << report.dump(2) << '\n';
    sink.finish();
    return report["steering"]["violates"].get<bool>() ? kSteerable : kOk;
}

int cmd_werner_threshold(const CommonFlags& f, std::ostream& out) {
    ThresholdCriterion criterion;
    if (f.criterion == "cffw") {
        criterion = ThresholdCriterion::Cffw;
    } else if (f.criterion == "chsh") {
        criterion = ThresholdCriterion::Chsh;
    } else {
        throw InvalidInput("--criterion must be cffw or chsh");
    }
    const double p = werner_threshold(criterion, f.tolerance.value_or(1e-12));
    Sink sink(f.out, out);
    sink.stream() << "{\"criterion\": \"" << f.criterion << "\", \"p_star\": " << format_real(p) << "}\n";
    sink.finish();
    return kOk;
}

int cmd_monogamy(const CommonFlags& f, std::ostream& out) {
    if (!f.input.empty()) {
        const ParsedState parsed = read_state_file(f.input);
        if (parsed.n_qubits != 3) throw ValidationError(Invariant::Dimension, static_cast<double>(parsed.matrix.dim()));
        const auto state = ThreeQubitState::from_matrix(parsed.matrix, validation_options(f));
        const MonogamyReport r = monogamy_check(state);
        json report = monogamy_json(r);
        report["input_digest"] = matrix_digest(state.matrix());
        for (auto [pair, name] : {std::pair{Pair::AB, "AB"}, std::pair{Pair::AC, "AC"}}) {
            const TraceFormula tf = trace_formula(state, pair);
            report["trace_formula"][name] = {{"two_sqrt_trace", tf.two_sqrt_trace},
                                             {"two_sqrt_vv", tf.two_sqrt_vv}};
        }
        Sink sink(f.out, out);
        sink.stream() << report.dump(2) << '\n';
        sink.finish();
        return r.lhs > kMonogamyBound + kViolationTolerance ? kMonogamyViolation : kOk;
    }

    const EnsembleSpec spec = scan_spec(f);
    if (qubit_count(spec.kind) != 3) throw InvalidInput("monogamy scans need a three-qubit ensemble kind");
    const MonogamyScanSummary summary = monogamy_scan(spec, thread_cap_from_env());

    Sink sink(f.out, out);
    if (f.format == "csv") {
        sink.stream() << kThreeQubitCsvHeader << '\n';
        for (const auto& row : summary.rows) {
            sink.stream() << row.index << ',' << format_real(row.report.s_ba_max) << ','
                          << format_real(row.report.s_ca_max) << ',' << format_real(row.report.lhs)
                          << ',' << format_real(row.report.slack) << '\n';
        }
    } else {
        const json report = {{"kind", std::string(to_string(spec.kind))},
                             {"seed", spec.seed},
                             {"samples", summary.samples},
                             {"max_lhs", summary.max_lhs},
                             {"violations", summary.violations},
                             {"exclusivity_violations", summary.exclusivity_violations},
                             {"argmax_index", summary.argmax_index},
                             {"argmax_state_digest", summary.argmax_state_digest}};
        sink.stream() << report.dump(2) << '\n';
    }
    sink.finish();
    return summary.violations > 0 ? kMonogamyViolation : kOk;
}

int cmd_sample(const CommonFlags& f, std::ostream& out) {
    const EnsembleSpec spec = scan_spec(f);
    if (f.format != "json" && f.format != "csv") throw InvalidInput("--format must be json or csv");
    const bool two_qubit = qubit_count(spec.kind) == 2;

    // Rows are computed (possibly in parallel) and emitted in index order.
    const auto rows = parallel_map<std::string>(spec.count, thread_cap_from_env(), [&](std::size_t i) {
        const AnyState state = sample_state(spec.kind, spec.seed, i);
        const ComplexMatrix& m =
            two_qubit ? std::get<TwoQubitState>(state).matrix() : std::get<ThreeQubitState>(state).matrix();
        if (f.format == "json") return state_to_json(m).dump();
        std::ostringstream line;
        line << i << ',';
        if (two_qubit) {
            const auto res = steering_criterion(std::get<TwoQubitState>(state));
            line << format_real(res.s_rho) << ',' << format_real(res.v + res.v_tilde) << ','
                 << (res.violates ? "true" : "false");
        } else {
            const auto r = monogamy_check(std::get<ThreeQubitState>(state));
            line << format_real(r.s_ba_max) << ',' << format_real(r.s_ca_max) << ','
                 << format_real(r.lhs) << ',' << format_real(r.slack);
        }
        return line.str();
    });

    Sink sink(f.out, out);
    if (f.format == "csv") sink.stream() << (two_qubit ? kTwoQubitCsvHeader : kThreeQubitCsvHeader) << '\n';
    for (const auto& row : rows) sink.stream() << row << '\n';
    sink.finish();
    return kOk;
}

}  // namespace

json analyze_report(const TwoQubitState& state, const AnalyzeOptions& options) {
    const BlochDecomposition d = decompose(state);
    const SteeringCriterionResult crit = steering_criterion(d);

    OptimizationSettings settings;
    settings.seed = options.seed;
    settings.tolerance = options.tolerance;
    settings.restarts = options.restarts;

    json report;
    report["input_digest"] = matrix_digest(state.matrix());
    report["seed"] = options.seed;
    report["bloch"] = {{"r", vec_json(d.r)}, {"s", vec_json(d.s)}, {"T", mat_json(d.t)}};
    report["steering"] = {{"v", crit.v},
                          {"v_tilde", crit.v_tilde},
                          {"S", crit.s_rho},
                          {"max_cffw", crit.max_cffw},
                          {"violates", crit.violates}};
    report["horodecki_M"] = crit.v + crit.v_tilde;
    report["direction"] = std::string(to_string(options.direction));

    double values[2] = {0.0, 0.0};
    for (Direction dir : {Direction::BtoA, Direction::AtoB}) {
        const OptimalMeasurements opt = optimal_measurements(d, dir);
        const double achieved = cffw_value(d, opt.config, dir);
        const NumericMaximum numeric = maximize_cffw_numeric(d, dir, settings);
        values[dir == Direction::BtoA ? 0 : 1] = achieved;

        json entry = {{"closed_form", crit.max_cffw},
                      {"analytic_value", achieved},
                      {"optimal_configuration", config_json(opt.config)},
                      {"frame",
                       {{"c_hat", vec_json(opt.frame.c_hat)},
                        {"c_prime_hat", vec_json(opt.frame.c_prime_hat)},
                        {"theta", opt.frame.theta}}},
                      {"numeric_value", numeric.value},
                      {"oracle_gap", std::abs(numeric.value - crit.max_cffw)},
                      {"numeric_converged", numeric.converged}};
        if (dir == options.direction) {
            report["optimal_configuration"] = entry["optimal_configuration"];
            report["optimal_configuration"]["theta"] = opt.frame.theta;
            report["numeric_oracle"] = {{"value", numeric.value}, {"gap", entry["oracle_gap"]}};
        }
        report["directions"][std::string(to_string(dir))] = std::move(entry);
    }
    report["two_way_symmetric"] = std::abs(values[0] - values[1]) <= 1e-9;
    return report;
}

double werner_threshold(ThresholdCriterion criterion, double tolerance) {
    if (!(tolerance > 0.0)) throw InvalidInput("werner_threshold: tolerance must be positive");
    auto excess = [criterion](double p) {
        const auto res = steering_criterion(werner(p));
        return criterion == ThresholdCriterion::Cffw ? res.s_rho - 1.0 : (res.v + res.v_tilde) - 1.0;
    };
    double lo = 0.0, hi = 1.0;
    if (!(excess(lo) < 0.0 && excess(hi) > 0.0)) throw InvalidInput("werner_threshold: bracket invalid");
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (excess(mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-qubit CFFW steering analysis and steering monogamy checks", "steerscope"};
    app.require_subcommand(1);
    CommonFlags f;

    auto* analyze = app.add_subcommand("analyze", "Analyze a two-qubit state file");
    analyze->add_option("--input", f.input, "State JSON file")->required();
    analyze->add_option("--direction", f.direction, "Primary direction: btoa or atob");
    analyze->add_option("--seed", f.seed, "Seed for the numeric oracle (default 0)");
    analyze->add_option("--tolerance", f.tolerance, "Numeric oracle simplex tolerance");
    analyze->add_flag("--repair", f.repair, "Clamp small negative eigenvalues instead of rejecting");
    analyze->add_option("--out", f.out, "Write the report here instead of stdout");
    analyze->add_option("--format", f.format, "Only json is supported");

    auto* threshold = app.add_subcommand("werner-threshold", "Bisect the Werner steering threshold");
    threshold->add_option("--criterion", f.criterion, "cffw (S = 1) or chsh (M = 1)");
    threshold->add_option("--tolerance", f.tolerance, "Bisection bracket width");
    threshold->add_option("--out", f.out, "Output file");

    auto* monogamy = app.add_subcommand("monogamy", "Check S_BA^2 + S_CA^2 <= 8");
    auto* input_opt = monogamy->add_option("--input", f.input, "Three-qubit state JSON file");
    auto* scan_opt = monogamy->add_option("--scan,--kind", f.kind, "Scan an ensemble of this kind");
    input_opt->excludes(scan_opt);
    monogamy->add_option("--samples", f.samples, "Number of samples");
    monogamy->add_option("--seed", f.seed, "Ensemble seed (required for scans)");
    monogamy->add_option("--format", f.format, "json or csv");
    monogamy->add_flag("--repair", f.repair, "Clamp small negative eigenvalues instead of rejecting");
    monogamy->add_option("--out", f.out, "Output file");

    auto* sample = app.add_subcommand("sample", "Sample a state ensemble");
    sample->add_option("--kind", f.kind, "Ensemble kind")->required();
    sample->add_option("--samples", f.samples, "Number of samples")->required();
    sample->add_option("--seed", f.seed, "Ensemble seed")->required();
    sample->add_option("--format", f.format, "json (state lines) or csv (analysis rows)");
    sample->add_option("--out", f.out, "Output file");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kIoOrParse;
    }

    try {
        if (analyze->parsed()) {
            if (f.format != "json") throw InvalidInput("analyze only emits json");
            return cmd_analyze(f, out);
        }
        if (threshold->parsed()) return cmd_werner_threshold(f, out);
        if (monogamy->parsed()) {
            if (f.input.empty() && f.kind.empty()) throw InvalidInput("monogamy needs --input or --scan");
            if (f.format != "json" && f.format != "csv") throw InvalidInput("--format must be json or csv");
            return cmd_monogamy(f, out);
        }
        return cmd_sample(f, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidState;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoOrParse;
    }
}

}  // namespace steerscope::cli

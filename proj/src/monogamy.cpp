#include "steerscope/monogamy.hpp"

#include <cmath>
#include <string>

#include "steerscope/errors.hpp"
#include "steerscope/parallel.hpp"
#include "steerscope/steering.hpp"

namespace steerscope {

Pair parse_pair(std::string_view name) {
    if (name == "AB" || name == "ab") return Pair::AB;
    if (name == "AC" || name == "ac") return Pair::AC;
    if (name == "BC" || name == "bc") return Pair::BC;
    throw InvalidInput("unknown party pair: " + std::string(name));
}

TwoQubitState reduced_pair(const ThreeQubitState& state, Pair pair) {
    switch (pair) {
        case Pair::AB: return TwoQubitState::from_matrix(partial_trace(state.matrix(), 3, {0, 1}));
        case Pair::AC: return TwoQubitState::from_matrix(partial_trace(state.matrix(), 3, {0, 2}));
        case Pair::BC: return TwoQubitState::from_matrix(partial_trace(state.matrix(), 3, {1, 2}));
    }
    throw InvalidInput("unknown party pair");
}

ReducedCorrelations reduced_correlations(const ThreeQubitState& state) {
    return {decompose(reduced_pair(state, Pair::AB)).t, decompose(reduced_pair(state, Pair::AC)).t};
}

MonogamyReport monogamy_check(const ThreeQubitState& state) {
    MonogamyReport report;
    // Alice is the first factor of both reduced states, so BtoA is the
    // direction with Alice as the steered party in each.
    report.s_ba_max = steering_criterion(reduced_pair(state, Pair::AB)).max_cffw;
    report.s_ca_max = steering_criterion(reduced_pair(state, Pair::AC)).max_cffw;
    report.lhs = report.s_ba_max * report.s_ba_max + report.s_ca_max * report.s_ca_max;
    report.slack = report.bound - report.lhs;
    report.saturated = std::abs(report.slack) <= kSaturationTolerance;
    return report;
}

TraceFormula trace_formula(const ThreeQubitState& state, Pair pair) {
    const auto d = decompose(reduced_pair(state, pair));
    const double tr = trace(d.t * d.t.transposed());
    return {2.0 * std::sqrt(std::max(tr, 0.0)), steering_criterion(d).max_cffw};
}

MonogamyScanSummary monogamy_scan(const EnsembleSpec& spec, unsigned threads) {
    if (qubit_count(spec.kind) != 3) throw InvalidInput("monogamy_scan: ensemble must be three-qubit");
    if (spec.count < 1) throw InvalidInput("monogamy_scan: count must be at least 1");

    struct Evaluated {
        MonogamyReport report;
        std::string digest;
    };
    const auto evaluated = parallel_map<Evaluated>(spec.count, threads, [&](std::size_t i) {
        const auto state = std::get<ThreeQubitState>(sample_state(spec.kind, spec.seed, i));
        return Evaluated{monogamy_check(state), matrix_digest(state.matrix())};
    });

    MonogamyScanSummary summary;
    summary.samples = spec.count;
    summary.max_lhs = -1.0;
    const double exclusive = 2.0 + kViolationTolerance;
    for (std::size_t i = 0; i < evaluated.size(); ++i) {
        const auto& r = evaluated[i].report;
        if (r.lhs > kMonogamyBound + kViolationTolerance) ++summary.violations;
        if (r.s_ba_max > exclusive && r.s_ca_max > exclusive) ++summary.exclusivity_violations;
        if (r.lhs > summary.max_lhs) {
            summary.max_lhs = r.lhs;
            summary.argmax_index = i;
            summary.argmax_state_digest = evaluated[i].digest;
        }
        summary.rows.push_back({i, r});
    }
    return summary;
}

}  // namespace steerscope

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "steerscope/states.hpp"

namespace steerscope {

inline constexpr double kMonogamyBound = 8.0;
inline constexpr double kSaturationTolerance = 1e-9;
inline constexpr double kViolationTolerance = 1e-9;

enum class Pair { AB, AC, BC };

Pair parse_pair(std::string_view name);

TwoQubitState reduced_pair(const ThreeQubitState& state, Pair pair);

struct ReducedCorrelations {
    RealMatrix3 t_ab;
    RealMatrix3 t_ac;
};

ReducedCorrelations reduced_correlations(const ThreeQubitState& state);

struct MonogamyReport {
    double s_ba_max = 0.0;  // Bob steering Alice, from rho_AB
    double s_ca_max = 0.0;  // Charlie steering Alice, from rho_AC
    double lhs = 0.0;
    double bound = kMonogamyBound;
    double slack = 0.0;
    bool saturated = false;
};

MonogamyReport monogamy_check(const ThreeQubitState& state);

struct TraceFormula {
    double two_sqrt_trace = 0.0;  // 2 sqrt(tr T T^t)
    double two_sqrt_vv = 0.0;     // 2 sqrt(v + v~)
};

TraceFormula trace_formula(const ThreeQubitState& state, Pair pair);

struct MonogamyRow {
    std::size_t index = 0;
    MonogamyReport report;
};

struct MonogamyScanSummary {
    std::size_t samples = 0;
    double max_lhs = 0.0;
    std::size_t violations = 0;            // lhs > 8 + 1e-9
    std::size_t exclusivity_violations = 0;  // both s_ba_max and s_ca_max > 2 + 1e-9
    std::size_t argmax_index = 0;
    std::string argmax_state_digest;
    std::vector<MonogamyRow> rows;  // index order
};

// Evaluates the ensemble with up to `threads` workers (0 = hardware
// default). The summary is identical for any thread count.
MonogamyScanSummary monogamy_scan(const EnsembleSpec& spec, unsigned threads = 1);

}  // namespace steerscope

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "steerscope/states.hpp"
#include "steerscope/steering.hpp"

namespace steerscope::cli {

// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kIoOrParse = 1,
    kInvalidState = 2,
    kSteerable = 3,           // analyze only
    kMonogamyViolation = 4,   // monogamy only
};

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct AnalyzeOptions {
    Direction direction = Direction::BtoA;
    std::uint64_t seed = 0;
    double tolerance = 1e-10;  // numeric oracle convergence
    int restarts = 24;
};

// Full analysis report of a two-qubit state (pure function of inputs).
nlohmann::json analyze_report(const TwoQubitState& state, const AnalyzeOptions& options);

enum class ThresholdCriterion { Cffw, Chsh };

// Werner weight p* at which the chosen criterion crosses its bound, found
// by bisection on [0, 1] to the given bracket width.
double werner_threshold(ThresholdCriterion criterion, double tolerance = 1e-12);

// CSV headers for scan output.
inline constexpr const char* kTwoQubitCsvHeader = "index,S,M,violates";
inline constexpr const char* kThreeQubitCsvHeader = "index,s_ba_max,s_ca_max,lhs,slack";

}  // namespace steerscope::cli

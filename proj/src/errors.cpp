#include "steerscope/errors.hpp"

#include <cstdio>

namespace steerscope {

const char* to_string(Invariant inv) {
    switch (inv) {
        case Invariant::Hermitian: return "hermitian";
        case Invariant::UnitTrace: return "unit_trace";
        case Invariant::PositiveSemidefinite: return "positive_semidefinite";
        case Invariant::Dimension: return "dimension";
    }
    return "unknown";
}

namespace {
std::string describe(Invariant which, double magnitude) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "invalid density matrix: %s violated (magnitude %.3e)",
                  to_string(which), magnitude);
    return buf;
}
}  // namespace

ValidationError::ValidationError(Invariant which, double magnitude)
    : std::runtime_error(describe(which, magnitude)), which_(which), magnitude_(magnitude) {}

}  // namespace steerscope

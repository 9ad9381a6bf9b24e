#include "steerscope/steering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steerscope/errors.hpp"

namespace steerscope {

namespace {

// Below this norm a T^t c (or T c) column is treated as exactly zero.
constexpr double kZeroColumn = 1e-12;

// Correlation between a steered-party vector and a steering-party vector.
double steered_correlation(const BlochDecomposition& d, Direction direction, const Vec3& steered,
                           const Vec3& steering) {
    return direction == Direction::BtoA ? correlation_expectation(d, steered, steering)
                                        : correlation_expectation(d, steering, steered);
}

}  // namespace

Direction parse_direction(std::string_view name) {
    if (name == "btoa") return Direction::BtoA;
    if (name == "atob") return Direction::AtoB;
    throw InvalidInput("unknown direction: " + std::string(name));
}

std::string_view to_string(Direction direction) {
    return direction == Direction::BtoA ? "btoa" : "atob";
}

void check_configuration(const MeasurementConfiguration& config, Direction direction) {
    for (const Vec3* v : {&config.a_hat, &config.a_prime_hat, &config.b_hat, &config.b_prime_hat}) {
        if (std::abs(vec3::norm(*v) - 1.0) > kUnitTolerance)
            throw InvalidInput("measurement direction is not a unit vector");
    }
    const double overlap = direction == Direction::BtoA
                               ? vec3::dot(config.a_hat, config.a_prime_hat)
                               : vec3::dot(config.b_hat, config.b_prime_hat);
    if (std::abs(overlap) > kUnitTolerance)
        throw InvalidInput("steered party's settings are not orthogonal");
}

double correlation_expectation(const BlochDecomposition& d, const Vec3& u, const Vec3& w) {
    return vec3::dot(u, d.t * w);
}

double correlation_expectation_direct(const TwoQubitState& state, const Vec3& u, const Vec3& w) {
    const ComplexMatrix obs = kron(pauli::along(u), pauli::along(w));
    return trace(matmul(state.matrix(), obs)).real();
}

double cffw_value(const BlochDecomposition& d, const MeasurementConfiguration& config,
                  Direction direction) {
    check_configuration(config, direction);
    const bool btoa = direction == Direction::BtoA;
    const Vec3& e1 = btoa ? config.a_hat : config.b_hat;
    const Vec3& e2 = btoa ? config.a_prime_hat : config.b_prime_hat;
    const Vec3& f1 = btoa ? config.b_hat : config.a_hat;
    const Vec3& f2 = btoa ? config.b_prime_hat : config.a_prime_hat;

    auto corr = [&](const Vec3& e, const Vec3& f) { return steered_correlation(d, direction, e, f); };
    // <(F + F')E> = <F E> + <F' E>, and likewise for the difference.
    const double sum1 = corr(e1, f1) + corr(e1, f2);
    const double sum2 = corr(e2, f1) + corr(e2, f2);
    const double diff1 = corr(e1, f1) - corr(e1, f2);
    const double diff2 = corr(e2, f1) - corr(e2, f2);
    return std::hypot(sum1, sum2) + std::hypot(diff1, diff2);
}

double cffw_value(const TwoQubitState& state, const MeasurementConfiguration& config,
                  Direction direction) {
    return cffw_value(decompose(state), config, direction);
}

SteeringCriterionResult steering_criterion(const BlochDecomposition& d) {
    const auto eig = sym3_eigensystem(d.t * d.t.transposed());
    SteeringCriterionResult out;
    out.v = std::max(eig.values[0], 0.0);
    out.v_tilde = std::max(eig.values[1], 0.0);
    out.s_rho = std::sqrt(out.v + out.v_tilde);
    out.max_cffw = 2.0 * out.s_rho;
    out.violates = out.s_rho > 1.0;
    return out;
}

SteeringCriterionResult steering_criterion(const TwoQubitState& state) {
    return steering_criterion(decompose(state));
}

double horodecki_M(const TwoQubitState& state) {
    const auto res = steering_criterion(state);
    return res.v + res.v_tilde;
}

OptimalMeasurements optimal_measurements(const BlochDecomposition& d, Direction direction) {
    // m maps steering-side directions to steered-side correlation vectors:
    // <F E> = e^t m f. With T indexed (Alice, Bob), m = T for BtoA.
    const RealMatrix3 m = direction == Direction::BtoA ? d.t : d.t.transposed();
    const auto eig = sym3_eigensystem(m.transposed() * m);

    OptimalMeasurements out;
    Vec3 steered1, steered2, steering1, steering2;

    if (frobenius_norm(m) == 0.0) {
        out.frame = {{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, 0.0};
        steered1 = {1.0, 0.0, 0.0};
        steered2 = {0.0, 0.0, 1.0};
        steering1 = steering2 = {0.0, 0.0, 1.0};
    } else {
        const Vec3& c = eig.vectors[0];
        const Vec3& c_prime = eig.vectors[1];
        const Vec3 mc = m * c;
        const Vec3 mc_prime = m * c_prime;
        const double len = vec3::norm(mc);
        const double len_prime = vec3::norm(mc_prime);

        steered1 = vec3::normalized(mc);
        if (len_prime > kZeroColumn) {
            steered2 = vec3::normalized(mc_prime);
            // Remove rounding-level overlap so the pair passes the orthogonality check.
            steered2 = vec3::normalized(
                vec3::sub(steered2, vec3::scaled(steered1, vec3::dot(steered1, steered2))));
        } else {
            steered2 = vec3::any_orthogonal(steered1);
        }
        const double theta = len_prime > kZeroColumn ? std::atan2(len_prime, len) : 0.0;
        out.frame = {c, c_prime, theta};
        steering1 = vec3::add(vec3::scaled(c, std::cos(theta)), vec3::scaled(c_prime, std::sin(theta)));
        steering2 = vec3::sub(vec3::scaled(c, std::cos(theta)), vec3::scaled(c_prime, std::sin(theta)));
    }

    if (direction == Direction::BtoA) {
        out.config = {steered1, steered2, steering1, steering2};
    } else {
        out.config = {steering1, steering2, steered1, steered2};
    }
    return out;
}

OptimalMeasurements optimal_measurements(const TwoQubitState& state, Direction direction) {
    return optimal_measurements(decompose(state), direction);
}

bool is_two_way_symmetric(const TwoQubitState& state, double tol) {
    const auto d = decompose(state);
    const double btoa = cffw_value(d, optimal_measurements(d, Direction::BtoA).config, Direction::BtoA);
    const double atob = cffw_value(d, optimal_measurements(d, Direction::AtoB).config, Direction::AtoB);
    return std::abs(btoa - atob) <= tol;
}

}  // namespace steerscope

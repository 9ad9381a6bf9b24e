#pragma once

#include <string_view>

#include "steerscope/matcore.hpp"
#include "steerscope/states.hpp"

namespace steerscope {

// BtoA: Bob steers Alice, so Alice's two settings must be orthogonal.
// AtoB: Alice steers Bob, so Bob's two settings must be orthogonal.
enum class Direction { BtoA, AtoB };

Direction parse_direction(std::string_view name);
std::string_view to_string(Direction direction);

inline constexpr double kUnitTolerance = 1e-9;

struct MeasurementConfiguration {
    Vec3 a_hat{};
    Vec3 a_prime_hat{};
    Vec3 b_hat{};
    Vec3 b_prime_hat{};
};

// Throws InvalidInput unless all four vectors are unit and the steered
// party's pair is orthogonal (within kUnitTolerance).
void check_configuration(const MeasurementConfiguration& config, Direction direction);

// Steering-side frame: b + b' = 2 cos(theta) c, b - b' = 2 sin(theta) c'
// (Alice's pair instead of Bob's for AtoB).
struct CffwFrame {
    Vec3 c_hat{};
    Vec3 c_prime_hat{};
    double theta = 0.0;  // [0, pi/2]
};

struct SteeringCriterionResult {
    double v = 0.0;
    double v_tilde = 0.0;
    double s_rho = 0.0;     // sqrt(v + v_tilde)
    double max_cffw = 0.0;  // 2 * s_rho
    bool violates = false;  // s_rho > 1
};

// <u.sigma (x) w.sigma> = u^t T w, u on Alice, w on Bob. Linear in u and w.
double correlation_expectation(const BlochDecomposition& d, const Vec3& u, const Vec3& w);
// Same quantity as Tr(rho (u.sigma) (x) (w.sigma)).
double correlation_expectation_direct(const TwoQubitState& state, const Vec3& u, const Vec3& w);

// Left-hand side of the CFFW inequality for the given direction.
double cffw_value(const BlochDecomposition& d, const MeasurementConfiguration& config,
                  Direction direction);
double cffw_value(const TwoQubitState& state, const MeasurementConfiguration& config,
                  Direction direction);

SteeringCriterionResult steering_criterion(const BlochDecomposition& d);
SteeringCriterionResult steering_criterion(const TwoQubitState& state);

// Horodecki M(rho): sum of the two largest eigenvalues of T T^t.
double horodecki_M(const TwoQubitState& state);

struct OptimalMeasurements {
    MeasurementConfiguration config;
    CffwFrame frame;
};

OptimalMeasurements optimal_measurements(const BlochDecomposition& d, Direction direction);
OptimalMeasurements optimal_measurements(const TwoQubitState& state, Direction direction);

// Executable form of direction independence: compares the values reached by
// the optimal settings in both directions.
bool is_two_way_symmetric(const TwoQubitState& state, double tol = 1e-9);

}  // namespace steerscope

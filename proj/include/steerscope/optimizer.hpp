#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "steerscope/states.hpp"
#include "steerscope/steering.hpp"

namespace steerscope {

struct OptimizationSettings {
    int restarts = 24;
    int max_iterations = 2000;  // per restart
    double tolerance = 1e-10;   // simplex diameter
    std::uint64_t seed = 0;
};

void check_settings(const OptimizationSettings& settings);

// Unconstrained chart over admissible configurations. The steered party's
// pair is (unit(theta_e, phi_e), rotation by psi inside the plane orthogonal
// to it); the steering party's two vectors are free spherical points.
struct AngleParametrization {
    double theta_f = 0.0, phi_f = 0.0;              // steering setting 1
    double theta_f_prime = 0.0, phi_f_prime = 0.0;  // steering setting 2
    double theta_e = 0.0, phi_e = 0.0;              // steered setting 1
    double psi_e = 0.0;                             // steered setting 2

    static AngleParametrization from_array(const std::array<double, 7>& x);
    std::array<double, 7> to_array() const;
    MeasurementConfiguration to_configuration(Direction direction) const;
};

Vec3 spherical_unit(double theta, double phi);

struct NumericMaximum {
    double value = 0.0;
    MeasurementConfiguration config;
    bool converged = false;  // every restart met the diameter tolerance
};

NumericMaximum maximize_cffw_numeric(const TwoQubitState& state, Direction direction,
                                     const OptimizationSettings& settings = {});
NumericMaximum maximize_cffw_numeric(const BlochDecomposition& d, Direction direction,
                                     const OptimizationSettings& settings = {});

// Regular sweep over the steering party's four angles; for each grid point
// the steered pair is taken to span the plane of the two correlation
// vectors. Each grid point is an admissible configuration, so the result is
// a lower bound on the true maximum.
double grid_refine(const TwoQubitState& state, Direction direction, int resolution);

namespace detail {

struct SimplexResult {
    std::array<double, 7> best{};
    double best_value = 0.0;  // of the minimized objective
    int iterations = 0;
    bool converged = false;
};

// Nelder-Mead minimization in 7 dimensions from an axis-aligned initial
// simplex with the given edge length.
SimplexResult nelder_mead(const std::function<double(const std::array<double, 7>&)>& objective,
                          const std::array<double, 7>& start, double edge, int max_iterations,
                          double tolerance);

}  // namespace detail

}  // namespace steerscope

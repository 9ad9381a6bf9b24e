#include "steerscope/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steerscope/errors.hpp"

namespace steerscope {

namespace {

constexpr double kInitialEdge = 0.3;
constexpr double kPi = std::numbers::pi;

}  // namespace

void check_settings(const OptimizationSettings& settings) {
    if (settings.restarts < 1) throw InvalidInput("optimizer: restarts must be at least 1");
    if (settings.max_iterations < 1) throw InvalidInput("optimizer: max_iterations must be at least 1");
    if (!(settings.tolerance > 0.0)) throw InvalidInput("optimizer: tolerance must be positive");
}

Vec3 spherical_unit(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

AngleParametrization AngleParametrization::from_array(const std::array<double, 7>& x) {
    return {x[0], x[1], x[2], x[3], x[4], x[5], x[6]};
}

std::array<double, 7> AngleParametrization::to_array() const {
    return {theta_f, phi_f, theta_f_prime, phi_f_prime, theta_e, phi_e, psi_e};
}

MeasurementConfiguration AngleParametrization::to_configuration(Direction direction) const {
    const Vec3 f1 = spherical_unit(theta_f, phi_f);
    const Vec3 f2 = spherical_unit(theta_f_prime, phi_f_prime);
    const Vec3 e1 = spherical_unit(theta_e, phi_e);
    // d/dtheta and (1/sin theta) d/dphi of the spherical unit vector: an
    // orthonormal basis of the plane orthogonal to e1 at every (theta, phi).
    const Vec3 u{std::cos(theta_e) * std::cos(phi_e), std::cos(theta_e) * std::sin(phi_e),
                 -std::sin(theta_e)};
    const Vec3 w{-std::sin(phi_e), std::cos(phi_e), 0.0};
    const Vec3 e2 = vec3::add(vec3::scaled(u, std::cos(psi_e)), vec3::scaled(w, std::sin(psi_e)));

    if (direction == Direction::BtoA) return {e1, e2, f1, f2};
    return {f1, f2, e1, e2};
}

namespace detail {

SimplexResult nelder_mead(const std::function<double(const std::array<double, 7>&)>& objective,
                          const std::array<double, 7>& start, double edge, int max_iterations,
                          double tolerance) {
    constexpr int n = 7;
    using Point = std::array<double, n>;
    constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    std::array<Point, n + 1> pts;
    std::array<double, n + 1> vals;
    pts[0] = start;
    for (int i = 0; i < n; ++i) {
        pts[i + 1] = start;
        pts[i + 1][i] += edge;
    }
    for (int i = 0; i <= n; ++i) vals[i] = objective(pts[i]);

    auto diameter = [&] {
        double worst = 0.0;
        for (int i = 1; i <= n; ++i) {
            double dist = 0.0;
            for (int k = 0; k < n; ++k) dist = std::max(dist, std::abs(pts[i][k] - pts[0][k]));
            worst = std::max(worst, dist);
        }
        return worst;
    };
    auto combine = [](const Point& a, const Point& b, double t) {
        // a + t (b - a)
        Point out;
        for (int k = 0; k < n; ++k) out[k] = a[k] + t * (b[k] - a[k]);
        return out;
    };

    SimplexResult result;
    std::array<int, n + 1> order;
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        for (int i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int i, int j) { return vals[i] < vals[j]; });
        {
            std::array<Point, n + 1> p2;
            std::array<double, n + 1> v2;
            for (int i = 0; i <= n; ++i) {
                p2[i] = pts[order[i]];
                v2[i] = vals[order[i]];
            }
            pts = p2;
            vals = v2;
        }
        if (diameter() < tolerance) {
            result.converged = true;
            break;
        }

        Point centroid{};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) centroid[k] += pts[i][k] / n;

        const Point reflected = combine(centroid, pts[n], -alpha);
        const double f_reflected = objective(reflected);
        if (f_reflected < vals[0]) {
            const Point expanded = combine(centroid, pts[n], -gamma);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                pts[n] = expanded;
                vals[n] = f_expanded;
            } else {
                pts[n] = reflected;
                vals[n] = f_reflected;
            }
            continue;
        }
        if (f_reflected < vals[n - 1]) {
            pts[n] = reflected;
            vals[n] = f_reflected;
            continue;
        }
        const bool outside = f_reflected < vals[n];
        const Point contracted =
            outside ? combine(centroid, reflected, rho) : combine(centroid, pts[n], rho);
        const double f_contracted = objective(contracted);
        if (f_contracted < std::min(f_reflected, vals[n])) {
            pts[n] = contracted;
            vals[n] = f_contracted;
            continue;
        }
        for (int i = 1; i <= n; ++i) {
            pts[i] = combine(pts[0], pts[i], sigma);
            vals[i] = objective(pts[i]);
        }
    }

    const int best = static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    result.best = pts[best];
    result.best_value = vals[best];
    result.iterations = iter;
    return result;
}

}  // namespace detail

NumericMaximum maximize_cffw_numeric(const BlochDecomposition& d, Direction direction,
                                     const OptimizationSettings& settings) {
    check_settings(settings);
    auto objective = [&](const std::array<double, 7>& x) {
        return -cffw_value(d, AngleParametrization::from_array(x).to_configuration(direction), direction);
    };

    const Rng root(settings.seed);
    NumericMaximum best;
    best.value = -1.0;
    best.converged = true;
    for (int restart = 0; restart < settings.restarts; ++restart) {
        Rng rng = root.substream(static_cast<std::uint64_t>(restart));
        std::array<double, 7> start;
        for (int k = 0; k < 7; ++k) start[k] = rng.uniform(0.0, 2.0 * kPi);

        // Restart the simplex at its own optimum until a fresh simplex no
        // longer moves; this escapes Nelder-Mead's premature collapses.
        int budget = settings.max_iterations;
        double edge = kInitialEdge;
        detail::SimplexResult run;
        double previous = 0.0;
        bool first = true;
        bool converged = false;
        while (budget > 0) {
            run = detail::nelder_mead(objective, start, edge, budget, settings.tolerance);
            budget -= std::max(run.iterations, 1);
            converged = run.converged;
            if (!first && previous - run.best_value <= settings.tolerance) break;
            first = false;
            previous = run.best_value;
            start = run.best;
            edge = 0.05;
        }
        best.converged = best.converged && converged;

        const double value = -run.best_value;
        if (value > best.value) {
            best.value = value;
            best.config = AngleParametrization::from_array(run.best).to_configuration(direction);
        }
    }
    // Report the value exactly as cffw_value evaluates the returned settings.
    best.value = cffw_value(d, best.config, direction);
    return best;
}

NumericMaximum maximize_cffw_numeric(const TwoQubitState& state, Direction direction,
                                     const OptimizationSettings& settings) {
    return maximize_cffw_numeric(decompose(state), direction, settings);
}

double grid_refine(const TwoQubitState& state, Direction direction, int resolution) {
    if (resolution < 8) throw InvalidInput("grid_refine: resolution must be at least 8");
    const BlochDecomposition d = decompose(state);
    const RealMatrix3 m = direction == Direction::BtoA ? d.t : d.t.transposed();

    // theta in [0, pi] including both poles; phi in [0, 2 pi) periodic.
    std::vector<Vec3> sphere;
    for (int i = 0; i < resolution; ++i) {
        const double theta = kPi * i / (resolution - 1);
        const int n_phi = (i == 0 || i == resolution - 1) ? 1 : resolution;
        for (int j = 0; j < n_phi; ++j) sphere.push_back(spherical_unit(theta, 2.0 * kPi * j / resolution));
    }

    double best = 0.0;
    for (const Vec3& f1 : sphere) {
        for (const Vec3& f2 : sphere) {
            const Vec3 sum = m * vec3::add(f1, f2);
            const Vec3 diff = m * vec3::sub(f1, f2);
            // Orthonormal pair spanning sum and diff (or any pair if degenerate).
            Vec3 e1, e2;
            const double n_sum = vec3::norm(sum), n_diff = vec3::norm(diff);
            if (n_sum == 0.0 && n_diff == 0.0) continue;
            e1 = vec3::normalized(n_sum >= n_diff ? sum : diff);
            const Vec3 other = n_sum >= n_diff ? diff : sum;
            const Vec3 rest = vec3::sub(other, vec3::scaled(e1, vec3::dot(e1, other)));
            e2 = vec3::norm(rest) > 1e-12 ? vec3::normalized(rest) : vec3::any_orthogonal(e1);

            const MeasurementConfiguration config =
                direction == Direction::BtoA ? MeasurementConfiguration{e1, e2, f1, f2}
                                             : MeasurementConfiguration{f1, f2, e1, e2};
            best = std::max(best, cffw_value(d, config, direction));
        }
    }
    return best;
}

}  // namespace steerscope

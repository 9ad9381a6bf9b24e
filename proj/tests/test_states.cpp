#include <cmath>

#include "doctest.h"
#include "steerscope/errors.hpp"
#include "steerscope/states.hpp"
#include "test_support.hpp"

using namespace steerscope;

namespace {

void check_decomposition(const BlochDecomposition& d, const Vec3& r, const Vec3& s, const RealMatrix3& t,
                         double tol) {
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(d.r[i] - r[i]) <= tol);
        CHECK(std::abs(d.s[i] - s[i]) <= tol);
    }
    CHECK(max_abs_diff(d.t, t) <= tol);
}

Invariant rejection_reason(const ComplexMatrix& m) {
    try {
        validate(m);
    } catch (const ValidationError& e) {
        return e.which();
    }
    FAIL("matrix was accepted");
    return Invariant::Dimension;
}

const TwoQubitState& two(const AnyState& s) { return std::get<TwoQubitState>(s); }

}  // namespace

TEST_CASE("validate accepts valid states and names each rejection") {
    CHECK_NOTHROW(validate(0.25 * ComplexMatrix::identity(4)));
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::holds_alternative<TwoQubitState>(
        validate(ComplexMatrix::projector(std::vector<Complex>{h, 0.0, 0.0, h}))));
    CHECK(std::holds_alternative<ThreeQubitState>(validate(0.125 * ComplexMatrix::identity(8))));

    CHECK(rejection_reason(ComplexMatrix::diagonal({1.5, -0.5, 0.0, 0.0})) == Invariant::PositiveSemidefinite);
    try {
        validate(ComplexMatrix::diagonal({1.5, -0.5, 0.0, 0.0}));
    } catch (const ValidationError& e) {
        CHECK(e.magnitude() == doctest::Approx(0.5));
    }

    ComplexMatrix skew = 0.25 * ComplexMatrix::identity(4);
    skew(0, 1) = 0.1;
    CHECK(rejection_reason(skew) == Invariant::Hermitian);
    CHECK(rejection_reason(0.3 * ComplexMatrix::identity(4)) == Invariant::UnitTrace);
    CHECK(rejection_reason(0.5 * ComplexMatrix::identity(2)) == Invariant::Dimension);
}

TEST_CASE("repair clamps only small negative eigenvalues") {
    const ComplexMatrix slightly_negative = ComplexMatrix::diagonal({0.5 + 1e-8, 0.5, -1e-8, 0.0});
    CHECK_THROWS_AS(TwoQubitState::from_matrix(slightly_negative), ValidationError);
    const auto repaired = TwoQubitState::from_matrix(slightly_negative, {kStateTolerance, true});
    CHECK(std::abs(trace(repaired.matrix()) - 1.0) < 1e-14);
    CHECK(hermitian_eigenvalues(repaired.matrix()).back() >= -1e-15);

    CHECK_THROWS_AS(TwoQubitState::from_matrix(ComplexMatrix::diagonal({1.5, -0.5, 0.0, 0.0}),
                                               {kStateTolerance, true}),
                    ValidationError);
}

TEST_CASE("decompose examples") {
    const Vec3 zero{};
    check_decomposition(decompose(TwoQubitState::from_matrix(0.25 * ComplexMatrix::identity(4))), zero, zero,
                        RealMatrix3{}, 1e-15);
    check_decomposition(decompose(named_two_qubit("bell_phi_plus")), zero, zero,
                        RealMatrix3::diagonal(1.0, -1.0, 1.0), 1e-12);
    check_decomposition(decompose(named_two_qubit("bell_psi_plus")), zero, zero,
                        RealMatrix3::diagonal(1.0, 1.0, -1.0), 1e-12);
    check_decomposition(decompose(named_two_qubit("bell_phi_minus")), zero, zero,
                        RealMatrix3::diagonal(-1.0, 1.0, 1.0), 1e-12);
    check_decomposition(decompose(named_two_qubit("bell_psi_minus")), zero, zero,
                        RealMatrix3::diagonal(-1.0, -1.0, -1.0), 1e-12);
    for (double p : {0.0, 0.25, 0.5, 0.9, 1.0})
        check_decomposition(decompose(werner(p)), zero, zero, RealMatrix3::diagonal(p, -p, p), 1e-12);

    // |01>: Alice up, Bob down.
    const auto ket01 = TwoQubitState::from_matrix(ComplexMatrix::diagonal({0.0, 1.0, 0.0, 0.0}));
    check_decomposition(decompose(ket01), {0, 0, 1}, {0, 0, -1}, RealMatrix3::diagonal(0, 0, -1), 1e-15);
}

TEST_CASE("compose examples") {
    CHECK(max_abs_diff(compose(BlochDecomposition{}).matrix(), 0.25 * ComplexMatrix::identity(4)) == 0.0);
    BlochDecomposition bell;
    bell.t = RealMatrix3::diagonal(1.0, -1.0, 1.0);
    CHECK(max_abs_diff(compose(bell).matrix(), named_two_qubit("bell_phi_plus").matrix()) <= 1e-15);

    BlochDecomposition bad;
    bad.t = RealMatrix3::identity();
    try {
        compose(bad);
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        CHECK(e.which() == Invariant::PositiveSemidefinite);
        // (I + XX + YY + ZZ)/4 = SWAP/2, whose smallest eigenvalue is -1/2.
        CHECK(e.magnitude() == doctest::Approx(0.5));
    }
}

TEST_CASE("werner family") {
    CHECK(max_abs_diff(werner(0.0).matrix(), 0.25 * ComplexMatrix::identity(4)) <= 1e-16);
    CHECK(max_abs_diff(werner(1.0).matrix(), named_two_qubit("bell_phi_plus").matrix()) <= 1e-16);
    CHECK_THROWS_AS(werner(-0.1), InvalidInput);
    CHECK_THROWS_AS(werner(1.1), InvalidInput);
    CHECK_THROWS_AS(werner(std::nan("")), InvalidInput);
}

TEST_CASE("named states") {
    const double h = 1.0 / std::sqrt(2.0);
    const double t = 1.0 / std::sqrt(3.0);
    std::vector<Complex> ghz(8), w(8);
    ghz[0] = ghz[7] = h;
    w[1] = w[2] = w[4] = t;
    CHECK(max_abs_diff(std::get<ThreeQubitState>(named_state("ghz")).matrix(), ComplexMatrix::projector(ghz)) == 0.0);
    CHECK(max_abs_diff(std::get<ThreeQubitState>(named_state("w")).matrix(), ComplexMatrix::projector(w)) == 0.0);
    CHECK(std::holds_alternative<TwoQubitState>(named_state("bell_psi_minus")));
    CHECK_THROWS_AS(named_state("bell"), InvalidInput);
    CHECK_THROWS_AS(named_two_qubit("ghz"), InvalidInput);
}

TEST_CASE("sampling is deterministic and valid") {
    for (auto kind : {EnsembleKind::HaarPure2q, EnsembleKind::GinibreMixed2q, EnsembleKind::HaarPure3q,
                      EnsembleKind::GinibreMixed3q}) {
        const EnsembleSpec spec{kind, 20, 99};
        const auto a = sample_ensemble(spec);
        const auto b = sample_ensemble(spec);
        REQUIRE(a.size() == 20);
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto matrix_of = [](const AnyState& s) {
                return std::visit([](const auto& st) { return st.matrix(); }, s);
            };
            CHECK(matrix_of(a[i]) == matrix_of(b[i]));
            // Index-addressable: sample i does not depend on the others.
            CHECK(matrix_of(sample_state(kind, 99, i)) == matrix_of(a[i]));
            CHECK(a[i].index() == (qubit_count(kind) == 2 ? 0u : 1u));
        }
        CHECK(std::visit([](const auto& s) { return s.matrix(); }, a[0]) !=
              std::visit([](const auto& s) { return s.matrix(); }, sample_ensemble({kind, 1, 100})[0]));
    }
    CHECK_THROWS_AS(sample_ensemble({EnsembleKind::HaarPure2q, 0, 1}), InvalidInput);
    CHECK(parse_ensemble_kind("ginibre_mixed_3q") == EnsembleKind::GinibreMixed3q);
    CHECK_THROWS_AS(parse_ensemble_kind("gaussian"), InvalidInput);
}

TEST_CASE("ginibre ensemble mean approaches the maximally mixed state") {
    const auto samples = sample_ensemble({EnsembleKind::GinibreMixed2q, 10000, 2024});
    ComplexMatrix mean(4);
    for (const auto& s : samples) mean += two(s).matrix();
    mean *= 1.0 / 10000.0;
    CHECK(max_abs_diff(mean, 0.25 * ComplexMatrix::identity(4)) <= 0.02);
}

TEST_CASE("decomposition properties over sampled states") {
    const auto mixed = sample_ensemble({EnsembleKind::GinibreMixed2q, 200, 7});
    const auto pure = sample_ensemble({EnsembleKind::HaarPure2q, 200, 8});

    for (const auto* set : {&mixed, &pure}) {
        for (const auto& s : *set) {
            const auto& rho = two(s);
            const auto d = decompose(rho);
            CHECK(max_abs_diff(compose(d).matrix(), rho.matrix()) <= 1e-10);
            CHECK(vec3::norm(d.r) <= 1.0 + 1e-9);
            CHECK(vec3::norm(d.s) <= 1.0 + 1e-9);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) CHECK(std::abs(d.t(i, j)) <= 1.0 + 1e-9);
        }
    }
    for (const auto& s : pure) {
        const auto d = decompose(two(s));
        CHECK(std::abs(vec3::dot(d.r, d.r) - vec3::dot(d.s, d.s)) <= 1e-9);
    }

    // Linearity of decompose under mixing.
    Rng rng(9);
    for (std::size_t k = 0; k + 1 < mixed.size(); k += 2) {
        const double lambda = rng.uniform();
        ComplexMatrix blend = Complex(lambda, 0.0) * two(mixed[k]).matrix();
        blend += Complex(1.0 - lambda, 0.0) * two(mixed[k + 1]).matrix();
        const auto d = decompose(TwoQubitState::from_matrix(blend));
        const auto d1 = decompose(two(mixed[k]));
        const auto d2 = decompose(two(mixed[k + 1]));
        for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(d.r[i] - (lambda * d1.r[i] + (1 - lambda) * d2.r[i])) <= 1e-12);
            CHECK(std::abs(d.s[i] - (lambda * d1.s[i] + (1 - lambda) * d2.s[i])) <= 1e-12);
            for (int j = 0; j < 3; ++j)
                CHECK(std::abs(d.t(i, j) - (lambda * d1.t(i, j) + (1 - lambda) * d2.t(i, j))) <= 1e-12);
        }
    }
}

TEST_CASE("product states have rank-one correlations") {
    for (std::size_t k = 0; k < 100; ++k) {
        const auto a = two(sample_state(EnsembleKind::GinibreMixed2q, 31, k));
        const auto b = two(sample_state(EnsembleKind::GinibreMixed2q, 32, k));
        const auto rho_a = partial_trace(a.matrix(), 2, {0});
        const auto rho_b = partial_trace(b.matrix(), 2, {1});
        const auto d = decompose(TwoQubitState::from_matrix(kron(rho_a, rho_b)));
        RealMatrix3 outer;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) outer(i, j) = d.r[i] * d.s[j];
        CHECK(max_abs_diff(d.t, outer) <= 1e-10);
    }
}

TEST_CASE("random_unitary_2x2 is unitary") {
    Rng rng(4);
    for (int k = 0; k < 50; ++k) {
        const auto u = random_unitary_2x2(rng);
        CHECK(max_abs_diff(matmul(u, dagger(u)), ComplexMatrix::identity(2)) <= 1e-14);
    }
}

TEST_CASE("matrix digest") {
    const auto a = matrix_digest(ComplexMatrix::identity(4));
    CHECK(a.size() == 16);
    CHECK(a == matrix_digest(ComplexMatrix::identity(4)));
    CHECK(a != matrix_digest(0.25 * ComplexMatrix::identity(4)));
}

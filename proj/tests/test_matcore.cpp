#include <cmath>

#include "doctest.h"
#include "steerscope/errors.hpp"
#include "steerscope/matcore.hpp"
#include "test_support.hpp"

using namespace steerscope;
using steerscope::testing::brute_partial_trace;
using steerscope::testing::random_hermitian;
using steerscope::testing::random_matrix;

namespace {
const Complex I(0.0, 1.0);

ComplexMatrix ghz_projector() {
    std::vector<Complex> psi(8);
    psi[0] = psi[7] = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::projector(psi);
}
}  // namespace

TEST_CASE("matmul") {
    CHECK(max_abs_diff(matmul(pauli::identity(), pauli::x()), pauli::x()) == 0.0);
    CHECK(max_abs_diff(matmul(pauli::x(), pauli::x()), pauli::identity()) == 0.0);
    // By hand: [[0,1],[1,0]] [[0,-i],[i,0]] = [[i,0],[0,-i]].
    CHECK(max_abs_diff(matmul(pauli::x(), pauli::y()), I * pauli::z()) == 0.0);
    CHECK_THROWS_AS(matmul(pauli::x(), ComplexMatrix::identity(4)), InvalidInput);
}

TEST_CASE("dagger") {
    CHECK(dagger(pauli::y()) == pauli::y());
    CHECK(dagger(I * pauli::identity()) == -I * pauli::identity());
    Rng rng(11);
    const ComplexMatrix a = random_matrix(rng, 4);
    CHECK(dagger(dagger(a)) == a);
}

TEST_CASE("kron") {
    CHECK(kron(pauli::identity(), pauli::identity()) == ComplexMatrix::identity(4));
    CHECK(kron(pauli::z(), pauli::z()) == ComplexMatrix::diagonal({1.0, -1.0, -1.0, 1.0}));

    // First factor is the most significant index: (x (x) I)|00> = |10>.
    const ComplexMatrix xi = kron(pauli::x(), pauli::identity());
    CHECK(xi(2, 0) == Complex(1.0, 0.0));
    CHECK(xi(1, 0) == Complex(0.0, 0.0));

    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_matrix(rng, 2), b = random_matrix(rng, 2), c = random_matrix(rng, 2);
        CHECK(std::abs(trace(kron(a, b)) - trace(a) * trace(b)) < 1e-12);
        CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
    }
}

TEST_CASE("trace") {
    CHECK(trace(ComplexMatrix::identity(4)) == Complex(4.0, 0.0));
    CHECK(trace(pauli::x()) == Complex(0.0, 0.0));
    CHECK(trace(ComplexMatrix::projector(std::vector<Complex>{1.0, 0.0, 0.0, 0.0})) == Complex(1.0, 0.0));
}

TEST_CASE("partial_trace examples") {
    const ComplexMatrix ket00 = ComplexMatrix::projector(std::vector<Complex>{1.0, 0.0, 0.0, 0.0});
    CHECK(max_abs_diff(partial_trace(ket00, 2, {0}), ComplexMatrix::diagonal({1.0, 0.0})) == 0.0);

    const double h = 1.0 / std::sqrt(2.0);
    const ComplexMatrix phi_plus = ComplexMatrix::projector(std::vector<Complex>{h, 0.0, 0.0, h});
    CHECK(max_abs_diff(partial_trace(phi_plus, 2, {1}), ComplexMatrix::diagonal({0.5, 0.5})) < 1e-15);

    const ComplexMatrix expected = ComplexMatrix::diagonal({0.5, 0.0, 0.0, 0.5});
    CHECK(max_abs_diff(partial_trace(ghz_projector(), 3, {0, 1}), expected) < 1e-15);
}

TEST_CASE("partial_trace rejects bad subsets") {
    const ComplexMatrix rho = ComplexMatrix::identity(8);
    CHECK_THROWS_AS(partial_trace(rho, 3, {}), InvalidInput);
    CHECK_THROWS_AS(partial_trace(rho, 3, {1, 0}), InvalidInput);
    CHECK_THROWS_AS(partial_trace(rho, 3, {0, 0}), InvalidInput);
    CHECK_THROWS_AS(partial_trace(rho, 3, {3}), InvalidInput);
    CHECK_THROWS_AS(partial_trace(rho, 2, {0}), InvalidInput);
}

TEST_CASE("partial_trace matches index contraction and composes") {
    Rng rng(5);
    const std::vector<std::vector<int>> subsets = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix rho = random_hermitian(rng, 8);
        for (const auto& keep : subsets) {
            const auto reduced = partial_trace(rho, 3, std::span<const int>(keep));
            CHECK(max_abs_diff(reduced, brute_partial_trace(rho, 3, keep)) <= 1e-12);
            CHECK(std::abs(trace(reduced) - trace(rho)) <= 1e-12);
        }
        const auto two_step = partial_trace(partial_trace(rho, 3, {0, 1}), 2, {0});
        CHECK(max_abs_diff(two_step, partial_trace(rho, 3, {0})) <= 1e-12);
        const auto via_ac = partial_trace(partial_trace(rho, 3, {0, 2}), 2, {1});
        CHECK(max_abs_diff(via_ac, partial_trace(rho, 3, {2})) <= 1e-12);
    }
}

TEST_CASE("hermitian_eigenvalues") {
    const auto diag = hermitian_eigenvalues(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
    REQUIRE(diag.size() == 3);
    CHECK(diag[0] == doctest::Approx(3.0));
    CHECK(diag[1] == doctest::Approx(2.0));
    CHECK(diag[2] == doctest::Approx(1.0));

    const auto sx = hermitian_eigenvalues(pauli::x());
    CHECK(sx[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sx[1] == doctest::Approx(-1.0).epsilon(1e-14));

    const double h = 1.0 / std::sqrt(2.0);
    const auto bell = hermitian_eigenvalues(ComplexMatrix::projector(std::vector<Complex>{h, 0.0, 0.0, h}));
    CHECK(std::abs(bell[0] - 1.0) < 1e-14);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(bell[k]) < 1e-14);

    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, {0.0, 1.0, 0.0, 0.0})), InvalidInput);
}

TEST_CASE("hermitian eigensystem residuals on random input") {
    Rng rng(17);
    for (std::size_t dim : {2u, 4u, 8u}) {
        for (int trial = 0; trial < 25; ++trial) {
            const ComplexMatrix a = random_hermitian(rng, dim);
            const auto eig = hermitian_eigensystem(a);
            double sum = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                sum += eig.values[k];
                if (k > 0) CHECK(eig.values[k - 1] >= eig.values[k]);
                double residual = 0.0;
                for (std::size_t i = 0; i < dim; ++i) {
                    Complex row{};
                    for (std::size_t j = 0; j < dim; ++j) row += a(i, j) * eig.vectors[k][j];
                    residual += std::norm(row - eig.values[k] * eig.vectors[k][i]);
                }
                CHECK(std::sqrt(residual) <= 1e-10 * (1.0 + frobenius_norm(a)));
            }
            CHECK(std::abs(sum - trace(a).real()) <= 1e-10);
        }
    }
}

TEST_CASE("sym3_eigensystem examples") {
    const auto id = sym3_eigensystem(RealMatrix3::identity());
    for (double v : id.values) CHECK(v == doctest::Approx(1.0));

    const auto d = sym3_eigensystem(RealMatrix3::diagonal(1.0, 4.0, 0.0));
    CHECK(d.values[0] == doctest::Approx(4.0));
    CHECK(d.values[1] == doctest::Approx(1.0));
    CHECK(d.values[2] == doctest::Approx(0.0));
    CHECK(std::abs(d.vectors[0][1]) == doctest::Approx(1.0));
    CHECK(std::abs(d.vectors[1][0]) == doctest::Approx(1.0));
    CHECK(std::abs(d.vectors[2][2]) == doctest::Approx(1.0));

    RealMatrix3 asym = RealMatrix3::identity();
    asym(0, 1) = 0.5;
    CHECK_THROWS_AS(sym3_eigensystem(asym), InvalidInput);
}

TEST_CASE("sym3_eigensystem spectral reconstruction") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        RealMatrix3 g;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g(i, j) = rng.gaussian();
        // Random symmetric PSD, plus a random symmetric indefinite one.
        for (const RealMatrix3& m : {g * g.transposed(), RealMatrix3(g) * RealMatrix3::identity()}) {
            RealMatrix3 sym;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) sym(i, j) = 0.5 * (m(i, j) + m(j, i));
            const auto eig = sym3_eigensystem(sym);
            RealMatrix3 rebuilt;
            for (int k = 0; k < 3; ++k)
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) rebuilt(i, j) += eig.values[k] * eig.vectors[k][i] * eig.vectors[k][j];
            CHECK(max_abs_diff(rebuilt, sym) <= 1e-10);
            for (int k = 0; k < 3; ++k) {
                const Vec3 mv = sym * eig.vectors[k];
                const double residual = vec3::norm(vec3::sub(mv, vec3::scaled(eig.vectors[k], eig.values[k])));
                CHECK(residual <= 1e-10 * (1.0 + frobenius_norm(sym)));
                for (int l = k + 1; l < 3; ++l) CHECK(std::abs(vec3::dot(eig.vectors[k], eig.vectors[l])) <= 1e-10);
            }
        }
    }
}

TEST_CASE("ComplexMatrix rejects malformed construction") {
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), InvalidInput);
    CHECK_THROWS_AS(ComplexMatrix(1, {Complex(std::nan(""), 0.0)}), InvalidInput);
}

#include "steerscope/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "steerscope/errors.hpp"

namespace steerscope {

namespace {

// Applies the density-matrix checks and returns the accepted matrix, which
// differs from the input only when repair clamps small negative eigenvalues.
ComplexMatrix checked_density(const ComplexMatrix& m, std::size_t expected_dim,
                              const ValidationOptions& options) {
    if (m.dim() != expected_dim)
        throw ValidationError(Invariant::Dimension, static_cast<double>(m.dim()));
    if (!all_finite(m)) throw InvalidInput("density matrix has non-finite entries");

    const double asym = max_abs_diff(m, dagger(m));
    if (asym > options.tolerance) throw ValidationError(Invariant::Hermitian, asym);

    const Complex tr = trace(m);
    const double trace_error = std::abs(tr - Complex(1.0, 0.0));
    if (trace_error > options.tolerance) throw ValidationError(Invariant::UnitTrace, trace_error);

    auto eig = hermitian_eigensystem(m, options.tolerance);
    const double min_eig = eig.values.back();
    if (min_eig >= -options.tolerance) return m;

    if (!options.repair || min_eig < kRepairFloor)
        throw ValidationError(Invariant::PositiveSemidefinite, -min_eig);

    ComplexMatrix repaired(m.dim());
    double kept = 0.0;
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
        const double lambda = std::max(eig.values[k], 0.0);
        if (lambda == 0.0) continue;
        kept += lambda;
        repaired += Complex(lambda, 0.0) * ComplexMatrix::projector(eig.vectors[k]);
    }
    repaired *= Complex(1.0 / kept, 0.0);
    return repaired;
}

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

std::vector<Complex> basis_amplitudes(std::size_t dim,
                                      std::initializer_list<std::pair<std::size_t, double>> terms) {
    std::vector<Complex> psi(dim);
    for (const auto& [index, amp] : terms) psi[index] = amp;
    return psi;
}

}  // namespace

template <int NQubits>
QubitState<NQubits> QubitState<NQubits>::from_matrix(const ComplexMatrix& m, ValidationOptions options) {
    return QubitState(checked_density(m, dim, options));
}

template class QubitState<2>;
template class QubitState<3>;

AnyState validate(const ComplexMatrix& m, ValidationOptions options) {
    switch (m.dim()) {
        case 4: return TwoQubitState::from_matrix(m, options);
        case 8: return ThreeQubitState::from_matrix(m, options);
        default: throw ValidationError(Invariant::Dimension, static_cast<double>(m.dim()));
    }
}

BlochDecomposition decompose(const TwoQubitState& state) {
    const ComplexMatrix& rho = state.matrix();
    const ComplexMatrix& id = pauli::identity();
    BlochDecomposition d;
    // Tr(rho X) for Hermitian X is real; imaginary parts are rounding noise.
    for (int i = 0; i < 3; ++i) {
        d.r[i] = trace(matmul(rho, kron(pauli::by_index(i), id))).real();
        d.s[i] = trace(matmul(rho, kron(id, pauli::by_index(i)))).real();
        for (int j = 0; j < 3; ++j)
            d.t(i, j) = trace(matmul(rho, kron(pauli::by_index(i), pauli::by_index(j)))).real();
    }
    return d;
}

ComplexMatrix compose_matrix(const BlochDecomposition& d) {
    const ComplexMatrix& id = pauli::identity();
    ComplexMatrix rho = ComplexMatrix::identity(4);
    for (int i = 0; i < 3; ++i) {
        rho += Complex(d.r[i], 0.0) * kron(pauli::by_index(i), id);
        rho += Complex(d.s[i], 0.0) * kron(id, pauli::by_index(i));
        for (int j = 0; j < 3; ++j)
            rho += Complex(d.t(i, j), 0.0) * kron(pauli::by_index(i), pauli::by_index(j));
    }
    rho *= 0.25;
    return rho;
}

TwoQubitState compose(const BlochDecomposition& d) {
    return TwoQubitState::from_matrix(compose_matrix(d));
}

TwoQubitState werner(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("werner: p must lie in [0, 1]");
    ComplexMatrix rho = Complex(p, 0.0) * named_two_qubit("bell_phi_plus").matrix();
    rho += Complex((1.0 - p) / 4.0, 0.0) * ComplexMatrix::identity(4);
    return TwoQubitState::from_matrix(rho);
}

TwoQubitState named_two_qubit(std::string_view name) {
    std::vector<Complex> psi;
    if (name == "bell_phi_plus") {
        psi = basis_amplitudes(4, {{0b00, kInvSqrt2}, {0b11, kInvSqrt2}});
    } else if (name == "bell_phi_minus") {
        psi = basis_amplitudes(4, {{0b00, kInvSqrt2}, {0b11, -kInvSqrt2}});
    } else if (name == "bell_psi_plus") {
        psi = basis_amplitudes(4, {{0b01, kInvSqrt2}, {0b10, kInvSqrt2}});
    } else if (name == "bell_psi_minus") {
        psi = basis_amplitudes(4, {{0b01, kInvSqrt2}, {0b10, -kInvSqrt2}});
    } else {
        throw InvalidInput("unknown two-qubit state name: " + std::string(name));
    }
    return TwoQubitState::from_matrix(ComplexMatrix::projector(psi));
}

ThreeQubitState named_three_qubit(std::string_view name) {
    std::vector<Complex> psi;
    if (name == "ghz") {
        psi = basis_amplitudes(8, {{0b000, kInvSqrt2}, {0b111, kInvSqrt2}});
    } else if (name == "w") {
        psi = basis_amplitudes(8, {{0b001, kInvSqrt3}, {0b010, kInvSqrt3}, {0b100, kInvSqrt3}});
    } else {
        throw InvalidInput("unknown three-qubit state name: " + std::string(name));
    }
    return ThreeQubitState::from_matrix(ComplexMatrix::projector(psi));
}

AnyState named_state(std::string_view name) {
    if (name == "ghz" || name == "w") return named_three_qubit(name);
    return named_two_qubit(name);
}

EnsembleKind parse_ensemble_kind(std::string_view name) {
    if (name == "haar_pure_2q") return EnsembleKind::HaarPure2q;
    if (name == "ginibre_mixed_2q") return EnsembleKind::GinibreMixed2q;
    if (name == "haar_pure_3q") return EnsembleKind::HaarPure3q;
    if (name == "ginibre_mixed_3q") return EnsembleKind::GinibreMixed3q;
    throw InvalidInput("unknown ensemble kind: " + std::string(name));
}

std::string_view to_string(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::HaarPure2q: return "haar_pure_2q";
        case EnsembleKind::GinibreMixed2q: return "ginibre_mixed_2q";
        case EnsembleKind::HaarPure3q: return "haar_pure_3q";
        case EnsembleKind::GinibreMixed3q: return "ginibre_mixed_3q";
    }
    return "unknown";
}

int qubit_count(EnsembleKind kind) {
    return (kind == EnsembleKind::HaarPure2q || kind == EnsembleKind::GinibreMixed2q) ? 2 : 3;
}

AnyState sample_state(EnsembleKind kind, std::uint64_t seed, std::size_t index) {
    Rng rng = Rng(seed).substream(index);
    const std::size_t dim = std::size_t{1} << qubit_count(kind);
    auto complex_gaussian = [&rng] {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        return Complex(re, im);
    };

    ComplexMatrix rho;
    if (kind == EnsembleKind::HaarPure2q || kind == EnsembleKind::HaarPure3q) {
        std::vector<Complex> psi(dim);
        double norm2 = 0.0;
        for (auto& amp : psi) {
            amp = complex_gaussian();
            norm2 += std::norm(amp);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& amp : psi) amp *= inv;
        rho = ComplexMatrix::projector(psi);
    } else {
        ComplexMatrix g(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) g(i, j) = complex_gaussian();
        rho = matmul(g, dagger(g));
        rho *= Complex(1.0 / trace(rho).real(), 0.0);
    }
    return validate(rho);
}

std::vector<AnyState> sample_ensemble(const EnsembleSpec& spec) {
    if (spec.count < 1) throw InvalidInput("sample_ensemble: count must be at least 1");
    std::vector<AnyState> out;
    out.reserve(spec.count);
    for (std::size_t k = 0; k < spec.count; ++k) out.push_back(sample_state(spec.kind, spec.seed, k));
    return out;
}

ComplexMatrix random_unitary_2x2(Rng& rng) {
    Complex a(rng.gaussian(), rng.gaussian());
    Complex b(rng.gaussian(), rng.gaussian());
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    return ComplexMatrix(2, {a, -std::conj(b), b, std::conj(a)});
}

std::string matrix_digest(const ComplexMatrix& m) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](double x) {
        const auto bits = std::bit_cast<std::uint64_t>(x);
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (bits >> (8 * byte)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& z : m.entries()) {
        mix(z.real());
        mix(z.imag());
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace steerscope

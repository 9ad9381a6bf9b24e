#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "steerscope/matcore.hpp"
#include "steerscope/rng.hpp"

namespace steerscope {

inline constexpr double kStateTolerance = 1e-10;
// With repair enabled, negative eigenvalues down to this value are clamped.
inline constexpr double kRepairFloor = -1e-6;

struct ValidationOptions {
    double tolerance = kStateTolerance;
    bool repair = false;
};

// Density matrix on n qubits that is Hermitian, unit-trace and PSD.
// Only obtainable through validate() or the named constructors below.
template <int NQubits>
class QubitState {
public:
    static constexpr int n_qubits = NQubits;
    static constexpr std::size_t dim = std::size_t{1} << NQubits;

    const ComplexMatrix& matrix() const noexcept { return matrix_; }

    // Validates `m` and wraps it. Throws ValidationError or InvalidInput.
    static QubitState from_matrix(const ComplexMatrix& m, ValidationOptions options = {});

private:
    explicit QubitState(ComplexMatrix m) : matrix_(std::move(m)) {}
    ComplexMatrix matrix_;
};

using TwoQubitState = QubitState<2>;
using ThreeQubitState = QubitState<3>;
using AnyState = std::variant<TwoQubitState, ThreeQubitState>;

// Dispatches on dimension (4 or 8).
AnyState validate(const ComplexMatrix& m, ValidationOptions options = {});

// Local Bloch vectors and correlation matrix; row index of t is Alice's
// Pauli, column index Bob's. Pauli order is x, y, z.
struct BlochDecomposition {
    Vec3 r{};
    Vec3 s{};
    RealMatrix3 t;
};

BlochDecomposition decompose(const TwoQubitState& state);
// rho = (I + r.sigma x I + I x s.sigma + sum t_ij sigma_i x sigma_j) / 4,
// then validated (throws ValidationError when not PSD).
TwoQubitState compose(const BlochDecomposition& d);
// Same sum without validation.
ComplexMatrix compose_matrix(const BlochDecomposition& d);

TwoQubitState werner(double p);

// bell_phi_plus, bell_phi_minus, bell_psi_plus, bell_psi_minus, ghz, w.
AnyState named_state(std::string_view name);
TwoQubitState named_two_qubit(std::string_view name);
ThreeQubitState named_three_qubit(std::string_view name);

enum class EnsembleKind { HaarPure2q, GinibreMixed2q, HaarPure3q, GinibreMixed3q };

EnsembleKind parse_ensemble_kind(std::string_view name);
std::string_view to_string(EnsembleKind kind);
int qubit_count(EnsembleKind kind);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::GinibreMixed2q;
    std::size_t count = 1;
    std::uint64_t seed = 0;
};

// Sample `index` of the ensemble; depends only on (kind, seed, index).
AnyState sample_state(EnsembleKind kind, std::uint64_t seed, std::size_t index);
std::vector<AnyState> sample_ensemble(const EnsembleSpec& spec);

// Random single-qubit unitary, Haar distributed.
ComplexMatrix random_unitary_2x2(Rng& rng);

// FNV-1a over the bit patterns of the entries, as 16 hex digits.
std::string matrix_digest(const ComplexMatrix& m);

}  // namespace steerscope

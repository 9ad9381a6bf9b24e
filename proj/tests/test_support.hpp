#pragma once

// Shared helpers for the unit tests: random inputs and brute-force oracles
// that do not go through the library code paths they check.

#include <cmath>
#include <vector>

#include "steerscope/matcore.hpp"
#include "steerscope/rng.hpp"

namespace steerscope::testing {

inline ComplexMatrix random_matrix(Rng& rng, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(rng.gaussian(), rng.gaussian());
    return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) {
    ComplexMatrix g = random_matrix(rng, dim);
    ComplexMatrix h = g + dagger(g);
    h *= 0.5;
    return h;
}

// Partial trace by explicit tensor indexing: rho[(i0 i1 .. )(j0 j1 ..)],
// summing every traced qubit's row and column bits together.
inline ComplexMatrix brute_partial_trace(const ComplexMatrix& rho, int n, const std::vector<int>& keep) {
    const std::size_t full = std::size_t{1} << n;
    const std::size_t out_dim = std::size_t{1} << keep.size();
    ComplexMatrix out(out_dim);
    for (std::size_t row = 0; row < full; ++row) {
        for (std::size_t col = 0; col < full; ++col) {
            auto qbit = [n](std::size_t idx, int q) { return (idx >> (n - 1 - q)) & 1U; };
            bool traced_match = true;
            for (int q = 0; q < n; ++q) {
                bool kept = false;
                for (int k : keep) kept = kept || k == q;
                if (!kept && qbit(row, q) != qbit(col, q)) traced_match = false;
            }
            if (!traced_match) continue;
            std::size_t r = 0, c = 0;
            for (int k : keep) {
                r = (r << 1) | qbit(row, k);
                c = (c << 1) | qbit(col, k);
            }
            out(r, c) += rho(row, col);
        }
    }
    return out;
}

inline ComplexMatrix permute_qubits_bc(const ComplexMatrix& rho) {
    // Swap qubits 1 and 2 of a three-qubit operator.
    auto swap = [](std::size_t idx) {
        const std::size_t b1 = (idx >> 1) & 1U, b2 = idx & 1U;
        return (idx & 4U) | (b2 << 1) | b1;
    };
    ComplexMatrix out(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) out(swap(i), swap(j)) = rho(i, j);
    return out;
}

}  // namespace steerscope::testing

#include "steerscope/steering.hpp"

namespace steerscope::testing {

inline Vec3 random_unit(Rng& rng) {
    return vec3::normalized({rng.gaussian(), rng.gaussian(), rng.gaussian()});
}

// Random admissible configuration: the steered party's pair is orthogonal.
inline MeasurementConfiguration random_configuration(Rng& rng, Direction direction) {
    const Vec3 e1 = random_unit(rng);
    const Vec3 raw = random_unit(rng);
    const Vec3 e2 = vec3::normalized(vec3::sub(raw, vec3::scaled(e1, vec3::dot(e1, raw))));
    const Vec3 f1 = random_unit(rng);
    const Vec3 f2 = random_unit(rng);
    if (direction == Direction::BtoA) return {e1, e2, f1, f2};
    return {f1, f2, e1, e2};
}

}  // namespace steerscope::testing

#pragma once

// Small dense linear algebra for qubit registers (dimension <= 8).
//
// Qubit 0 is the leftmost tensor factor: for kron(A, B) the first factor
// acts on qubit 0 (Alice), and basis index bits are read most significant
// first, so |q0 q1 q2> has index 4*q0 + 2*q1 + q2.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace steerscope {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
    // |psi><psi|
    static ComplexMatrix projector(std::span<const Complex> psi);

    std::size_t dim() const noexcept { return dim_; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex factor);

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex factor, ComplexMatrix a);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& a);

// Reduced operator on the qubits listed in `keep` (strictly increasing).
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::span<const int> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::initializer_list<int> keep);

// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);

namespace pauli {
const ComplexMatrix& identity();
const ComplexMatrix& x();
const ComplexMatrix& y();
const ComplexMatrix& z();
// sigma_1, sigma_2, sigma_3 for index 0, 1, 2.
const ComplexMatrix& by_index(int i);
// u . sigma
ComplexMatrix along(const Vec3& u);
}  // namespace pauli

struct HermitianEigensystem {
    std::vector<double> values;           // descending
    std::vector<std::vector<Complex>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic complex Jacobi. Rejects input with max |a - a^dagger| > tol.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a, double tol = 1e-10);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol = 1e-10);

class RealMatrix3 {
public:
    RealMatrix3() = default;
    explicit RealMatrix3(const std::array<std::array<double, 3>, 3>& rows) : m_(rows) {}

    static RealMatrix3 identity();
    static RealMatrix3 diagonal(double d0, double d1, double d2);

    double& operator()(int row, int col) { return m_[row][col]; }
    double operator()(int row, int col) const { return m_[row][col]; }

    RealMatrix3 transposed() const;
    bool operator==(const RealMatrix3&) const = default;

private:
    std::array<std::array<double, 3>, 3> m_{};
};

RealMatrix3 operator*(const RealMatrix3& a, const RealMatrix3& b);
Vec3 operator*(const RealMatrix3& m, const Vec3& v);
double max_abs_diff(const RealMatrix3& a, const RealMatrix3& b);
double frobenius_norm(const RealMatrix3& a);
double trace(const RealMatrix3& a);

struct Sym3Eigensystem {
    Vec3 values;                 // descending
    std::array<Vec3, 3> vectors;  // orthonormal, vectors[k] pairs with values[k]
};

// Cyclic real Jacobi. Rejects input with max |m - m^t| > tol.
Sym3Eigensystem sym3_eigensystem(const RealMatrix3& m, double tol = 1e-10);

namespace vec3 {
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 scaled(const Vec3& a, double f);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 sub(const Vec3& a, const Vec3& b);
Vec3 normalized(const Vec3& a);
// Some unit vector orthogonal to a (a nonzero).
Vec3 any_orthogonal(const Vec3& a);
}  // namespace vec3

}  // namespace steerscope

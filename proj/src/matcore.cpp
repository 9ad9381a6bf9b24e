#include "steerscope/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <type_traits>

#include "steerscope/errors.hpp"

namespace steerscope {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw InvalidInput("ComplexMatrix: entry count does not equal dim^2");
    }
    for (const auto& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidInput("ComplexMatrix: non-finite entry");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
    return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> psi) {
    ComplexMatrix m(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
        for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw InvalidInput("matrix sum: dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw InvalidInput("matrix difference: dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor) {
    for (auto& z : entries_) z *= factor;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex factor, ComplexMatrix a) { return a *= factor; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw InvalidInput("matmul: dimension mismatch");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex sum{};
    for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
    return sum;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::span<const int> keep) {
    if (n_qubits < 1 || n_qubits > 16) throw InvalidInput("partial_trace: bad qubit count");
    if (rho.dim() != (std::size_t{1} << n_qubits))
        throw InvalidInput("partial_trace: matrix dimension is not 2^n_qubits");
    if (keep.empty()) throw InvalidInput("partial_trace: empty qubit subset");
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 0 || keep[k] >= n_qubits)
            throw InvalidInput("partial_trace: qubit index out of range");
        if (k > 0 && keep[k] <= keep[k - 1])
            throw InvalidInput("partial_trace: qubit subset must be strictly increasing");
    }

    std::vector<int> traced;
    for (int q = 0; q < n_qubits; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);

    const int n_keep = static_cast<int>(keep.size());
    const std::size_t out_dim = std::size_t{1} << n_keep;
    const std::size_t env_dim = std::size_t{1} << traced.size();

    // Bit position of qubit q inside a full index (qubit 0 is most significant).
    auto bit = [n_qubits](int q) { return n_qubits - 1 - q; };
    auto scatter = [&](std::size_t sub, std::span<const int> qubits) {
        std::size_t full = 0;
        const int m = static_cast<int>(qubits.size());
        for (int k = 0; k < m; ++k)
            if ((sub >> (m - 1 - k)) & 1U) full |= std::size_t{1} << bit(qubits[k]);
        return full;
    };

    ComplexMatrix out(out_dim);
    for (std::size_t i = 0; i < out_dim; ++i) {
        const std::size_t fi = scatter(i, keep);
        for (std::size_t j = 0; j < out_dim; ++j) {
            const std::size_t fj = scatter(j, keep);
            Complex sum{};
            for (std::size_t e = 0; e < env_dim; ++e) {
                const std::size_t fe = scatter(e, traced);
                sum += rho(fi | fe, fj | fe);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::initializer_list<int> keep) {
    return partial_trace(rho, n_qubits, std::span<const int>(keep.begin(), keep.size()));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw InvalidInput("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    return worst;
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& z : a.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

bool all_finite(const ComplexMatrix& a) {
    return std::all_of(a.entries().begin(), a.entries().end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

namespace pauli {

const ComplexMatrix& identity() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}
const ComplexMatrix& x() {
    static const ComplexMatrix m(2, {0.0, 1.0, 1.0, 0.0});
    return m;
}
const ComplexMatrix& y() {
    static const ComplexMatrix m(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
    return m;
}
const ComplexMatrix& z() {
    static const ComplexMatrix m(2, {1.0, 0.0, 0.0, -1.0});
    return m;
}
const ComplexMatrix& by_index(int i) {
    switch (i) {
        case 0: return x();
        case 1: return y();
        case 2: return z();
        default: throw InvalidInput("pauli::by_index: index must be 0, 1 or 2");
    }
}
ComplexMatrix along(const Vec3& u) {
    return ComplexMatrix(2, {Complex(u[2], 0.0), Complex(u[0], -u[1]), Complex(u[0], u[1]),
                             Complex(-u[2], 0.0)});
}

}  // namespace pauli

namespace {

constexpr int kMaxSweeps = 100;

// Cyclic Jacobi on a dense n x n self-adjoint matrix stored row-major.
// On return `a` is (numerically) diagonal and the columns of `v` hold the
// eigenvectors. For complex input each pivot is first rotated to a real
// value by a diagonal phase, then annihilated with a real Givens rotation.
template <typename Scalar>
void jacobi(std::vector<Scalar>& a, std::vector<Scalar>& v, std::size_t n) {
    auto at = [n](std::vector<Scalar>& m, std::size_t i, std::size_t j) -> Scalar& {
        return m[i * n + j];
    };
    v.assign(n * n, Scalar{});
    for (std::size_t i = 0; i < n; ++i) at(v, i, i) = Scalar{1};

    double total = 0.0;
    for (const auto& s : a) total += std::norm(s);
    const double threshold = 1e-13 * (1.0 + std::sqrt(total));

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) off += std::norm(at(a, i, j));
        if (std::sqrt(off) <= threshold) return;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq_abs = std::abs(at(a, p, q));
                if (apq_abs == 0.0) continue;

                if constexpr (std::is_same_v<Scalar, Complex>) {
                    // Multiply column q by e^{-i phi} and row q by e^{i phi}
                    // so that a(p,q) becomes |a(p,q)|.
                    const Complex phase = std::conj(at(a, p, q)) / apq_abs;
                    for (std::size_t k = 0; k < n; ++k) at(a, k, q) *= phase;
                    for (std::size_t k = 0; k < n; ++k) at(a, q, k) *= std::conj(phase);
                    for (std::size_t k = 0; k < n; ++k) at(v, k, q) *= phase;
                    at(a, p, q) = apq_abs;
                    at(a, q, p) = apq_abs;
                }

                const double app = std::real(at(a, p, p));
                const double aqq = std::real(at(a, q, q));
                const double apq = std::real(at(a, p, q));  // real after the phase step
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar akp = at(a, k, p), akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar apk = at(a, p, k), aqk = at(a, q, k);
                    at(a, p, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar vkp = at(v, k, p), vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
                at(a, p, q) = Scalar{};
                at(a, q, p) = Scalar{};
            }
        }
    }
}

// Indices of the diagonal sorted by descending value; ties keep Jacobi order.
template <typename Scalar>
std::vector<std::size_t> descending_order(const std::vector<Scalar>& a, std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return std::real(a[i * n + i]) > std::real(a[j * n + j]);
    });
    return order;
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a, double tol) {
    const std::size_t n = a.dim();
    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) asym = std::max(asym, std::abs(a(i, j) - std::conj(a(j, i))));
    if (asym > tol) throw InvalidInput("hermitian_eigensystem: matrix is not Hermitian");

    std::vector<Complex> work(a.entries().begin(), a.entries().end());
    // Symmetrize so rounding-level asymmetry does not leak into the rotations.
    for (std::size_t i = 0; i < n; ++i) {
        work[i * n + i] = work[i * n + i].real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (work[i * n + j] + std::conj(work[j * n + i]));
            work[i * n + j] = avg;
            work[j * n + i] = std::conj(avg);
        }
    }
    std::vector<Complex> v;
    jacobi(work, v, n);

    HermitianEigensystem out;
    for (std::size_t idx : descending_order(work, n)) {
        out.values.push_back(work[idx * n + idx].real());
        std::vector<Complex> col(n);
        for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + idx];
        out.vectors.push_back(std::move(col));
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol) {
    return hermitian_eigensystem(a, tol).values;
}

RealMatrix3 RealMatrix3::identity() { return diagonal(1.0, 1.0, 1.0); }

RealMatrix3 RealMatrix3::diagonal(double d0, double d1, double d2) {
    RealMatrix3 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    return m;
}

RealMatrix3 RealMatrix3::transposed() const {
    RealMatrix3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(j, i) = m_[i][j];
    return t;
}

RealMatrix3 operator*(const RealMatrix3& a, const RealMatrix3& b) {
    RealMatrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double sum = 0.0;
            for (int k = 0; k < 3; ++k) sum += a(i, k) * b(k, j);
            out(i, j) = sum;
        }
    return out;
}

Vec3 operator*(const RealMatrix3& m, const Vec3& v) {
    Vec3 out{};
    for (int i = 0; i < 3; ++i) out[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
    return out;
}

double max_abs_diff(const RealMatrix3& a, const RealMatrix3& b) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

double frobenius_norm(const RealMatrix3& a) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

double trace(const RealMatrix3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

Sym3Eigensystem sym3_eigensystem(const RealMatrix3& m, double tol) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!std::isfinite(m(i, j))) throw InvalidInput("sym3_eigensystem: non-finite entry");
    if (max_abs_diff(m, m.transposed()) > tol)
        throw InvalidInput("sym3_eigensystem: matrix is not symmetric");

    std::vector<double> work(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) work[i * 3 + j] = 0.5 * (m(i, j) + m(j, i));
    std::vector<double> v;
    jacobi(work, v, 3);

    Sym3Eigensystem out{};
    int k = 0;
    for (std::size_t idx : descending_order(work, 3)) {
        out.values[k] = work[idx * 3 + idx];
        out.vectors[k] = {v[0 * 3 + idx], v[1 * 3 + idx], v[2 * 3 + idx]};
        ++k;
    }
    return out;
}

namespace vec3 {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Vec3 scaled(const Vec3& a, double f) { return {a[0] * f, a[1] * f, a[2] * f}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 normalized(const Vec3& a) { return scaled(a, 1.0 / norm(a)); }

Vec3 any_orthogonal(const Vec3& a) {
    // Cross with the axis least aligned with a.
    int axis = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(a[i]) < std::abs(a[axis])) axis = i;
    Vec3 e{};
    e[axis] = 1.0;
    return normalized(cross(a, e));
}

}  // namespace vec3

}  // namespace steerscope

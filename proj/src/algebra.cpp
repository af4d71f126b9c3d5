#include "hmono/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hmono {

HalfInt HalfInt::from_double(double v) {
    const double twice = 2.0 * v;
    const double rounded = std::round(twice);
    if (!std::isfinite(v) || std::abs(twice - rounded) > 1e-12) {
        std::ostringstream msg;
        msg << "value " << v << " is not a half-integer";
        throw InputError(msg.str());
    }
    return HalfInt(static_cast<int>(rounded));
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw InputError("entry count does not match matrix shape");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m.mark_hermitian();
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m.mark_hermitian();
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    out.hermitian_ = hermitian_;
    return out;
}

CVector ComplexMatrix::column(std::size_t c) const {
    CVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

double ComplexMatrix::max_asymmetry() const {
    if (!is_square()) throw InputError("hermiticity is only defined for square matrices");
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

void ComplexMatrix::check_hermitian(double tol) const {
    if (!hermitian_) return;
    const double asym = max_asymmetry();
    if (asym > tol) {
        std::ostringstream msg;
        msg << "matrix flagged hermitian has max|M - M^dagger| = " << asym << " > " << tol;
        throw InputError(msg.str());
    }
}

double ComplexMatrix::max_abs() const {
    double worst = 0.0;
    for (const auto& z : data_) worst = std::max(worst, std::abs(z));
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

namespace {
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << what << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
            << b.cols();
        throw InputError(msg.str());
    }
}
}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "matrix addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    hermitian_ = hermitian_ && o.hermitian_;
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "matrix subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    hermitian_ = hermitian_ && o.hermitian_;
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    hermitian_ = hermitian_ && s.imag() == 0.0;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: inner dimensions differ");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

CVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
    if (a.cols_ != v.size()) throw InputError("matrix-vector product: dimension mismatch");
    CVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < a.cols_; ++j) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

double norm(std::span<const Complex> v) {
    double sum = 0.0;
    for (const auto& z : v) sum += std::norm(z);
    return std::sqrt(sum);
}

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket) {
    if (bra.size() != ket.size()) throw InputError("inner product: dimension mismatch");
    Complex acc{};
    for (std::size_t i = 0; i < bra.size(); ++i) acc += std::conj(bra[i]) * ket[i];
    return acc;
}

VectorOperator angular_momentum_matrices(HalfInt j) {
    if (j.twice() < 0) throw InputError("angular momentum j must be non-negative");
    const int dim = j.twice() + 1;
    const double jj = j.value();
    ComplexMatrix jx(dim, dim), jy(dim, dim), jz(dim, dim);
    // index k carries m = j - k
    for (int k = 0; k < dim; ++k) {
        const double m = jj - k;
        jz(k, k) = m;
        if (k + 1 < dim) {
            // <m|J+|m-1> = sqrt(j(j+1) - m(m-1))
            const double raise = std::sqrt(jj * (jj + 1.0) - m * (m - 1.0));
            jx(k, k + 1) = 0.5 * raise;
            jx(k + 1, k) = 0.5 * raise;
            jy(k, k + 1) = Complex(0.0, -0.5 * raise);
            jy(k + 1, k) = Complex(0.0, 0.5 * raise);
        }
    }
    jx.mark_hermitian();
    jy.mark_hermitian();
    jz.mark_hermitian();
    return {std::move(jx), std::move(jy), std::move(jz)};
}

VectorOperator angular_momentum_matrices(double j) {
    if (!(j >= 0.0)) throw InputError("angular momentum j must be non-negative");
    return angular_momentum_matrices(HalfInt::from_double(j));
}

VectorOperator pauli_matrices() {
    auto half = angular_momentum_matrices(HalfInt::from_twice(1));
    for (auto& s : half) s *= 2.0;
    return half;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t p = b.rows(), q = b.cols();
    ComplexMatrix out(a.rows() * p, a.cols() * q);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < p; ++k)
                for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = aij * b(k, l);
        }
    out.mark_hermitian(a.hermitian() && b.hermitian());
    return out;
}

namespace {
void require_square_pair(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        std::ostringstream msg;
        msg << what << " requires square operands of equal dimension, got " << a.rows() << "x" << a.cols()
            << " and " << b.rows() << "x" << b.cols();
        throw InputError(msg.str());
    }
}
}  // namespace

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_pair(a, b, "commutator");
    return a * b - b * a;
}

ComplexMatrix anticommutator_half(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_pair(a, b, "anticommutator");
    ComplexMatrix out = (a * b + b * a) * Complex(0.5);
    out.mark_hermitian(a.hermitian() && b.hermitian());
    return out;
}

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& m, const Tolerances& tol) {
    if (!m.is_square()) throw InputError("eigendecomposition requires a square matrix");
    const double asym = m.max_asymmetry();
    if (asym > tol.eig_input_hermitian) {
        std::ostringstream msg;
        msg << "eigendecomposition requires a hermitian matrix; max|M - M^dagger| = " << asym;
        throw InputError(msg.str());
    }

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    // symmetrize away the sub-tolerance asymmetry
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }

    const double scale = a.frobenius_norm();
    const auto off_norm = [&] {
        double sum = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (r != c) sum += std::norm(a(r, c));
        return std::sqrt(sum);
    };

    constexpr int kMaxSweeps = 100;
    int sweeps = 0;
    while (scale > 0.0 && off_norm() >= tol.eig_offdiag * scale) {
        if (sweeps == kMaxSweeps) throw std::runtime_error("Jacobi eigensolver failed to converge");
        ++sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                const double mag = std::abs(b);
                if (mag == 0.0) continue;
                const Complex phase = std::conj(b) / mag;  // e^{-i arg b}
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(1.0, theta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;
                // W = diag(1, phase) * [[c, s], [-s, c]] on the (p, q) plane
                const Complex w_pp = c, w_pq = s, w_qp = -s * phase, w_qq = c * phase;

                for (std::size_t r = 0; r < n; ++r) {
                    const Complex ap = a(r, p), aq = a(r, q);
                    a(r, p) = ap * w_pp + aq * w_qp;
                    a(r, q) = ap * w_pq + aq * w_qq;
                    const Complex vp = v(r, p), vq = v(r, q);
                    v(r, p) = vp * w_pp + vq * w_qp;
                    v(r, q) = vp * w_pq + vq * w_qq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex ap = a(p, k), aq = a(q, k);
                    a(p, k) = std::conj(w_pp) * ap + std::conj(w_qp) * aq;
                    a(q, k) = std::conj(w_pq) * ap + std::conj(w_qq) * aq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition out;
    out.sweeps = sweeps;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

Complex expectation(std::span<const Complex> state, const ComplexMatrix& m, const Tolerances& tol) {
    if (!m.is_square() || m.rows() != state.size()) throw InputError("expectation: dimension mismatch");
    const double len = norm(state);
    if (std::abs(len - 1.0) > tol.normalization) {
        std::ostringstream msg;
        msg << "expectation requires a normalized state, got norm " << len;
        throw InputError(msg.str());
    }
    return inner(state, m * state);
}

}  // namespace hmono

// Dense complex linear algebra and angular-momentum primitives.
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hmono/constants.hpp"

namespace hmono {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Exact half-integer, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }

    /// Rejects values that are not an integer multiple of 1/2.
    static HalfInt from_double(double v);

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

/// Row-major dense complex matrix. The hermitian flag is metadata set by
/// whoever builds the operator; check_hermitian() verifies it.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::span<const Complex> entries() const { return data_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool hermitian() const { return hermitian_; }
    ComplexMatrix& mark_hermitian(bool flag = true) {
        hermitian_ = flag;
        return *this;
    }

    ComplexMatrix adjoint() const;
    CVector column(std::size_t c) const;

    /// max_ij |M_ij - conj(M_ji)|; square matrices only.
    double max_asymmetry() const;
    /// Throws InputError if flagged hermitian but max_asymmetry() exceeds tol.
    void check_hermitian(double tol) const;

    double max_abs() const;
    double frobenius_norm() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend CVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
    bool hermitian_ = false;
};

/// max entrywise |A - B|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

double norm(std::span<const Complex> v);
Complex inner(std::span<const Complex> bra, std::span<const Complex> ket);

/// Components x, y, z of an angular-momentum vector operator.
using VectorOperator = std::array<ComplexMatrix, 3>;

/// Spin-j matrices in units of hbar, basis ordered m = j, j-1, ..., -j.
VectorOperator angular_momentum_matrices(HalfInt j);
VectorOperator angular_momentum_matrices(double j);

/// Pauli matrices sigma_1, sigma_2, sigma_3.
VectorOperator pauli_matrices();

/// Kronecker product; (A (x) B)[i*p + k, j*q + l] = A[i,j] B[k,l] with B p-by-q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// AB - BA. Both operands square with equal dimension.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Symmetrized product (AB + BA)/2.
ComplexMatrix anticommutator_half(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // orthonormal columns, column k pairs with values[k]
    int sweeps = 0;
};

/// Cyclic complex Jacobi; stops when the off-diagonal Frobenius norm drops
/// below tol.eig_offdiag * ||M||_F.
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& m,
                                                const Tolerances& tol = Tolerances::defaults());

/// <state|M|state>; state must be normalized to tol.normalization.
Complex expectation(std::span<const Complex> state, const ComplexMatrix& m,
                    const Tolerances& tol = Tolerances::defaults());

}  // namespace hmono

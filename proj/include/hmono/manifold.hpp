// The degenerate n-manifold of hydrogen: parabolic labels, the SO(4)
// generators L and A, and the parabolic <-> spherical basis change.
//
// A is normalized so that J1 = (L + A)/2 and J2 = (L - A)/2 are two commuting
// spin-j algebras with j = (n - 1)/2. The parabolic state |n n1 n2 m> is the
// product state |j m1> (x) |j m2> with m1 - m2 = n1 - n2 and m1 + m2 = m.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hmono/algebra.hpp"

namespace hmono {

/// Parabolic quantum numbers obeying n = n1 + n2 + |m| + 1.
struct ParabolicLabel {
    int n = 1;
    int n1 = 0;
    int n2 = 0;
    int m = 0;

    /// Electric quantum number n1 - n2, the A3 eigenvalue in units of hbar.
    int q() const { return n1 - n2; }
    bool valid() const;
    /// Throws InputError naming the violated constraint.
    void validate() const;
    std::string to_string() const;

    friend bool operator==(const ParabolicLabel&, const ParabolicLabel&) = default;
};

struct Su2Pair {
    HalfInt m1;
    HalfInt m2;
    friend bool operator==(const Su2Pair&, const Su2Pair&) = default;
};

struct SphericalLabel {
    int l = 0;
    int m = 0;
    friend bool operator==(const SphericalLabel&, const SphericalLabel&) = default;
};

/// All labels of manifold n, ordered by descending q, then descending m,
/// then descending n1.
std::vector<ParabolicLabel> enumerate_parabolic(int n);

/// m1 = (m + n1 - n2)/2, m2 = (m - n1 + n2)/2.
Su2Pair parabolic_to_su2(const ParabolicLabel& label);
/// Inverse of parabolic_to_su2 on manifold n.
ParabolicLabel su2_to_parabolic(int n, Su2Pair pair);

/// <j1 m1; j2 m2 | l m> by the Racah closed form, Condon-Shortley phase.
/// Invalid couplings give 0.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt l, HalfInt m);

struct ManifoldBasis {
    int n = 1;
    std::vector<ParabolicLabel> labels;
    std::vector<Su2Pair> su2;                // su2[k] pairs with labels[k]
    std::vector<SphericalLabel> spherical;   // l = 0..n-1, m = l..-l
    ComplexMatrix spherical_from_parabolic;  // column c is spherical[c] over labels

    std::size_t dim() const { return labels.size(); }
    /// Position of label in the canonical order; throws if absent.
    std::size_t index_of(const ParabolicLabel& label) const;
    /// Unit vector of a basis label.
    CVector basis_vector(const ParabolicLabel& label) const;
};

/// Spherical labels and the unitary whose columns express |n l m> in the
/// parabolic basis.
struct SphericalTransform {
    std::vector<SphericalLabel> labels;
    ComplexMatrix unitary;
};
SphericalTransform spherical_transform(int n);

ManifoldBasis make_basis(int n);

struct So4Generators {
    int n = 1;
    VectorOperator L;  // units of hbar
    VectorOperator A;  // units of hbar
    ManifoldBasis basis;

    /// L^2 = sum_a L_a L_a.
    ComplexMatrix L_squared() const;
    ComplexMatrix A_squared() const;
    /// sum_a (L_a A_a + A_a L_a)/2.
    ComplexMatrix L_dot_A() const;
};

So4Generators build_so4(int n);

}  // namespace hmono

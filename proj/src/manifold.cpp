#include "hmono/manifold.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace hmono {

bool ParabolicLabel::valid() const {
    return n >= 1 && n1 >= 0 && n2 >= 0 && n == n1 + n2 + std::abs(m) + 1;
}

void ParabolicLabel::validate() const {
    if (n < 1) throw InputError("parabolic label " + to_string() + ": n must be >= 1");
    if (n1 < 0 || n2 < 0) throw InputError("parabolic label " + to_string() + ": n1, n2 must be >= 0");
    if (n != n1 + n2 + std::abs(m) + 1)
        throw InputError("parabolic label " + to_string() + ": violates n = n1 + n2 + |m| + 1");
}

std::string ParabolicLabel::to_string() const {
    std::ostringstream s;
    s << "(n=" << n << ", n1=" << n1 << ", n2=" << n2 << ", m=" << m << ")";
    return s.str();
}

std::vector<ParabolicLabel> enumerate_parabolic(int n) {
    if (n < 1) throw InputError("manifold index n must be >= 1");
    std::vector<ParabolicLabel> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int m = -(n - 1); m <= n - 1; ++m)
        for (int n1 = 0; n1 <= n - 1 - std::abs(m); ++n1)
            out.push_back({n, n1, n - 1 - std::abs(m) - n1, m});
    std::sort(out.begin(), out.end(), [](const ParabolicLabel& a, const ParabolicLabel& b) {
        if (a.q() != b.q()) return a.q() > b.q();
        if (a.m != b.m) return a.m > b.m;
        return a.n1 > b.n1;
    });
    return out;
}

Su2Pair parabolic_to_su2(const ParabolicLabel& label) {
    label.validate();
    return {HalfInt::from_twice(label.m + label.q()), HalfInt::from_twice(label.m - label.q())};
}

ParabolicLabel su2_to_parabolic(int n, Su2Pair pair) {
    if (n < 1) throw InputError("manifold index n must be >= 1");
    const int jt = n - 1;  // twice j
    const int t1 = pair.m1.twice(), t2 = pair.m2.twice();
    if (std::abs(t1) > jt || std::abs(t2) > jt || (jt - t1) % 2 != 0 || (jt - t2) % 2 != 0) {
        std::ostringstream msg;
        msg << "(m1, m2) = (" << pair.m1.value() << ", " << pair.m2.value() << ") is not in manifold n=" << n;
        throw InputError(msg.str());
    }
    const int m = (t1 + t2) / 2;
    const int q = (t1 - t2) / 2;
    const int rest = n - 1 - std::abs(m);
    ParabolicLabel label{n, (rest + q) / 2, (rest - q) / 2, m};
    label.validate();
    return label;
}

namespace {

double factorial(int k) {
    static const auto table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (int i = 1; i < 171; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (k < 0 || k > 170) throw InputError("factorial argument out of range");
    return table[k];
}

}  // namespace

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt l, HalfInt m) {
    const int J1 = j1.twice(), M1 = m1.twice(), J2 = j2.twice(), M2 = m2.twice(), L = l.twice(), M = m.twice();
    if (J1 < 0 || J2 < 0 || L < 0) return 0.0;
    if (M != M1 + M2) return 0.0;
    if (std::abs(M1) > J1 || std::abs(M2) > J2 || std::abs(M) > L) return 0.0;
    if ((J1 + M1) % 2 || (J2 + M2) % 2 || (L + M) % 2) return 0.0;
    if (L < std::abs(J1 - J2) || L > J1 + J2 || (J1 + J2 + L) % 2) return 0.0;

    // all arguments below are integers; halve the doubled quantities
    const int a = (J1 + J2 - L) / 2;
    const int b = (J1 - M1) / 2;
    const int c = (J2 + M2) / 2;
    const int d = (L - J2 + M1) / 2;
    const int e = (L - J1 - M2) / 2;

    const double prefactor = std::sqrt((L + 1) * factorial((L + J1 - J2) / 2) * factorial((L - J1 + J2) / 2) *
                                       factorial(a) / factorial((J1 + J2 + L) / 2 + 1)) *
                             std::sqrt(factorial((L + M) / 2) * factorial((L - M) / 2) * factorial((J1 - M1) / 2) *
                                       factorial((J1 + M1) / 2) * factorial((J2 - M2) / 2) *
                                       factorial((J2 + M2) / 2));

    const int k_min = std::max({0, -d, -e});
    const int k_max = std::min({a, b, c});
    long double sum = 0.0L;
    for (int k = k_min; k <= k_max; ++k) {
        const long double denom = static_cast<long double>(factorial(k)) * factorial(a - k) * factorial(b - k) *
                                  factorial(c - k) * factorial(d + k) * factorial(e + k);
        sum += (k % 2 ? -1.0L : 1.0L) / denom;
    }
    return prefactor * static_cast<double>(sum);
}

std::size_t ManifoldBasis::index_of(const ParabolicLabel& label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw InputError("label " + label.to_string() + " is not in this manifold");
    return static_cast<std::size_t>(it - labels.begin());
}

CVector ManifoldBasis::basis_vector(const ParabolicLabel& label) const {
    CVector v(dim());
    v[index_of(label)] = 1.0;
    return v;
}

SphericalTransform spherical_transform(int n) {
    const auto labels = enumerate_parabolic(n);
    const HalfInt j = HalfInt::from_twice(n - 1);

    SphericalTransform out;
    for (int l = 0; l < n; ++l)
        for (int m = l; m >= -l; --m) out.labels.push_back({l, m});

    out.unitary = ComplexMatrix(labels.size(), out.labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const auto pair = parabolic_to_su2(labels[k]);
        for (std::size_t c = 0; c < out.labels.size(); ++c) {
            const auto& s = out.labels[c];
            out.unitary(k, c) =
                clebsch_gordan(j, pair.m1, j, pair.m2, HalfInt::from_int(s.l), HalfInt::from_int(s.m));
        }
    }
    return out;
}

ManifoldBasis make_basis(int n) {
    ManifoldBasis basis;
    basis.n = n;
    basis.labels = enumerate_parabolic(n);
    for (const auto& label : basis.labels) basis.su2.push_back(parabolic_to_su2(label));
    auto transform = spherical_transform(n);
    basis.spherical = std::move(transform.labels);
    basis.spherical_from_parabolic = std::move(transform.unitary);
    return basis;
}

namespace {

ComplexMatrix dot(const VectorOperator& x, const VectorOperator& y) {
    ComplexMatrix out = anticommutator_half(x[0], y[0]);
    out += anticommutator_half(x[1], y[1]);
    out += anticommutator_half(x[2], y[2]);
    return out;
}

}  // namespace

ComplexMatrix So4Generators::L_squared() const { return dot(L, L); }
ComplexMatrix So4Generators::A_squared() const { return dot(A, A); }
ComplexMatrix So4Generators::L_dot_A() const { return dot(L, A); }

So4Generators build_so4(int n) {
    So4Generators gen;
    gen.n = n;
    gen.basis = make_basis(n);

    const HalfInt j = HalfInt::from_twice(n - 1);
    const auto spin = angular_momentum_matrices(j);
    const auto id = ComplexMatrix::identity(static_cast<std::size_t>(n));
    const int jt = n - 1;

    // product index of |j m1> (x) |j m2> for each parabolic label
    std::vector<std::size_t> product_index;
    for (const auto& pair : gen.basis.su2) {
        const auto i1 = static_cast<std::size_t>((jt - pair.m1.twice()) / 2);
        const auto i2 = static_cast<std::size_t>((jt - pair.m2.twice()) / 2);
        product_index.push_back(i1 * n + i2);
    }
    const auto reindex = [&](const ComplexMatrix& prod) {
        const std::size_t d = product_index.size();
        ComplexMatrix out(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) out(r, c) = prod(product_index[r], product_index[c]);
        return out.mark_hermitian(prod.hermitian());
    };

    for (std::size_t a = 0; a < 3; ++a) {
        const auto first = kron(spin[a], id);
        const auto second = kron(id, spin[a]);
        gen.L[a] = reindex(first + second);
        gen.A[a] = reindex(first - second);
    }
    return gen;
}

}  // namespace hmono

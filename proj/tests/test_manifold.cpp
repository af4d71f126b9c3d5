#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "hmono/manifold.hpp"
#include "oracles.hpp"

using namespace hmono;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST_CASE("parabolic labels match an exhaustive scan") {
    CHECK_THROWS_AS(enumerate_parabolic(0), InputError);

    const auto one = enumerate_parabolic(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == ParabolicLabel{1, 0, 0, 0});

    for (int n = 1; n <= 10; ++n) {
        const auto labels = enumerate_parabolic(n);
        const auto scan = oracle::exhaustive_labels(n);
        CHECK(labels.size() == static_cast<std::size_t>(n * n));
        CHECK(scan.size() == labels.size());
        for (const auto& s : scan)
            CHECK(std::find(labels.begin(), labels.end(), ParabolicLabel{s.n, s.n1, s.n2, s.m}) != labels.end());
        for (std::size_t k = 1; k < labels.size(); ++k) {
            const auto& a = labels[k - 1];
            const auto& b = labels[k];
            CHECK((a.q() > b.q() || (a.q() == b.q() && a.m > b.m)));
        }
    }
}

TEST_CASE("n = 2 canonical order") {
    const auto labels = enumerate_parabolic(2);
    const std::vector<ParabolicLabel> expected{{2, 1, 0, 0}, {2, 0, 0, 1}, {2, 0, 0, -1}, {2, 0, 1, 0}};
    CHECK(labels == expected);
}

TEST_CASE("label validation") {
    CHECK(ParabolicLabel{3, 1, 0, 1}.valid());
    CHECK_FALSE(ParabolicLabel{3, 1, 1, 1}.valid());
    CHECK_FALSE(ParabolicLabel{0, 0, 0, 0}.valid());
    CHECK_FALSE(ParabolicLabel{2, -1, 2, 0}.valid());
    CHECK_THROWS_AS(parabolic_to_su2({2, 1, 1, 0}), InputError);
}

TEST_CASE("parabolic to su(2) pairs") {
    auto p = parabolic_to_su2({2, 1, 0, 0});
    CHECK(p.m1 == h(1));
    CHECK(p.m2 == h(-1));
    p = parabolic_to_su2({2, 0, 0, 1});
    CHECK(p.m1 == h(1));
    CHECK(p.m2 == h(1));
    p = parabolic_to_su2({1, 0, 0, 0});
    CHECK(p.m1 == h(0));
    CHECK(p.m2 == h(0));
    CHECK(su2_to_parabolic(2, {h(1), h(-1)}) == ParabolicLabel{2, 1, 0, 0});
    CHECK_THROWS_AS(su2_to_parabolic(2, {h(3), h(1)}), InputError);
    CHECK_THROWS_AS(su2_to_parabolic(3, {h(1), h(0)}), InputError);
}

TEST_CASE("su(2) map is a bijection onto {-j..j}^2 and inverts, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        std::set<std::pair<int, int>> seen;
        for (const auto& label : enumerate_parabolic(n)) {
            const auto p = parabolic_to_su2(label);
            CHECK(std::abs(p.m1.twice()) <= n - 1);
            CHECK(std::abs(p.m2.twice()) <= n - 1);
            seen.insert({p.m1.twice(), p.m2.twice()});
            CHECK(su2_to_parabolic(n, p) == label);
        }
        CHECK(seen.size() == static_cast<std::size_t>(n * n));
    }
}

TEST_CASE("Clebsch-Gordan coefficients") {
    CHECK(clebsch_gordan(h(1), h(1), h(1), h(-1), h(0), h(0)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(clebsch_gordan(h(1), h(-1), h(1), h(1), h(0), h(0)) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(clebsch_gordan(h(1), h(1), h(1), h(1), h(2), h(2)) == doctest::Approx(1.0));
    // selection rules
    CHECK(clebsch_gordan(h(1), h(1), h(1), h(1), h(2), h(0)) == 0.0);
    CHECK(clebsch_gordan(h(2), h(0), h(2), h(0), h(6), h(0)) == 0.0);
    CHECK(clebsch_gordan(h(2), h(4), h(2), h(0), h(2), h(4)) == 0.0);
}

TEST_CASE("Clebsch-Gordan agrees with the ladder-construction oracle, j1, j2 <= 5/2") {
    for (int t1 = 0; t1 <= 5; ++t1)
        for (int t2 = 0; t2 <= 5; ++t2) {
            const oracle::LadderClebschGordan ref(t1, t2);
            double worst = 0.0;
            for (int tJ = std::abs(t1 - t2); tJ <= t1 + t2; tJ += 2)
                for (int tM = -tJ; tM <= tJ; tM += 2)
                    for (int m1 = -t1; m1 <= t1; m1 += 2)
                        for (int m2 = -t2; m2 <= t2; m2 += 2)
                            worst = std::max(worst, std::abs(clebsch_gordan(h(t1), h(m1), h(t2), h(m2), h(tJ), h(tM)) -
                                                             ref(m1, m2, tJ, tM)));
            CAPTURE(t1);
            CAPTURE(t2);
            CHECK(worst <= 1e-12);
        }
}

TEST_CASE("Clebsch-Gordan orthonormality sums, j1 = j2 <= 5/2") {
    for (int tj = 0; tj <= 5; ++tj)
        for (int tl = 0; tl <= 2 * tj; tl += 2)
            for (int tm = -tl; tm <= tl; tm += 2) {
                double sum = 0.0;
                for (int m1 = -tj; m1 <= tj; m1 += 2)
                    for (int m2 = -tj; m2 <= tj; m2 += 2) {
                        const double c = clebsch_gordan(h(tj), h(m1), h(tj), h(m2), h(tl), h(tm));
                        sum += c * c;
                    }
                CHECK(std::abs(sum - 1.0) <= 1e-12);
            }
}

TEST_CASE("build_so4 n = 2: A3 diagonal and signs") {
    const auto gen = build_so4(2);
    // canonical order (q = +1), (q = 0, m = +1), (q = 0, m = -1), (q = -1)
    const double expected[] = {1.0, 0.0, 0.0, -1.0};
    CHECK(max_abs_diff(gen.A[2], ComplexMatrix::diagonal(expected)) == 0.0);
    const auto v = gen.basis.basis_vector({2, 1, 0, 0});
    CHECK(expectation(v, gen.A[2]) == Complex(1.0));
    std::multiset<double> diag;
    for (std::size_t k = 0; k < 4; ++k) diag.insert(gen.A[2](k, k).real());
    CHECK(diag == std::multiset<double>{1.0, -1.0, 0.0, 0.0});
}

TEST_CASE("SO(4) commutator table, Casimirs and A3 diagonal for n <= 6") {
    constexpr int eps[3][3][3] = {
        {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
        {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
        {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
    };
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const auto gen = build_so4(n);
        const auto dim = gen.basis.dim();
        for (int a = 0; a < 3; ++a) {
            CHECK(gen.L[a].max_asymmetry() <= 1e-12);
            CHECK(gen.A[a].max_asymmetry() <= 1e-12);
            CHECK(gen.L[a].hermitian());
            for (int b = 0; b < 3; ++b) {
                ComplexMatrix l_expect(dim, dim), a_expect(dim, dim);
                for (int c = 0; c < 3; ++c)
                    if (eps[a][b][c]) {
                        l_expect += gen.L[c] * Complex(0, eps[a][b][c]);
                        a_expect += gen.A[c] * Complex(0, eps[a][b][c]);
                    }
                CHECK(max_abs_diff(commutator(gen.L[a], gen.L[b]), l_expect) <= 1e-12);
                CHECK(max_abs_diff(commutator(gen.L[a], gen.A[b]), a_expect) <= 1e-12);
                CHECK(max_abs_diff(commutator(gen.A[a], gen.A[b]), l_expect) <= 1e-12);
            }
        }
        CHECK(gen.L_dot_A().max_abs() <= 1e-12);
        CHECK(max_abs_diff(gen.A_squared() + gen.L_squared(), ComplexMatrix::identity(dim) * Complex(n * n - 1.0)) <=
              1e-12);
        for (std::size_t k = 0; k < dim; ++k) CHECK(gen.A[2](k, k).real() == gen.basis.labels[k].q());
        for (std::size_t k = 0; k < dim; ++k) CHECK(gen.L[2](k, k).real() == gen.basis.labels[k].m);
    }
}

TEST_CASE("spherical transform n = 1 and n = 2") {
    const auto one = spherical_transform(1);
    REQUIRE(one.unitary.rows() == 1);
    CHECK(one.unitary(0, 0) == Complex(1.0));

    const auto two = spherical_transform(2);
    REQUIRE(two.labels.front() == SphericalLabel{0, 0});
    // amplitudes over (q=+1), (q=0, m=+1), (q=0, m=-1), (q=-1)
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(two.unitary(0, 0).real() == doctest::Approx(r).epsilon(1e-15));
    CHECK(two.unitary(1, 0) == Complex(0.0));
    CHECK(two.unitary(2, 0) == Complex(0.0));
    CHECK(two.unitary(3, 0).real() == doctest::Approx(-r).epsilon(1e-15));
}

TEST_CASE("spherical columns agree with an eigensolver diagonalization of L^2 and L3") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        const auto gen = build_so4(n);
        const auto& u = gen.basis.spherical_from_parabolic;
        const auto dim = gen.basis.dim();
        // eigenvectors of L^2 + L3 / (4 n) are nondegenerate and sort by (l, m)
        const auto probe = gen.L_squared() + gen.L[2] * Complex(1.0 / (4.0 * n));
        const auto eig = hermitian_eigendecomposition(probe);
        std::multiset<int> ls;
        for (std::size_t k = 0; k < dim; ++k) {
            const double l2 = expectation(eig.vectors.column(k), gen.L_squared()).real();
            const int l = static_cast<int>(std::lround((std::sqrt(1.0 + 4.0 * l2) - 1.0) / 2.0));
            CHECK(std::abs(l2 - l * (l + 1.0)) <= 1e-10);
            ls.insert(l);
            const int m = static_cast<int>(std::lround(expectation(eig.vectors.column(k), gen.L[2]).real()));
            const auto it = std::find(gen.basis.spherical.begin(), gen.basis.spherical.end(), SphericalLabel{l, m});
            REQUIRE(it != gen.basis.spherical.end());
            const auto col = static_cast<std::size_t>(it - gen.basis.spherical.begin());
            CHECK(std::abs(inner(u.column(col), eig.vectors.column(k))) == doctest::Approx(1.0).epsilon(1e-10));
        }
        for (int l = 0; l < n; ++l) CHECK(ls.count(l) == static_cast<std::size_t>(2 * l + 1));
    }
}

TEST_CASE("spherical transform unitarity, L^2 diagonalization and round trip, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto gen = build_so4(n);
        const auto& u = gen.basis.spherical_from_parabolic;
        const auto id = ComplexMatrix::identity(gen.basis.dim());
        CHECK(max_abs_diff(u.adjoint() * u, id) <= 1e-12);
        CHECK(max_abs_diff(u * u.adjoint(), id) <= 1e-12);
        std::vector<double> l2, l3;
        for (const auto& s : gen.basis.spherical) {
            l2.push_back(s.l * (s.l + 1.0));
            l3.push_back(s.m);
        }
        CHECK(max_abs_diff(u.adjoint() * gen.L_squared() * u, ComplexMatrix::diagonal(l2)) <= 1e-12);
        CHECK(max_abs_diff(u.adjoint() * gen.L[2] * u, ComplexMatrix::diagonal(l3)) <= 1e-12);
        std::mt19937_64 rng(n);
        const auto v = oracle::random_unit_vector(rng, gen.basis.dim());
        const auto back = u * (u.adjoint() * v);
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(back[i] - v[i]) <= 1e-12);
    }
}

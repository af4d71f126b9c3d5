// Independent reference computations used to freeze expected values.
// Nothing here calls into the code paths it is used to check.
#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <numbers>
#include <random>
#include <tuple>
#include <vector>

#include "hmono/algebra.hpp"

namespace oracle {

using Complex = std::complex<double>;
constexpr double pi = std::numbers::pi;

/// Naive dense product on row-major storage.
inline std::vector<Complex> matmul(const std::vector<Complex>& a, const std::vector<Complex>& b, int n) {
    std::vector<Complex> c(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex acc{};
            for (int k = 0; k < n; ++k) acc += a[i * n + k] * b[k * n + j];
            c[i * n + j] = acc;
        }
    return c;
}

inline hmono::ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> d;
    hmono::ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex(d(rng), d(rng));
    return m;
}

inline hmono::ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim) {
    auto m = random_matrix(rng, dim, dim);
    hmono::ComplexMatrix h(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    return h.mark_hermitian();
}

inline std::vector<Complex> random_unit_vector(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> d;
    std::vector<Complex> v(dim);
    double s = 0.0;
    for (auto& z : v) {
        z = Complex(d(rng), d(rng));
        s += std::norm(z);
    }
    for (auto& z : v) z /= std::sqrt(s);
    return v;
}

struct Label {
    int n, n1, n2, m;
};

/// Every (n1, n2, m) with n1, n2 >= 0 satisfying n = n1 + n2 + |m| + 1, by exhaustive scan.
inline std::vector<Label> exhaustive_labels(int n) {
    std::vector<Label> out;
    for (int n1 = 0; n1 < n + 2; ++n1)
        for (int n2 = 0; n2 < n + 2; ++n2)
            for (int m = -n - 2; m <= n + 2; ++m)
                if (n == n1 + n2 + std::abs(m) + 1) out.push_back({n, n1, n2, m});
    return out;
}

/// Clebsch-Gordan table for j1 (x) j2 built by lowering from highest-weight
/// states and Gram-Schmidt, Condon-Shortley phase. Keys are doubled quantum
/// numbers (tm1, tm2, tJ, tM).
class LadderClebschGordan {
public:
    LadderClebschGordan(int twice_j1, int twice_j2) : tj1_(twice_j1), tj2_(twice_j2) {
        const int d1 = tj1_ + 1, d2 = tj2_ + 1;
        dim_ = d1 * d2;
        std::map<std::pair<int, int>, std::vector<double>> states;  // (tJ, tM) -> vector
        for (int tJ = tj1_ + tj2_; tJ >= std::abs(tj1_ - tj2_); tJ -= 2) {
            // highest weight: orthogonal to every larger-J state with M = J
            std::vector<double> top;
            for (int i = 0; i < dim_ && top.empty(); ++i) {
                if (tm1(i) + tm2(i) != tJ) continue;
                std::vector<double> v(dim_);
                v[i] = 1.0;
                for (const auto& [key, w] : states)
                    if (key.second == tJ) {
                        double ov = 0.0;
                        for (int k = 0; k < dim_; ++k) ov += w[k] * v[k];
                        for (int k = 0; k < dim_; ++k) v[k] -= ov * w[k];
                    }
                double nn = 0.0;
                for (double x : v) nn += x * x;
                if (nn > 1e-20) {
                    for (double& x : v) x /= std::sqrt(nn);
                    top = v;
                }
            }
            // Condon-Shortley: amplitude with m1 = j1 is positive
            for (int i = 0; i < dim_; ++i)
                if (tm1(i) == tj1_ && std::abs(top[i]) > 1e-14) {
                    if (top[i] < 0)
                        for (double& x : top) x = -x;
                    break;
                }
            states[{tJ, tJ}] = top;
            auto cur = top;
            for (int tM = tJ; tM > -tJ; tM -= 2) {
                const double J = 0.5 * tJ, M = 0.5 * tM;
                auto low = lower(cur);
                const double c = std::sqrt(J * (J + 1) - M * (M - 1));
                for (double& x : low) x /= c;
                states[{tJ, tM - 2}] = low;
                cur = low;
            }
        }
        for (const auto& [key, v] : states)
            for (int i = 0; i < dim_; ++i) table_[std::make_tuple(tm1(i), tm2(i), key.first, key.second)] = v[i];
    }

    double operator()(int tm1v, int tm2v, int tJ, int tM) const {
        const auto it = table_.find(std::make_tuple(tm1v, tm2v, tJ, tM));
        return it == table_.end() ? 0.0 : it->second;
    }

private:
    int tm1(int i) const { return tj1_ - 2 * (i / (tj2_ + 1)); }
    int tm2(int i) const { return tj2_ - 2 * (i % (tj2_ + 1)); }
    int index(int tm1v, int tm2v) const { return ((tj1_ - tm1v) / 2) * (tj2_ + 1) + (tj2_ - tm2v) / 2; }

    std::vector<double> lower(const std::vector<double>& v) const {
        std::vector<double> out(dim_);
        const double j1 = 0.5 * tj1_, j2 = 0.5 * tj2_;
        for (int i = 0; i < dim_; ++i) {
            if (v[i] == 0.0) continue;
            const double m1 = 0.5 * tm1(i), m2 = 0.5 * tm2(i);
            if (tm1(i) > -tj1_) out[index(tm1(i) - 2, tm2(i))] += v[i] * std::sqrt(j1 * (j1 + 1) - m1 * (m1 - 1));
            if (tm2(i) > -tj2_) out[index(tm1(i), tm2(i) - 2)] += v[i] * std::sqrt(j2 * (j2 + 1) - m2 * (m2 - 1));
        }
        return out;
    }

    int tj1_, tj2_, dim_ = 0;
    std::map<std::tuple<int, int, int, int>, double> table_;
};

/// Composite Simpson rule with an even number of panels.
template <class F>
double simpson(F&& f, double a, double b, int panels) {
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Hydrogen radial functions in bohr units.
inline double radial_20(double r) { return (1.0 / std::sqrt(2.0)) * (1.0 - 0.5 * r) * std::exp(-0.5 * r); }
inline double radial_21(double r) { return (1.0 / std::sqrt(24.0)) * r * std::exp(-0.5 * r); }

/// <200|z|210> in bohr: radial integral times <Y00|cos(theta)|Y10>, both by quadrature.
inline double z_matrix_element_200_210() {
    const double radial = simpson([](double r) { return radial_20(r) * radial_21(r) * r * r * r; }, 0.0, 120.0, 200000);
    const double y00 = 1.0 / std::sqrt(4.0 * pi);
    const double y10_norm = std::sqrt(3.0 / (4.0 * pi));
    const double angular =
        2.0 * pi *
        simpson([&](double th) { return y00 * std::cos(th) * y10_norm * std::cos(th) * std::sin(th); }, 0.0, pi, 20000);
    return radial * angular;
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order) {
    std::vector<double> x(order), w(order);
    for (int i = 0; i < order; ++i) {
        double z = std::cos(pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return {x, w};
}

/// Solid angle of a disk of given radius seen from axial distance h and
/// radial offset d, by direct 2D quadrature of h dA / |r|^3 over the disk.
inline double disk_solid_angle_quadrature(double h, double d, double radius, int radial_panels = 64,
                                          int azimuth_points = 2048) {
    const auto [x, w] = gauss_legendre(16);
    h = std::abs(h);
    double total = 0.0;
    const double panel = radius / radial_panels;
    for (int p = 0; p < radial_panels; ++p) {
        const double lo = p * panel;
        for (std::size_t k = 0; k < x.size(); ++k) {
            const double rho = lo + 0.5 * panel * (x[k] + 1.0);
            double ring = 0.0;
            for (int a = 0; a < azimuth_points; ++a) {
                const double phi = 2.0 * pi * a / azimuth_points;
                const double r2 = h * h + rho * rho + d * d - 2.0 * rho * d * std::cos(phi);
                ring += h / (r2 * std::sqrt(r2));
            }
            total += 0.5 * panel * w[k] * rho * ring * (2.0 * pi / azimuth_points);
        }
    }
    return total;
}

}  // namespace oracle

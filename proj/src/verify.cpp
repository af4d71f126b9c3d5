#include "hmono/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hmono/algebra.hpp"
#include "hmono/manifold.hpp"
#include "hmono/monopole.hpp"
#include "hmono/stark.hpp"

namespace hmono {

namespace {

constexpr int kLeviCivita[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

/// max over a, b of |[X_a, Y_b] - i eps_abc Z_c|.
double commutator_table_residual(const VectorOperator& x, const VectorOperator& y, const VectorOperator& z) {
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            ComplexMatrix expected(z[0].rows(), z[0].cols());
            for (int c = 0; c < 3; ++c)
                if (kLeviCivita[a][b][c] != 0) expected += z[c] * Complex(0.0, kLeviCivita[a][b][c]);
            worst = std::max(worst, max_abs_diff(commutator(x[a], y[b]), expected));
        }
    return worst;
}

class Recorder {
public:
    void add(const std::string& name, double value, double tolerance) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            index_[name] = checks_.size();
            checks_.push_back({name, value, tolerance, false});
        } else {
            checks_[it->second].value = std::max(checks_[it->second].value, value);
        }
    }
    std::vector<CheckResult> finish() {
        for (auto& c : checks_) c.passed = std::isfinite(c.value) && c.value <= c.tolerance;
        return std::move(checks_);
    }

private:
    std::vector<CheckResult> checks_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace

std::vector<CheckResult> run_verification(int n_max, const Tolerances& tol) {
    if (n_max < 1 || n_max > 8) throw InputError("verify requires 1 <= n_max <= 8");
    Recorder rec;

    for (int twice_j = 0; twice_j <= 7; ++twice_j) {
        const auto j = angular_momentum_matrices(HalfInt::from_twice(twice_j));
        rec.add("angular_momentum_commutators", commutator_table_residual(j, j, j), tol.commutator);
    }

    const int cg_twice_max = std::max(5, n_max - 1);
    for (int tj = 0; tj <= cg_twice_max; ++tj) {
        const auto j = HalfInt::from_twice(tj);
        for (int tl = 0; tl <= 2 * tj; tl += 2)
            for (int tm = -tl; tm <= tl; tm += 2) {
                double sum = 0.0;
                for (int t1 = -tj; t1 <= tj; t1 += 2)
                    for (int t2 = -tj; t2 <= tj; t2 += 2) {
                        const double c = clebsch_gordan(j, HalfInt::from_twice(t1), j, HalfInt::from_twice(t2),
                                                        HalfInt::from_twice(tl), HalfInt::from_twice(tm));
                        sum += c * c;
                    }
                rec.add("cg_orthonormality", std::abs(sum - 1.0), tol.unitarity);
            }
    }

    const auto sigma = pauli_matrices();
    for (int n = 1; n <= n_max; ++n) {
        const auto gen = build_so4(n);
        const std::size_t dim = gen.basis.dim();
        const auto id = ComplexMatrix::identity(dim);

        double asym = 0.0;
        for (std::size_t a = 0; a < 3; ++a)
            asym = std::max({asym, gen.L[a].max_asymmetry(), gen.A[a].max_asymmetry()});
        rec.add("hermiticity_LA", asym, tol.hermitian);

        rec.add("A1A2_minus_iL3", max_abs_diff(commutator(gen.A[0], gen.A[1]), gen.L[2] * Complex(0.0, 1.0)),
                tol.commutator);
        const double so4 = std::max({commutator_table_residual(gen.L, gen.L, gen.L),
                                     commutator_table_residual(gen.L, gen.A, gen.A),
                                     commutator_table_residual(gen.A, gen.A, gen.L)});
        rec.add("so4_commutators", so4, tol.commutator);
        rec.add("LdotA_zero", gen.L_dot_A().max_abs(), tol.casimir);
        rec.add("casimir_A2_plus_L2",
                max_abs_diff(gen.A_squared() + gen.L_squared(), id * Complex(double(n) * n - 1.0)), tol.casimir);

        double a3 = 0.0, a3_off = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const auto v = gen.basis.basis_vector(gen.basis.labels[k]);
            a3 = std::max(a3, std::abs(expectation(v, gen.A[2], tol) - Complex(gen.basis.labels[k].q())));
            for (std::size_t c = 0; c < dim; ++c)
                if (c != k) a3_off = std::max(a3_off, std::abs(gen.A[2](k, c)));
        }
        rec.add("A3_expectation", a3, tol.diagonal);
        rec.add("A3_offdiagonal", a3_off, tol.diagonal);

        double roundtrip = 0.0;
        for (const auto& label : gen.basis.labels)
            if (!(su2_to_parabolic(n, parabolic_to_su2(label)) == label)) roundtrip = 1.0;
        rec.add("su2_roundtrip", roundtrip, 0.0);

        const auto& u = gen.basis.spherical_from_parabolic;
        const auto ud = u.adjoint();
        rec.add("spherical_unitarity", max_abs_diff(ud * u, id), tol.unitarity);
        std::vector<double> l2_expected, l3_expected;
        for (const auto& s : gen.basis.spherical) {
            l2_expected.push_back(double(s.l) * (s.l + 1));
            l3_expected.push_back(s.m);
        }
        rec.add("spherical_L2_diagonal", max_abs_diff(ud * gen.L_squared() * u, ComplexMatrix::diagonal(l2_expected)),
                tol.unitarity);
        rec.add("spherical_L3_preserved", max_abs_diff(ud * gen.L[2] * u, ComplexMatrix::diagonal(l3_expected)),
                tol.unitarity);

        const auto g = g_operator(gen);
        rec.add("G_hermitian", g.matrix.max_asymmetry(), tol.hermitian);
        double closed = 0.0, projection = 0.0, quantized = 0.0, total = 0.0;
        for (const auto& label : gen.basis.labels) {
            const auto orbital = gen.basis.basis_vector(label);
            const double a3_orbital = expectation(orbital, gen.A[2], tol).real();
            for (const Spin s : {Spin::up, Spin::down}) {
                const auto r = magnetic_charge(gen, g, label, s);
                closed = std::max(closed, std::abs(r.g - sign(s) * label.q()));
                projection = std::max(projection, std::abs(r.g - sign(s) * a3_orbital));
                quantized = std::max({quantized, std::abs(r.ratio - std::round(r.ratio)), std::abs(r.ratio - r.g)});
                total += r.g;
            }
        }
        rec.add("charge_closed_form", closed, tol.charge);
        rec.add("spin_projection", projection, tol.charge);
        rec.add("quantization_integer", quantized, tol.ratio);
        rec.add("charge_sum_zero", std::abs(total), tol.charge);

        const auto h = stark_hamiltonian(gen, 1.0);
        rec.add("stark_commutators",
                std::max(commutator(h, gen.A[2]).max_abs(), commutator(h, gen.L[2]).max_abs()), tol.commutator);
        Complex trace{};
        for (std::size_t k = 0; k < dim; ++k) trace += h(k, k);
        rec.add("stark_trace_zero", std::abs(trace), tol.commutator);
        double worst_overlap = 0.0;
        for (const auto& e : stark_states(n, 1e-6, tol).entries)
            worst_overlap = std::max(worst_overlap, 1.0 - e.overlap);
        rec.add("stark_overlap_deficit", worst_overlap, tol.overlap);
    }
    return rec.finish();
}

nlohmann::ordered_json verification_report(int n_max, const std::string& profile,
                                           const std::vector<CheckResult>& checks) {
    nlohmann::ordered_json j;
    j["n_max"] = n_max;
    j["tolerance_profile"] = profile;
    bool all = true;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        all = all && c.passed;
        j["checks"].push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.passed}});
    }
    j["all_pass"] = all;
    return j;
}

}  // namespace hmono

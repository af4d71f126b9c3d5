#include "hmono/monopole.hpp"

#include <cmath>
#include <sstream>

namespace hmono {

std::string_view to_string(Spin s) { return s == Spin::up ? "up" : "down"; }

Spinor::Spinor(Complex up, Complex down, const Tolerances& tol) : amp_{up, down} {
    const double len = norm(amp_);
    if (std::abs(len - 1.0) > tol.normalization) {
        std::ostringstream msg;
        msg << "spinor must be normalized, got norm " << len;
        throw InputError(msg.str());
    }
}

GOperator g_operator(const So4Generators& gen, const UnitSystem& units) {
    const auto sigma = pauli_matrices();
    const std::size_t dim = 2 * gen.basis.dim();
    ComplexMatrix g(dim, dim);
    g.mark_hermitian();
    for (std::size_t a = 0; a < 3; ++a) g += kron(sigma[a], gen.A[a]);
    g *= units.e / units.hbar;
    return {gen.n, std::move(g)};
}

GOperator g_operator(int n, const UnitSystem& units) { return g_operator(build_so4(n), units); }

std::array<double, 3> pauli_expectations(const Spinor& s) {
    const auto sigma = pauli_matrices();
    std::array<double, 3> out{};
    for (std::size_t a = 0; a < 3; ++a) out[a] = expectation(s.amplitudes(), sigma[a]).real();
    return out;
}

CVector product_state(const Spinor& s, std::span<const Complex> orbital) {
    CVector out;
    out.reserve(2 * orbital.size());
    for (const Complex amp : s.amplitudes())
        for (const Complex o : orbital) out.push_back(amp * o);
    return out;
}

double quantization_ratio(const ChargeRecord& record, const UnitSystem& units) {
    // e g / (hbar c) expressed in units of alpha = e^2 / (hbar c)
    const double ratio = units.e * record.g / (units.hbar * units.c());
    return ratio / units.alpha;
}

double charge_expectation(const GOperator& g, std::span<const Complex> state) {
    return expectation(state, g.matrix).real();
}

ChargeRecord magnetic_charge(const So4Generators& gen, const GOperator& g, const ParabolicLabel& label, Spin spin,
                             const UnitSystem& units) {
    label.validate();
    if (label.n != gen.n) throw InputError("label " + label.to_string() + " is not in the supplied manifold");
    const auto state = product_state(Spinor::of(spin), gen.basis.basis_vector(label));
    ChargeRecord rec{label, spin, charge_expectation(g, state), 0.0};
    rec.ratio = quantization_ratio(rec, units);
    return rec;
}

ChargeRecord magnetic_charge(const ParabolicLabel& label, Spin spin, const UnitSystem& units) {
    label.validate();
    const auto gen = build_so4(label.n);
    return magnetic_charge(gen, g_operator(gen, units), label, spin, units);
}

std::vector<ChargeRecord> charge_table(int n, const UnitSystem& units) {
    const auto gen = build_so4(n);
    const auto g = g_operator(gen, units);
    std::vector<ChargeRecord> out;
    out.reserve(2 * gen.basis.dim());
    for (const auto& label : gen.basis.labels)
        for (const Spin s : {Spin::up, Spin::down}) out.push_back(magnetic_charge(gen, g, label, s, units));
    return out;
}

}  // namespace hmono

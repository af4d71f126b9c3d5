// Magnetic-charge operator G = (e/hbar) sigma . A on spin (x) orbital space,
// and the charges it assigns to Stark (x) spin product states.
#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "hmono/algebra.hpp"
#include "hmono/manifold.hpp"

namespace hmono {

enum class Spin { up, down };

std::string_view to_string(Spin s);
inline int sign(Spin s) { return s == Spin::up ? +1 : -1; }

/// Normalized two-component spinor (up, down).
class Spinor {
public:
    Spinor(Complex up, Complex down, const Tolerances& tol = Tolerances::defaults());

    static Spinor alpha() { return Spinor(1.0, 0.0); }
    static Spinor beta() { return Spinor(0.0, 1.0); }
    static Spinor of(Spin s) { return s == Spin::up ? alpha() : beta(); }

    Complex up() const { return amp_[0]; }
    Complex down() const { return amp_[1]; }
    std::span<const Complex> amplitudes() const { return amp_; }

private:
    std::array<Complex, 2> amp_;
};

/// G on manifold n; dimension 2n^2 with the spin index varying slowest.
struct GOperator {
    int n = 1;
    ComplexMatrix matrix;  // units of e
};

GOperator g_operator(int n, const UnitSystem& units = UnitSystem::atomic());
GOperator g_operator(const So4Generators& gen, const UnitSystem& units = UnitSystem::atomic());

/// (<sigma_1>, <sigma_2>, <sigma_3>).
std::array<double, 3> pauli_expectations(const Spinor& s);

/// spinor (x) orbital with spin slow.
CVector product_state(const Spinor& s, std::span<const Complex> orbital);

struct ChargeRecord {
    ParabolicLabel label;
    Spin spin = Spin::up;
    double g = 0.0;      // units of e
    double ratio = 0.0;  // e g / (hbar c), units of alpha
};

/// e g / (hbar c) divided by alpha.
double quantization_ratio(const ChargeRecord& record, const UnitSystem& units = UnitSystem::atomic());

/// <Psi (x) s| G |Psi (x) s> on the generators' manifold.
ChargeRecord magnetic_charge(const So4Generators& gen, const GOperator& g, const ParabolicLabel& label, Spin spin,
                             const UnitSystem& units = UnitSystem::atomic());
ChargeRecord magnetic_charge(const ParabolicLabel& label, Spin spin, const UnitSystem& units = UnitSystem::atomic());

/// Charge of an arbitrary (possibly mixed-spin) normalized state on the 2n^2 space.
double charge_expectation(const GOperator& g, std::span<const Complex> state);

/// One record per (label, spin) in canonical label order, spin up first.
std::vector<ChargeRecord> charge_table(int n, const UnitSystem& units = UnitSystem::atomic());

}  // namespace hmono

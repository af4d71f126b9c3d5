// Physical constants, unit systems and numerical tolerances shared by every module.
#pragma once

#include <stdexcept>
#include <string>

namespace hmono {

/// Thrown for inputs that violate an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// CODATA 2018 fine-structure constant.
inline constexpr double kAlphaCodata2018 = 7.2973525693e-3;

/// Atomic units: hbar = e = m_e = 1, c = 1/alpha.
struct UnitSystem {
    double hbar = 1.0;
    double e = 1.0;
    double m_e = 1.0;
    double alpha = kAlphaCodata2018;

    double c() const { return 1.0 / alpha; }

    static UnitSystem atomic(double alpha = kAlphaCodata2018) {
        if (!(alpha > 0.0)) throw InputError("fine-structure constant must be positive");
        UnitSystem u;
        u.alpha = alpha;
        return u;
    }
};

/// Gaussian-CGS values used by the beam simulator.
namespace cgs {
inline constexpr double kElementaryCharge = 4.80320425e-10;  // esu
inline constexpr double kHydrogenMass = 1.6735575e-24;       // g
inline constexpr double kSpeedOfLight = 2.99792458e10;       // cm/s
}  // namespace cgs

/// Unit conversions.
namespace convert {
inline constexpr double kAtomicFieldVPerCm = 5.142206e9;        // 1 a.u. of field in V/cm
inline constexpr double kVoltPerMeterPerStatvoltPerCm = 29979.2458;  // 1 statV/cm in V/m
inline constexpr double kCmPerM = 100.0;
inline constexpr double kGramPerKg = 1000.0;

inline double field_vcm_to_au(double v_per_cm) { return v_per_cm / kAtomicFieldVPerCm; }
inline double field_au_to_vcm(double au) { return au * kAtomicFieldVPerCm; }
inline double field_si_to_cgs(double v_per_m) { return v_per_m / kVoltPerMeterPerStatvoltPerCm; }
}  // namespace convert

/// Every numerical threshold in one place.
struct Tolerances {
    double hermitian = 1e-12;          // max|M - M^dagger| for hermitian-flagged operators
    double eig_input_hermitian = 1e-10;
    double eig_residual = 1e-10;       // relative to ||M||
    double eig_offdiag = 1e-13;        // Jacobi stopping threshold, relative to ||M||_F
    double normalization = 1e-10;
    double commutator = 1e-12;
    double casimir = 1e-12;
    double unitarity = 1e-12;
    double diagonal = 1e-10;           // <A3> vs (n1 - n2)
    double charge = 1e-10;
    double ratio = 1e-12;
    double degeneracy = 1e-10;         // relative grouping of eigenvalues into blocks
    double overlap = 1e-10;

    static Tolerances defaults() { return {}; }

    /// Ten times tighter on every algebraic check.
    static Tolerances strict() {
        Tolerances t;
        t.hermitian /= 10;
        t.commutator /= 10;
        t.casimir /= 10;
        t.unitarity /= 10;
        t.diagonal /= 10;
        t.charge /= 10;
        t.ratio /= 10;
        t.overlap /= 10;
        return t;
    }

    static Tolerances from_profile(const std::string& name) {
        if (name == "default") return defaults();
        if (name == "strict") return strict();
        throw InputError("unknown tolerance profile '" + name + "' (expected default or strict)");
    }
};

}  // namespace hmono

// First-order Stark effect within a degenerate n-manifold.
//
// Inside the manifold z acts as -(3/2) n a0 A3/hbar, so a uniform field F
// along the axis perturbs the manifold by H' = (3/2) n F A3/hbar (hartree,
// sign fixed so that the (n1, n2) = (n - 1, 0) state shifts upward).
#pragma once

#include <span>
#include <vector>

#include "hmono/algebra.hpp"
#include "hmono/manifold.hpp"

namespace hmono {

ComplexMatrix stark_hamiltonian(int n, double field_au);
ComplexMatrix stark_hamiltonian(const So4Generators& gen, double field_au);

struct StarkEntry {
    ParabolicLabel label;
    double shift = 0.0;  // hartree
    CVector eigenvector;  // over the canonical parabolic basis
    double overlap = 0.0;  // |<label|eigenvector>|^2
};

struct StarkSpectrum {
    int n = 1;
    double field = 0.0;  // atomic units
    std::vector<StarkEntry> entries;  // descending shift, ties by descending m
};

/// Diagonalizes H' and resolves degenerate shift blocks with L3.
StarkSpectrum stark_states(int n, double field_au, const Tolerances& tol = Tolerances::defaults());

struct StarkMapRow {
    int n = 1;
    ParabolicLabel label;
    double field = 0.0;
    double shift = 0.0;
};

/// Rows ordered by n, then field point, then canonical label order.
std::vector<StarkMapRow> stark_map(int n_max, std::span<const double> fields_au,
                                   const Tolerances& tol = Tolerances::defaults());

}  // namespace hmono

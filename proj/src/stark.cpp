#include "hmono/stark.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hmono {

ComplexMatrix stark_hamiltonian(const So4Generators& gen, double field_au) {
    if (!(field_au >= 0.0) || !std::isfinite(field_au))
        throw InputError("field strength must be finite and >= 0 (reverse the field axis instead of negating F)");
    ComplexMatrix h = gen.A[2] * Complex(1.5 * gen.n * field_au);
    return h.mark_hermitian();
}

ComplexMatrix stark_hamiltonian(int n, double field_au) { return stark_hamiltonian(build_so4(n), field_au); }

namespace {

struct Block {
    std::size_t begin;
    std::size_t end;
};

std::vector<Block> degenerate_blocks(const std::vector<double>& values, double tol) {
    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!blocks.empty() && std::abs(values[i] - values[i - 1]) <= tol * scale)
            blocks.back().end = i + 1;
        else
            blocks.push_back({i, i + 1});
    }
    return blocks;
}

void fix_phase(CVector& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    const double mag = std::abs(v[best]);
    if (mag == 0.0) return;
    const Complex phase = std::conj(v[best]) / mag;
    for (auto& z : v) z *= phase;
}

}  // namespace

StarkSpectrum stark_states(int n, double field_au, const Tolerances& tol) {
    if (field_au == 0.0)
        throw InputError("Stark labeling requires a symmetry-breaking field: F must be > 0");
    const auto gen = build_so4(n);
    const auto h = stark_hamiltonian(gen, field_au);
    const auto eig = hermitian_eigendecomposition(h, tol);
    const std::size_t dim = gen.basis.dim();

    StarkSpectrum spectrum;
    spectrum.n = n;
    spectrum.field = field_au;

    const auto blocks = degenerate_blocks(eig.values, tol.degeneracy);
    // blocks come out ascending; emit highest shift first
    for (auto block = blocks.rbegin(); block != blocks.rend(); ++block) {
        const std::size_t k = block->end - block->begin;
        ComplexMatrix vb(dim, k);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < k; ++c) vb(r, c) = eig.vectors(r, block->begin + c);

        ComplexMatrix l3_block = vb.adjoint() * (gen.L[2] * vb);
        l3_block.mark_hermitian();
        const auto inner_eig = hermitian_eigendecomposition(l3_block, tol);
        const ComplexMatrix rotated = vb * inner_eig.vectors;

        // inner eigenvalues ascend in m; walk backwards for descending m
        for (std::size_t c = k; c-- > 0;) {
            StarkEntry entry;
            entry.eigenvector = rotated.column(c);
            fix_phase(entry.eigenvector);
            entry.shift = expectation(entry.eigenvector, h, tol).real();

            const int q = static_cast<int>(std::lround(expectation(entry.eigenvector, gen.A[2], tol).real()));
            const int m = static_cast<int>(std::lround(expectation(entry.eigenvector, gen.L[2], tol).real()));
            const auto match = std::find_if(gen.basis.labels.begin(), gen.basis.labels.end(),
                                            [&](const ParabolicLabel& l) { return l.q() == q && l.m == m; });
            if (match == gen.basis.labels.end()) {
                std::ostringstream msg;
                msg << "Stark eigenvector with <A3> ~ " << q << ", <L3> ~ " << m << " matches no parabolic label";
                throw std::runtime_error(msg.str());
            }
            entry.label = *match;
            entry.overlap = std::norm(entry.eigenvector[gen.basis.index_of(entry.label)]);
            if (entry.overlap < 1.0 - tol.overlap) {
                std::ostringstream msg;
                msg << "Stark eigenvector for " << entry.label.to_string() << " has parabolic overlap "
                    << entry.overlap;
                throw std::runtime_error(msg.str());
            }
            spectrum.entries.push_back(std::move(entry));
        }
    }
    return spectrum;
}

std::vector<StarkMapRow> stark_map(int n_max, std::span<const double> fields_au, const Tolerances& tol) {
    if (n_max < 1 || n_max > 10) throw InputError("stark map requires 1 <= n_max <= 10");
    for (double f : fields_au)
        if (!(f > 0.0) || !std::isfinite(f)) throw InputError("stark map field values must be finite and > 0");

    std::vector<StarkMapRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        const auto labels = enumerate_parabolic(n);
        for (double f : fields_au) {
            const auto spectrum = stark_states(n, f, tol);
            for (const auto& label : labels) {
                const auto it = std::find_if(spectrum.entries.begin(), spectrum.entries.end(),
                                             [&](const StarkEntry& e) { return e.label == label; });
                rows.push_back({n, label, f, it->shift});
            }
        }
    }
    return rows;
}

}  // namespace hmono

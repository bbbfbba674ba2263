#pragma once

#include <vector>

#include "ergo/states.hpp"

namespace ergo {

// Work bookkeeping for one bipartite state, all in the ladder's energy unit.
struct GapReport {
    double energy_initial = 0.0;
    double global_ergotropy = 0.0;
    double local_ergotropy_a = 0.0;
    double local_ergotropy_b = 0.0;
    double gap = 0.0;  // global - (local_a + local_b), clamped at 0
};

// Energy after populations are rearranged against the ladder: largest
// population on the lowest level. Both inputs are sorted internally, so the
// result depends only on the multisets.
double passive_energy(const Spectrum& spectrum, const std::vector<double>& energies);

// Tr(rho H) minus the passive energy of its spectrum. H is diagonal with
// energies[i] attached to basis state i (any order); the passive term
// sorts internally. Negative dust within tol.eig is clamped to exactly 0.
double ergotropy(const DensityMatrix& rho, const std::vector<double>& energies,
                 const ToleranceSet& tol = {});

// No unitary work left to extract (single copy).
bool is_passive(const DensityMatrix& rho, const std::vector<double>& energies,
                double tol = 1e-9);

// Global vs summed-local extractable work. The gap is computed from the
// passive energies of the three spectra (marginal A + marginal B - global),
// which equals global minus total local ergotropy identically.
GapReport ergotropic_gap(const BipartiteSystem& sys, const ToleranceSet& tol = {});

// Fast path for pure states: sum_j schmidt_j * (e^A_j + e^B_j) with the
// Schmidt coefficients non-increasing against the ascending ladders.
double pure_gap(const Spectrum& schmidt, const HamiltonianSpec& ham_a,
                const HamiltonianSpec& ham_b);

}  // namespace ergo

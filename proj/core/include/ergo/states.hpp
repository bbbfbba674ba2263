#pragma once

#include <cstdint>
#include <vector>

#include "ergo/linalg.hpp"

namespace ergo {

// Diagonal energy ladder, ascending, ground level pinned to 0.
struct HamiltonianSpec {
    std::vector<double> energies;
    bool is_linear = false;
    double spacing = 0.0;  // defined iff is_linear

    int dim() const noexcept { return static_cast<int>(energies.size()); }
};

// energies = (0, E, 2E, ..., (d-1)E)
HamiltonianSpec linear_hamiltonian(int d, double spacing);

// Sorted multiset of pairwise sums {e^A_i + e^B_j}.
struct GlobalEnergyLadder {
    std::vector<double> energies;  // ascending, length dim(A) * dim(B)
};

GlobalEnergyLadder global_ladder(const HamiltonianSpec& ham_a, const HamiltonianSpec& ham_b);

// Joint state plus its two local ladders, canonicalized so d1 <= d2.
struct BipartiteSystem {
    int d1;
    int d2;
    DensityMatrix rho;  // (d1*d2) x (d1*d2), row-major index i*d2 + j
    HamiltonianSpec ham_a;
    HamiltonianSpec ham_b;
    bool swapped;  // true if subsystems were exchanged to enforce d1 <= d2
};

// Checks dimensions and ladder invariants; swaps subsystems (reindexing rho)
// when d1 > d2 and records it.
BipartiteSystem make_bipartite(const DensityMatrix& rho, int d1, int d2,
                               HamiltonianSpec ham_a, HamiltonianSpec ham_b,
                               const ToleranceSet& tol = {});

// p * singlet + (1-p) * I/4 on two unit-spaced qubits.
BipartiteSystem werner_state(double p);

// x0 phi+ + x1 phi- + x2 psi+ + x3 psi- on two unit-spaced qubits;
// x must be a length-4 spectrum. Both marginals are maximally mixed.
BipartiteSystem bell_diagonal(const Spectrum& x);

// Rank-1 state sum_i sqrt(coeffs[i]) |ii>, embedded along the energy
// diagonal. coeffs must be non-negative and sum to 1, length <= d1 <= d2.
BipartiteSystem pure_from_schmidt(const std::vector<double>& coeffs, int d1, int d2,
                                  double spacing_a = 1.0, double spacing_b = 1.0);

// Convex mixture of n_terms Haar-random pure product states with
// Dirichlet(1,...,1) weights. Deterministic under seed.
BipartiteSystem random_separable(int d1, int d2, int n_terms, std::uint64_t seed,
                                 double spacing_a = 1.0, double spacing_b = 1.0);

// Outer product of a normalized complex Gaussian vector. Deterministic
// under seed.
BipartiteSystem haar_random_pure(int d1, int d2, std::uint64_t seed,
                                 double spacing_a = 1.0, double spacing_b = 1.0);

}  // namespace ergo

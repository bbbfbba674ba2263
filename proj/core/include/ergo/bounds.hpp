#pragma once

#include <optional>
#include <utility>

#include "ergo/ergotropy.hpp"

namespace ergo {

enum class BoundCase { CaseI, CaseII };

enum class Verdict { Entangled, Inconclusive, Separable };

const char* to_string(Verdict v) noexcept;
const char* to_string(BoundCase c) noexcept;

// Separability bound evaluation for one d1 x d2 system with equal
// unit-spacing ladders scaled by `spacing`.
struct BoundReport {
    double y = 0.0;              // spectral cap on the summed local passive energies
    double z = 0.0;              // global passive energy of the spectrum, unit spacing
    double spectral_bound = 0.0; // (y - z) * spacing
    std::optional<std::pair<int, int>> lm;  // populated in CaseI
    std::optional<std::pair<int, int>> kj;  // populated in CaseII
    BoundCase bound_case = BoundCase::CaseI;
    double m_value = 0.0;           // dimension-only separable maximum M(d1, d2)
    double dimension_bound = 0.0;   // m_value * spacing
    double bound = 0.0;             // min(spectral_bound, dimension_bound)
    double gap = 0.0;
    Verdict verdict = Verdict::Inconclusive;
};

// Four-sum spectral form bounding the summed local passive energies from
// the global spectrum alone. x must have length d1*d2.
double spectral_y(const Spectrum& x, int d1, int d2);

// Closed form for the global passive energy of x on the unit-spaced d1 x d2
// ladder, summed along the constant-energy off-diagonals of the level
// table: level t holds t+1 states below d1, d1 states up to d2-1, and
// d1+d2-1-t states above.
double global_passive_z(const Spectrum& x, int d1, int d2);

// Unique integers with l(l+1)/2 + m = d2-1 and 0 <= m <= l.
std::pair<int, int> solve_lm(int d2);

// Unique integers with D1 + (k-1)*d1 + j = d2-1 and 1 <= j <= d1, where
// D1 = d1(d1-1)/2 + d1 - 1. Only defined when d2-1 > D1.
std::pair<int, int> solve_kj(int d1, int d2);

struct DimensionBound {
    double m_value;
    BoundCase bound_case;
    std::pair<int, int> solver;  // (l,m) in CaseI, (k,j) in CaseII
};

// Dimension-only maximum M(d1,d2) of the separable gap, attained at
// uniform marginals.
DimensionBound dimension_bound_m(int d1, int d2);

// Independent evaluation of M(d1,d2): sum_i i*p_i + sum_i i*q_i - R with
// uniform p, q, where R accumulates the q-weights along the off-diagonal
// selection pattern (weights 1..l in CaseI, up to d1-1+k in CaseII).
double uniform_marginal_oracle(int d1, int d2);

// min{(Y-Z)E, M(d1,d2)E} for a given global spectrum. Fills only the bound
// fields of the report; gap and verdict are left untouched.
BoundReport separable_gap_bound(const Spectrum& x, int d1, int d2, double spacing);

// Computes the gap and the separability bound and issues the verdict:
// Entangled when the gap exceeds the bound; for two-qubit states with
// maximally mixed marginals the spectral criterion is two-sided, so the
// non-violating branch returns Separable instead of Inconclusive.
// Requires both ladders linear with one common spacing.
BoundReport certify_entanglement(const BipartiteSystem& sys, const ToleranceSet& tol = {});

// Smallest local dimension D compatible with the gap: the least integer
// with (D-1)*spacing >= gap, floored at 2 for positive gaps, 1 for zero.
int dimension_witness(double gap, double spacing, double tol = 1e-9);

struct MutualInfoGap {
    double delta = 0.0;   // I(A:B)/beta, bits over inverse energy
    double bound = 0.0;   // min(log2 d1, log2 d2)/beta
    bool flagged = false; // delta exceeds the separable bound
};

// Work difference between bath-assisted global and local operations,
// I(A:B)/beta, against its separable cap.
MutualInfoGap mutual_information_gap(const BipartiteSystem& sys, double beta,
                                     const ToleranceSet& tol = {});

}  // namespace ergo

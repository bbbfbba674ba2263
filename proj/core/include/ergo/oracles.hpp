#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ergo/bounds.hpp"
#include "ergo/majorization.hpp"

namespace ergo::oracle {

// Separability via positivity of the partial transpose. Restricted to
// 2x2 and 2x3, where the test is exact.
bool ppt_separable(const BipartiteSystem& sys, const ToleranceSet& tol = {});

// Minimum of sum_i x_i * e_{pi(i)} over permutations pi. Exhaustive up to
// length 8; sorted dot product beyond that (rearrangement inequality gives
// the same value analytically).
double brute_passive_energy(const Spectrum& x, std::vector<double> energies);

enum class SweepFamily { Separable, HaarPure, WernerGrid };

// One sampled state with everything the verdict pipeline produced for it.
struct SweepRecord {
    std::uint64_t seed = 0;
    int d1 = 0;
    int d2 = 0;
    // family parameter: mixing p (werner), product-term count (separable),
    // 0 (haar)
    double param = 0.0;
    std::vector<double> spectrum;
    double gap = 0.0;
    double bound_spectral = 0.0;
    double bound_dimensional = 0.0;
    double bound = 0.0;
    bool nk_holds = false;
    std::optional<bool> ppt_separable;  // only where PPT is exact
    Verdict verdict = Verdict::Inconclusive;
};

struct SweepSummary {
    int n_samples = 0;
    int n_entangled = 0;
    int n_separable = 0;
    int n_inconclusive = 0;
    int n_bound_violations = 0;  // gap > bound + tol.eig
    int n_nk_failures = 0;
};

// Deterministic batch run over one state family; per-sample seeds expand
// from the root seed by a counter so the record list is reproducible.
std::vector<SweepRecord> violation_sweep(int d1, int d2, int n_samples, std::uint64_t seed,
                                         SweepFamily family, const ToleranceSet& tol = {});

SweepSummary summarize(const std::vector<SweepRecord>& records, const ToleranceSet& tol = {});

}  // namespace ergo::oracle

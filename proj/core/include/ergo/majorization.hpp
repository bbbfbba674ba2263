#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ergo/states.hpp"

namespace ergo {

// Outcome of the prefix-sum comparison between two spectra.
struct MajorizationVerdict {
    bool holds = false;
    // 1-based length of the first failing prefix, when any fails.
    std::optional<std::size_t> first_violation_index;
    // cumulative_margin[k] = sum_{i<=k} (q_i - p_i), over zero-padded vectors.
    std::vector<double> cumulative_margin;
};

// Does q majorize p? True iff every prefix sum of p (descending) is bounded
// by the matching prefix sum of q, with equal totals. The shorter vector is
// zero-padded. Each prefix may dip by at most tol.eig; the totals must
// agree within tol.trace.
MajorizationVerdict majorizes(const Spectrum& q, const Spectrum& p,
                              const ToleranceSet& tol = {});

// Both marginal spectra majorize the global spectrum: the joint state is at
// least as disordered as each of its parts. Necessary for separability.
bool nielsen_kempe_holds(const BipartiteSystem& sys, const ToleranceSet& tol = {});

}  // namespace ergo

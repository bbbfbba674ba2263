#include "ergo/majorization.hpp"

#include <algorithm>
#include <cmath>

namespace ergo {

MajorizationVerdict majorizes(const Spectrum& q, const Spectrum& p, const ToleranceSet& tol) {
    const std::size_t n = std::max(q.size(), p.size());

    MajorizationVerdict verdict;
    verdict.cumulative_margin.resize(n);
    verdict.holds = true;

    double sum_q = 0.0;
    double sum_p = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sum_q += k < q.size() ? q[k] : 0.0;  // shorter vector is zero-padded
        sum_p += k < p.size() ? p[k] : 0.0;
        const double margin = sum_q - sum_p;
        verdict.cumulative_margin[k] = margin;
        if (margin < -tol.eig && verdict.holds) {
            verdict.holds = false;
            verdict.first_violation_index = k + 1;
        }
    }
    if (std::abs(verdict.cumulative_margin.back()) > tol.trace) {
        throw ValidationError("majorizes: totals differ, vectors are not both normalized");
    }
    return verdict;
}

bool nielsen_kempe_holds(const BipartiteSystem& sys, const ToleranceSet& tol) {
    const Spectrum global = hermitian_spectrum(sys.rho, tol);
    const Spectrum local_a =
        hermitian_spectrum(partial_trace(sys.rho, sys.d1, sys.d2, Subsystem::A, tol), tol);
    const Spectrum local_b =
        hermitian_spectrum(partial_trace(sys.rho, sys.d1, sys.d2, Subsystem::B, tol), tol);
    return majorizes(local_a, global, tol).holds && majorizes(local_b, global, tol).holds;
}

}  // namespace ergo

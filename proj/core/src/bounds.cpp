#include "ergo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ergo {

namespace {

// D1 = d1(d1-1)/2 + d1 - 1, the last index of the triangular block of the
// unit-spaced level table.
int triangle_mark(int d1) { return d1 * (d1 - 1) / 2 + (d1 - 1); }

void check_bound_dims(int d1, int d2, const char* who) {
    if (d1 < 2 || d2 < d1) {
        std::ostringstream msg;
        msg << who << ": need 2 <= d1 <= d2, got (" << d1 << ", " << d2 << ")";
        throw ValidationError(msg.str());
    }
}

bool maximally_mixed(const DensityMatrix& rho, double tol) {
    const Eigen::Index d = rho.dim();
    const Matrix target = Matrix::Identity(d, d) / static_cast<double>(d);
    return (rho.matrix() - target).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Entangled: return "Entangled";
        case Verdict::Separable: return "Separable";
        case Verdict::Inconclusive: break;
    }
    return "Inconclusive";
}

const char* to_string(BoundCase c) noexcept {
    return c == BoundCase::CaseI ? "CaseI" : "CaseII";
}

double spectral_y(const Spectrum& x, int d1, int d2) {
    check_bound_dims(d1, d2, "spectral_y");
    const int d = d1 * d2;
    if (static_cast<int>(x.size()) != d) {
        throw ValidationError("spectral_y: spectrum length is not d1 * d2");
    }
    double y = 0.0;
    for (int i = 1; i < d1; ++i) y += i * x[i];
    for (int i = 1; i < d2; ++i) y += i * x[i];
    for (int i = d1; i < d; ++i) y += (d1 - 1) * x[i];
    for (int i = d2; i < d; ++i) y += (d2 - 1) * x[i];
    return y;
}

double global_passive_z(const Spectrum& x, int d1, int d2) {
    check_bound_dims(d1, d2, "global_passive_z");
    const int d = d1 * d2;
    if (static_cast<int>(x.size()) != d) {
        throw ValidationError("global_passive_z: spectrum length is not d1 * d2");
    }
    const int D1 = triangle_mark(d1);
    const int D2 = D1 + (d2 - d1) * d1;

    double z = 0.0;
    // Levels 1..d1-1: level i holds i+1 states.
    for (int i = 1; i < d1; ++i)
        for (int k = 0; k <= i; ++k) z += i * x[i * (i + 1) / 2 + k];
    // Levels d1..d2-1: d1 states each.
    for (int k = 1; k <= d2 - d1; ++k)
        for (int j = 1; j <= d1; ++j) z += (d1 - 1 + k) * x[D1 + (k - 1) * d1 + j];
    // Levels d2..d1+d2-2: level d2-1+i holds d1-i states.
    for (int i = 1; i < d1; ++i)
        for (int j = 1; j <= d1 - i; ++j)
            z += (d2 - 1 + i) * x[D2 + (i - 1) * d1 - i * (i - 1) / 2 + j];
    return z;
}

std::pair<int, int> solve_lm(int d2) {
    if (d2 < 2) {
        throw ValidationError("solve_lm: need d2 >= 2");
    }
    const int n = d2 - 1;
    for (int l = 1; l <= n; ++l) {
        const int m = n - l * (l + 1) / 2;
        if (m >= 0 && m <= l) return {l, m};
    }
    throw ValidationError("solve_lm: no solution found");  // unreachable for d2 >= 2
}

std::pair<int, int> solve_kj(int d1, int d2) {
    check_bound_dims(d1, d2, "solve_kj");
    const int D1 = triangle_mark(d1);
    const int n = d2 - 1 - D1;
    if (n < 1) {
        std::ostringstream msg;
        msg << "solve_kj: d2 - 1 <= D1 for (" << d1 << ", " << d2 << "), use solve_lm";
        throw ValidationError(msg.str());
    }
    const int k = (n - 1) / d1 + 1;
    const int j = n - (k - 1) * d1;
    return {k, j};
}

DimensionBound dimension_bound_m(int d1, int d2) {
    check_bound_dims(d1, d2, "dimension_bound_m");
    const int D1 = triangle_mark(d1);
    if (d2 - 1 <= D1) {
        const auto [l, m] = solve_lm(d2);
        const double value = (d1 - 1) / 2.0 + (d2 - 1) / 2.0 -
                             (static_cast<double>(l) / d2) * ((l * l - 1) / 3.0 + m + 1);
        return {value, BoundCase::CaseI, {l, m}};
    }
    const auto [k, j] = solve_kj(d1, d2);
    const double value = (d1 + d2) / 2.0 - 1.0 -
                         (static_cast<double>(d1) / d2) *
                             ((d1 * d1 - 1) / 3.0 + (k - 1) * (d1 - 1 + k / 2.0)) -
                         static_cast<double>(j) * (d1 - 1 + k) / d2;
    return {value, BoundCase::CaseII, {k, j}};
}

double uniform_marginal_oracle(int d1, int d2) {
    check_bound_dims(d1, d2, "uniform_marginal_oracle");
    double value = 0.0;
    for (int i = 1; i < d1; ++i) value += static_cast<double>(i) / d1;
    for (int i = 1; i < d2; ++i) value += static_cast<double>(i) / d2;

    // Subtract R: weights walked along the constant-energy off-diagonals of
    // the selection table, every entry uniform at 1/d2.
    const int D1 = triangle_mark(d1);
    double r = 0.0;
    if (d2 - 1 <= D1) {
        const auto [l, m] = solve_lm(d2);
        for (int i = 1; i < l; ++i)
            for (int c = 0; c <= i; ++c) r += static_cast<double>(i) / d2;
        for (int c = 0; c <= m; ++c) r += static_cast<double>(l) / d2;
    } else {
        const auto [k, j] = solve_kj(d1, d2);
        for (int i = 1; i < d1; ++i)
            for (int c = 0; c <= i; ++c) r += static_cast<double>(i) / d2;
        for (int kp = 1; kp < k; ++kp)
            for (int c = 1; c <= d1; ++c) r += static_cast<double>(d1 - 1 + kp) / d2;
        for (int c = 1; c <= j; ++c) r += static_cast<double>(d1 - 1 + k) / d2;
    }
    return value - r;
}

BoundReport separable_gap_bound(const Spectrum& x, int d1, int d2, double spacing) {
    check_bound_dims(d1, d2, "separable_gap_bound");
    if (spacing <= 0.0) {
        throw ValidationError("separable_gap_bound: spacing must be positive");
    }
    BoundReport report;
    report.y = spectral_y(x, d1, d2);
    report.z = global_passive_z(x, d1, d2);
    report.spectral_bound = (report.y - report.z) * spacing;

    const DimensionBound dim = dimension_bound_m(d1, d2);
    report.bound_case = dim.bound_case;
    report.m_value = dim.m_value;
    report.dimension_bound = dim.m_value * spacing;
    if (dim.bound_case == BoundCase::CaseI) {
        report.lm = dim.solver;
    } else {
        report.kj = dim.solver;
    }
    report.bound = std::min(report.spectral_bound, report.dimension_bound);
    return report;
}

BoundReport certify_entanglement(const BipartiteSystem& sys, const ToleranceSet& tol) {
    if (!sys.ham_a.is_linear || !sys.ham_b.is_linear) {
        throw HamiltonianError("certify_entanglement: both ladders must be linear");
    }
    if (sys.ham_a.spacing != sys.ham_b.spacing) {
        std::ostringstream msg;
        msg << "certify_entanglement: spacings differ (" << sys.ham_a.spacing << " vs "
            << sys.ham_b.spacing << ")";
        throw HamiltonianError(msg.str());
    }
    const double spacing = sys.ham_a.spacing;

    const Spectrum x = hermitian_spectrum(sys.rho, tol);
    BoundReport report = separable_gap_bound(x, sys.d1, sys.d2, spacing);
    report.gap = ergotropic_gap(sys, tol).gap;

    // For two-qubit states with maximally mixed marginals the spectral
    // criterion is necessary and sufficient, so its non-violation decides
    // separability outright.
    const bool two_qubit = sys.d1 == 2 && sys.d2 == 2;
    if (two_qubit &&
        maximally_mixed(partial_trace(sys.rho, 2, 2, Subsystem::A, tol), 1e-8) &&
        maximally_mixed(partial_trace(sys.rho, 2, 2, Subsystem::B, tol), 1e-8)) {
        report.verdict = report.gap > report.spectral_bound + tol.eig ? Verdict::Entangled
                                                                      : Verdict::Separable;
    } else {
        report.verdict =
            report.gap > report.bound + tol.eig ? Verdict::Entangled : Verdict::Inconclusive;
    }
    return report;
}

int dimension_witness(double gap, double spacing, double tol) {
    if (gap < 0.0) {
        throw ValidationError("dimension_witness: gap must be >= 0");
    }
    if (spacing <= 0.0) {
        throw ValidationError("dimension_witness: spacing must be positive");
    }
    if (gap == 0.0) return 1;
    const int witness = 1 + static_cast<int>(std::ceil(gap / spacing - tol));
    return std::max(witness, 2);
}

MutualInfoGap mutual_information_gap(const BipartiteSystem& sys, double beta,
                                     const ToleranceSet& tol) {
    if (beta <= 0.0) {
        throw ValidationError("mutual_information_gap: beta must be positive");
    }
    const double s_a =
        von_neumann_entropy(partial_trace(sys.rho, sys.d1, sys.d2, Subsystem::A, tol), tol);
    const double s_b =
        von_neumann_entropy(partial_trace(sys.rho, sys.d1, sys.d2, Subsystem::B, tol), tol);
    const double s_ab = von_neumann_entropy(sys.rho, tol);

    double info = s_a + s_b - s_ab;
    if (info < 0.0 && info >= -tol.eig) info = 0.0;

    MutualInfoGap result;
    result.delta = info / beta;
    result.bound = std::min(std::log2(static_cast<double>(sys.d1)),
                            std::log2(static_cast<double>(sys.d2))) /
                   beta;
    result.flagged = result.delta > result.bound + tol.eig;
    return result;
}

}  // namespace ergo

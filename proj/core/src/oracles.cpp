#include "ergo/oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace ergo::oracle {

namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

Matrix partial_transpose_b(const Matrix& m, int d1, int d2) {
    Matrix pt(m.rows(), m.cols());
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j)
            for (int i2 = 0; i2 < d1; ++i2)
                for (int j2 = 0; j2 < d2; ++j2)
                    pt(i * d2 + j, i2 * d2 + j2) = m(i * d2 + j2, i2 * d2 + j);
    return pt;
}

}  // namespace

bool ppt_separable(const BipartiteSystem& sys, const ToleranceSet& tol) {
    const bool supported = (sys.d1 == 2 && sys.d2 == 2) || (sys.d1 == 2 && sys.d2 == 3);
    if (!supported) {
        std::ostringstream msg;
        msg << "ppt_separable: exact only for 2x2 and 2x3, got " << sys.d1 << "x" << sys.d2;
        throw ValidationError(msg.str());
    }
    const Matrix pt = partial_transpose_b(sys.rho.matrix(), sys.d1, sys.d2);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw EigensolverError("ppt_separable: eigendecomposition failed");
    }
    return solver.eigenvalues().minCoeff() >= -tol.psd;
}

double brute_passive_energy(const Spectrum& x, std::vector<double> energies) {
    if (x.size() != energies.size()) {
        throw ValidationError("brute_passive_energy: spectrum and ladder lengths differ");
    }
    std::sort(energies.begin(), energies.end());
    if (energies.size() > 8) {
        // Sorted pairing is the permutation minimum (rearrangement inequality).
        double e = 0.0;
        for (std::size_t i = 0; i < energies.size(); ++i) e += x[i] * energies[i];
        return e;
    }
    double best = std::numeric_limits<double>::infinity();
    do {
        double e = 0.0;
        for (std::size_t i = 0; i < energies.size(); ++i) e += x[i] * energies[i];
        best = std::min(best, e);
    } while (std::next_permutation(energies.begin(), energies.end()));
    return best;
}

std::vector<SweepRecord> violation_sweep(int d1, int d2, int n_samples, std::uint64_t seed,
                                         SweepFamily family, const ToleranceSet& tol) {
    if (n_samples < 1) {
        throw ValidationError("violation_sweep: n_samples must be >= 1");
    }
    if (family == SweepFamily::WernerGrid && (d1 != 2 || d2 != 2)) {
        throw ValidationError("violation_sweep: the werner grid is a 2x2 family");
    }
    const bool ppt_exact = (d1 == 2 && d2 == 2) || (d1 == 2 && d2 == 3);

    std::vector<SweepRecord> records;
    records.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const std::uint64_t sample_seed = seed + kSeedStride * static_cast<std::uint64_t>(i + 1);

        SweepRecord rec;
        rec.d1 = d1;
        rec.d2 = d2;

        std::optional<BipartiteSystem> sys;
        switch (family) {
            case SweepFamily::Separable: {
                std::mt19937_64 rng(sample_seed);
                std::uniform_int_distribution<int> terms(1, 2 * d1 * d2);
                const int n_terms = terms(rng);
                sys = random_separable(d1, d2, n_terms, sample_seed);
                rec.seed = sample_seed;
                rec.param = n_terms;
                break;
            }
            case SweepFamily::HaarPure: {
                sys = haar_random_pure(d1, d2, sample_seed);
                rec.seed = sample_seed;
                rec.param = 0.0;
                break;
            }
            case SweepFamily::WernerGrid: {
                const double p = n_samples == 1 ? 0.0 : static_cast<double>(i) / (n_samples - 1);
                sys = werner_state(p);
                rec.seed = seed;
                rec.param = p;
                break;
            }
        }

        rec.spectrum = hermitian_spectrum(sys->rho, tol).values();
        const BoundReport report = certify_entanglement(*sys, tol);
        rec.gap = report.gap;
        rec.bound_spectral = report.spectral_bound;
        rec.bound_dimensional = report.dimension_bound;
        rec.bound = report.bound;
        rec.verdict = report.verdict;
        rec.nk_holds = nielsen_kempe_holds(*sys, tol);
        if (ppt_exact) {
            rec.ppt_separable = ppt_separable(*sys, tol);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

SweepSummary summarize(const std::vector<SweepRecord>& records, const ToleranceSet& tol) {
    SweepSummary summary;
    summary.n_samples = static_cast<int>(records.size());
    for (const SweepRecord& rec : records) {
        switch (rec.verdict) {
            case Verdict::Entangled: ++summary.n_entangled; break;
            case Verdict::Separable: ++summary.n_separable; break;
            case Verdict::Inconclusive: ++summary.n_inconclusive; break;
        }
        if (rec.gap > rec.bound + tol.eig) ++summary.n_bound_violations;
        if (!rec.nk_holds) ++summary.n_nk_failures;
    }
    return summary;
}

}  // namespace ergo::oracle

#include "ergo/ergotropy.hpp"

#include <algorithm>
#include <cmath>

namespace ergo {

namespace {

double clamp_dust(double w, double tol) { return (w < 0.0 && w >= -tol) ? 0.0 : w; }

double diagonal_energy(const DensityMatrix& rho, const std::vector<double>& energies) {
    double e = 0.0;
    for (Eigen::Index i = 0; i < rho.dim(); ++i) {
        e += energies[static_cast<std::size_t>(i)] * rho.matrix()(i, i).real();
    }
    return e;
}

}  // namespace

double passive_energy(const Spectrum& spectrum, const std::vector<double>& energies) {
    if (spectrum.size() != energies.size()) {
        throw ValidationError("passive_energy: spectrum and ladder lengths differ");
    }
    std::vector<double> ladder = energies;
    std::sort(ladder.begin(), ladder.end());
    // Populations are already non-increasing; pair them with the ascending
    // ladder.
    double e = 0.0;
    for (std::size_t i = 0; i < ladder.size(); ++i) e += spectrum[i] * ladder[i];
    return e;
}

double ergotropy(const DensityMatrix& rho, const std::vector<double>& energies,
                 const ToleranceSet& tol) {
    if (static_cast<std::size_t>(rho.dim()) != energies.size()) {
        throw ValidationError("ergotropy: state dimension and ladder length differ");
    }
    const double initial = diagonal_energy(rho, energies);
    const double passive = passive_energy(hermitian_spectrum(rho, tol), energies);
    return clamp_dust(initial - passive, tol.eig);
}

bool is_passive(const DensityMatrix& rho, const std::vector<double>& energies, double tol) {
    return ergotropy(rho, energies) <= tol;
}

GapReport ergotropic_gap(const BipartiteSystem& sys, const ToleranceSet& tol) {
    const DensityMatrix rho_a = partial_trace(sys.rho, sys.d1, sys.d2, Subsystem::A, tol);
    const DensityMatrix rho_b = partial_trace(sys.rho, sys.d1, sys.d2, Subsystem::B, tol);

    const double e_a = diagonal_energy(rho_a, sys.ham_a.energies);
    const double e_b = diagonal_energy(rho_b, sys.ham_b.energies);

    const double passive_a = passive_energy(hermitian_spectrum(rho_a, tol), sys.ham_a.energies);
    const double passive_b = passive_energy(hermitian_spectrum(rho_b, tol), sys.ham_b.energies);
    const GlobalEnergyLadder ladder = global_ladder(sys.ham_a, sys.ham_b);
    const double passive_g = passive_energy(hermitian_spectrum(sys.rho, tol), ladder.energies);

    GapReport report;
    report.energy_initial = e_a + e_b;
    report.global_ergotropy = clamp_dust(report.energy_initial - passive_g, tol.eig);
    report.local_ergotropy_a = clamp_dust(e_a - passive_a, tol.eig);
    report.local_ergotropy_b = clamp_dust(e_b - passive_b, tol.eig);
    report.gap = clamp_dust((passive_a + passive_b) - passive_g, tol.eig);
    return report;
}

double pure_gap(const Spectrum& schmidt, const HamiltonianSpec& ham_a,
                const HamiltonianSpec& ham_b) {
    const std::size_t d1 = std::min(ham_a.energies.size(), ham_b.energies.size());
    if (schmidt.size() > d1) {
        throw ValidationError("pure_gap: Schmidt vector longer than the smaller ladder");
    }
    double gap = 0.0;
    for (std::size_t j = 0; j < schmidt.size(); ++j) {
        gap += schmidt[j] * (ham_a.energies[j] + ham_b.energies[j]);
    }
    return gap;
}

}  // namespace ergo

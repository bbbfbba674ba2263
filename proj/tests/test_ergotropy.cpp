#include <doctest.h>

#include <cmath>
#include <random>

#include "ergo/ergo.hpp"
#include "support.hpp"

using namespace ergo;

namespace {

// p |00><00| + (1-p) |psi-><psi-|: entangled for p < 1, yet globally
// passive once p >= 1/2 because the singlet sits in the degenerate level.
DensityMatrix ground_singlet_mix(double p) {
    Vector singlet(4);
    singlet << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
    Matrix m = (1.0 - p) * (singlet * singlet.adjoint());
    m(0, 0) += p;
    return DensityMatrix(m);
}

DensityMatrix gibbs(const std::vector<double>& energies, double beta) {
    Matrix m = Matrix::Zero(energies.size(), energies.size());
    double z = 0.0;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        m(i, i) = std::exp(-beta * energies[i]);
        z += m(i, i).real();
    }
    return DensityMatrix(m / z);
}

}  // namespace

TEST_CASE("passive_energy pairs populations against the ladder") {
    CHECK(passive_energy(Spectrum({1.0, 0.0, 0.0, 0.0}), {0.0, 1.0, 1.0, 2.0}) ==
          doctest::Approx(0.0));

    for (double p : {0.0, 0.3, 0.7, 1.0}) {
        const Spectrum w({(1 + 3 * p) / 4, (1 - p) / 4, (1 - p) / 4, (1 - p) / 4});
        CHECK(passive_energy(w, {0.0, 1.0, 1.0, 2.0}) == doctest::Approx(1.0 - p).epsilon(1e-12));
    }

    // uniform populations make the ordering irrelevant
    const Spectrum flat({0.25, 0.25, 0.25, 0.25});
    const std::vector<double> ladder{0.3, 2.0, 0.1, 5.0};
    CHECK(passive_energy(flat, ladder) == doctest::Approx((0.3 + 2.0 + 0.1 + 5.0) / 4.0));

    CHECK_THROWS_AS(passive_energy(flat, {0.0, 1.0}), ValidationError);
}

TEST_CASE("ergotropy of simple states") {
    Matrix excited = Matrix::Zero(2, 2);
    excited(1, 1) = 1.0;
    for (double e : {1.0, 2.5}) {
        CHECK(ergotropy(DensityMatrix(excited), {0.0, e}) == doctest::Approx(e).epsilon(1e-12));
    }

    for (double beta : {0.5, 1.0, 4.0}) {
        const std::vector<double> ladder{0.0, 1.0, 2.0};
        CHECK(ergotropy(gibbs(ladder, beta), ladder) == doctest::Approx(0.0));
    }

    // global ladder of two unit qubits in row-major order
    const std::vector<double> hg{0.0, 1.0, 1.0, 2.0};
    for (double p : {0.2, 0.5, 0.9}) {
        const BipartiteSystem w = werner_state(p);
        CHECK(ergotropy(w.rho, hg) == doctest::Approx(p).epsilon(1e-9));
    }

    CHECK_THROWS_AS(ergotropy(DensityMatrix(excited), {0.0, 1.0, 2.0}), ValidationError);
}

TEST_CASE("is_passive on the degenerate-level mixture") {
    const std::vector<double> hg{0.0, 1.0, 1.0, 2.0};
    for (double p : {0.5, 0.7, 1.0}) {
        CHECK(is_passive(ground_singlet_mix(p), hg));
    }
    CHECK_FALSE(is_passive(ground_singlet_mix(0.3), hg));
    CHECK(ergotropy(ground_singlet_mix(0.3), hg) == doctest::Approx(0.4).epsilon(1e-9));

    for (double beta : {0.2, 1.0, 3.0}) {
        const std::vector<double> ladder{0.0, 0.5, 1.5, 2.0};
        CHECK(is_passive(gibbs(ladder, beta), ladder));
    }
}

TEST_CASE("ergotropic_gap on named states") {
    const GapReport w = ergotropic_gap(werner_state(0.5));
    CHECK(w.gap == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(w.local_ergotropy_a == doctest::Approx(0.0));
    CHECK(w.local_ergotropy_b == doctest::Approx(0.0));
    CHECK(w.global_ergotropy == doctest::Approx(0.5).epsilon(1e-9));

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 5; ++trial) {
        // pure product states yield zero gap
        const BipartiteSystem prod = random_separable(2, 3, 1, 1000 + trial);
        CHECK(ergotropic_gap(prod).gap == doctest::Approx(0.0));
    }

    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<double> x = support::random_simplex(4, rng);
        const Spectrum spec(x);
        const GapReport report = ergotropic_gap(bell_diagonal(spec));
        const double expect = 1.0 - (spec[1] + spec[2] + 2 * spec[3]);
        CHECK(report.gap == doctest::Approx(expect).epsilon(1e-9));
    }
    const GapReport bd = ergotropic_gap(bell_diagonal(Spectrum({0.6, 0.2, 0.15, 0.05})));
    CHECK(bd.gap == doctest::Approx(0.55).epsilon(1e-9));
}

TEST_CASE("pure_gap closed forms") {
    for (double ea : {1.0, 0.7}) {
        for (double eb : {1.0, 2.3}) {
            const HamiltonianSpec ha = linear_hamiltonian(2, ea);
            const HamiltonianSpec hb = linear_hamiltonian(2, eb);
            for (double lmin : {0.0, 0.1, 0.5}) {
                const Spectrum schmidt({1.0 - lmin, lmin});
                CHECK(pure_gap(schmidt, ha, hb) ==
                      doctest::Approx(lmin * (ea + eb)).epsilon(1e-12));
            }
        }
    }

    for (int d : {2, 3, 4, 5}) {
        const HamiltonianSpec h = linear_hamiltonian(d, 1.0);
        const Spectrum uniform(std::vector<double>(d, 1.0 / d));
        CHECK(pure_gap(uniform, h, h) == doctest::Approx(d - 1.0).epsilon(1e-12));
    }

    CHECK(pure_gap(Spectrum({1.0}), linear_hamiltonian(2, 1.0), linear_hamiltonian(2, 1.0)) ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(
        pure_gap(Spectrum({0.5, 0.3, 0.2}), linear_hamiltonian(2, 1.0), linear_hamiltonian(3, 1.0)),
        ValidationError);
}

TEST_CASE("pure_gap matches ergotropic_gap on embedded states") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 25; ++trial) {
        const int d1 = 2 + trial % 3;
        const int d2 = d1 + trial % 2;
        const Spectrum schmidt(support::random_simplex(d1, rng));
        const BipartiteSystem sys = pure_from_schmidt(schmidt.values(), d1, d2);
        CHECK(std::abs(pure_gap(schmidt, sys.ham_a, sys.ham_b) - ergotropic_gap(sys).gap) < 1e-9);
    }
}

TEST_CASE("gap via passive energies equals the ergotropy difference") {
    std::mt19937_64 rng(81);
    const ToleranceSet tol;
    for (int trial = 0; trial < 60; ++trial) {
        const int dim1 = trial % 6 == 5 ? 3 : 2 + trial % 2;
        const int dim2 = trial % 6 == 5 ? 4 : 2 + (trial / 2) % 2;
        const DensityMatrix rho = support::random_density(dim1 * dim2, rng);
        const BipartiteSystem sys = make_bipartite(rho, dim1, dim2, linear_hamiltonian(dim1, 1.0),
                                                   linear_hamiltonian(dim2, 1.0));
        const GapReport report = ergotropic_gap(sys);

        // independent route: global and local ergotropies computed directly
        std::vector<double> hg(static_cast<std::size_t>(sys.d1) * sys.d2);
        for (int i = 0; i < sys.d1; ++i)
            for (int j = 0; j < sys.d2; ++j)
                hg[static_cast<std::size_t>(i) * sys.d2 + j] =
                    sys.ham_a.energies[i] + sys.ham_b.energies[j];
        const double w_g = ergotropy(sys.rho, hg);
        const double w_a =
            ergotropy(partial_trace(sys.rho, sys.d1, sys.d2, Subsystem::A), sys.ham_a.energies);
        const double w_b =
            ergotropy(partial_trace(sys.rho, sys.d1, sys.d2, Subsystem::B), sys.ham_b.energies);

        CHECK(std::abs(report.gap - (w_g - w_a - w_b)) < 10 * tol.eig);
        CHECK(report.gap >= -tol.eig);
        CHECK(report.global_ergotropy >=
              report.local_ergotropy_a + report.local_ergotropy_b - tol.eig);
        CHECK(std::abs(report.gap - (report.global_ergotropy - report.local_ergotropy_a -
                                     report.local_ergotropy_b)) < tol.eig);
    }
}

TEST_CASE("passive term ignores the basis of the state") {
    std::mt19937_64 rng(91);
    const GlobalEnergyLadder ladder =
        global_ladder(linear_hamiltonian(2, 1.0), linear_hamiltonian(2, 1.0));
    const DensityMatrix rho = support::random_density(4, rng);
    const double base = passive_energy(hermitian_spectrum(rho), ladder.energies);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix u = support::random_unitary(4, rng);
        const DensityMatrix rotated(u * rho.matrix() * u.adjoint());
        CHECK(std::abs(passive_energy(hermitian_spectrum(rotated), ladder.energies) - base) <
              1e-9);
    }
}

TEST_CASE("gap decreases along disorder mixing of Schmidt vectors") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> mix(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 4;
        const HamiltonianSpec ham = linear_hamiltonian(d, 1.0);
        const Spectrum eta(support::random_simplex(d, rng));
        const Spectrum lambda = support::mixed_toward_uniform(eta, mix(rng));
        REQUIRE(majorizes(eta, lambda).holds);
        CHECK(pure_gap(lambda, ham, ham) >= pure_gap(eta, ham, ham) - 1e-9);
    }
}

TEST_CASE("degenerate-level mixture gap regression") {
    for (double p = 0.0; p <= 1.0; p += 0.05) {
        const BipartiteSystem sys = make_bipartite(
            ground_singlet_mix(p), 2, 2, linear_hamiltonian(2, 1.0), linear_hamiltonian(2, 1.0));
        const double expect = p >= 0.5 ? 0.0 : 1.0 - 2.0 * p;
        CHECK(ergotropic_gap(sys).gap == doctest::Approx(expect).epsilon(1e-9));
    }
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "ergo/ergo.hpp"
#include "support.hpp"

using namespace ergo;

TEST_CASE("majorizes on hand-checked vectors") {
    const MajorizationVerdict pure_tops_mixed =
        majorizes(Spectrum({1.0, 0.0}), Spectrum({0.5, 0.5}));
    CHECK(pure_tops_mixed.holds);
    CHECK_FALSE(pure_tops_mixed.first_violation_index.has_value());

    const MajorizationVerdict mixed_fails = majorizes(Spectrum({0.5, 0.5}), Spectrum({1.0, 0.0}));
    CHECK_FALSE(mixed_fails.holds);
    REQUIRE(mixed_fails.first_violation_index.has_value());
    CHECK(*mixed_fails.first_violation_index == 1);

    // shorter vector is zero-padded before comparison
    const MajorizationVerdict padded =
        majorizes(Spectrum({0.5, 0.5}), Spectrum({0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6}));
    CHECK(padded.holds);
    CHECK(padded.cumulative_margin.size() == 4);
    CHECK(padded.cumulative_margin[0] == doctest::Approx(0.0));
    CHECK(padded.cumulative_margin[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(padded.cumulative_margin[3] == doctest::Approx(0.0));
}

TEST_CASE("majorizes is reflexive") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Spectrum x(support::random_simplex(2 + trial % 6, rng));
        CHECK(majorizes(x, x).holds);
    }
}

TEST_CASE("majorizes is transitive along mixing chains") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> mix(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Spectrum a(support::random_simplex(2 + trial % 5, rng));
        const Spectrum b = support::mixed_toward_uniform(a, mix(rng));
        const Spectrum c = support::mixed_toward_uniform(b, mix(rng));
        REQUIRE(majorizes(a, b).holds);
        REQUIRE(majorizes(b, c).holds);
        CHECK(majorizes(a, c).holds);
    }
}

TEST_CASE("nielsen_kempe_holds on named families") {
    for (int i = 0; i < 200; ++i) {
        CHECK(nielsen_kempe_holds(random_separable(2, 2, 1 + i % 10, 500 + i)));
    }

    CHECK_FALSE(nielsen_kempe_holds(werner_state(0.5)));
    // the failure is already in the first prefix: 1/2 < 5/8
    const Spectrum global = hermitian_spectrum(werner_state(0.5).rho);
    const Spectrum marginal({0.5, 0.5});
    const MajorizationVerdict v = majorizes(marginal, global);
    REQUIRE(v.first_violation_index.has_value());
    CHECK(*v.first_violation_index == 1);
}

TEST_CASE("product states satisfy the criterion with outer-product spectra") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int da = 2 + trial % 2;
        const int db = 2 + (trial / 2) % 2;
        const DensityMatrix sigma = support::random_density(da, rng);
        const DensityMatrix tau = support::random_density(db, rng);
        const DensityMatrix joint(support::kron(sigma.matrix(), tau.matrix()));
        const BipartiteSystem sys = make_bipartite(
            joint, da, db, linear_hamiltonian(da, 1.0), linear_hamiltonian(db, 1.0));
        CHECK(nielsen_kempe_holds(sys));

        // brute-force check: global spectrum is the outer product of the
        // marginal spectra
        const Spectrum sa = hermitian_spectrum(sigma);
        const Spectrum sb = hermitian_spectrum(tau);
        std::vector<double> outer;
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j) outer.push_back(sa[i] * sb[j]);
        const Spectrum expected(outer);
        const Spectrum actual = hermitian_spectrum(joint);
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(std::abs(expected[i] - actual[i]) < 1e-10);
        }
    }
}

TEST_CASE("criterion failure covers every bound violation") {
    std::mt19937_64 rng(33);
    const ToleranceSet tol;
    int violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        // mix of full-rank, pure, and werner samples so both sides of the
        // bound actually occur
        BipartiteSystem sys = [&] {
            switch (trial % 3) {
                case 0:
                    return make_bipartite(support::random_density(4, rng), 2, 2,
                                          linear_hamiltonian(2, 1.0), linear_hamiltonian(2, 1.0));
                case 1: return haar_random_pure(2, 2, 7000 + trial);
                default: return werner_state(static_cast<double>(trial) / 9999.0);
            }
        }();
        const BoundReport report = certify_entanglement(sys);
        if (report.gap > report.bound + tol.eig) {
            ++violations;
            CHECK_FALSE(nielsen_kempe_holds(sys));
        }
    }
    // the sample must actually exercise the implication
    CHECK(violations > 0);
}

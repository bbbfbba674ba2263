#include "ergo/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

namespace ergo {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vector random_gaussian_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(i) = Complex(re, im);
    }
    v.normalize();
    return v;
}

void check_ladder(const HamiltonianSpec& ham, const char* who) {
    if (ham.energies.empty()) {
        throw ValidationError(std::string(who) + ": empty energy ladder");
    }
    if (ham.energies.front() != 0.0) {
        throw ValidationError(std::string(who) + ": ground energy must be 0");
    }
    if (!std::is_sorted(ham.energies.begin(), ham.energies.end())) {
        throw ValidationError(std::string(who) + ": energies must be non-decreasing");
    }
}

HamiltonianSpec qubit_unit() { return linear_hamiltonian(2, 1.0); }

}  // namespace

HamiltonianSpec linear_hamiltonian(int d, double spacing) {
    if (d < 1) {
        throw ValidationError("linear_hamiltonian: dimension must be >= 1");
    }
    if (spacing <= 0.0) {
        std::ostringstream msg;
        msg << "linear_hamiltonian: spacing must be positive, got " << spacing;
        throw ValidationError(msg.str());
    }
    HamiltonianSpec ham;
    ham.energies.resize(d);
    for (int j = 0; j < d; ++j) ham.energies[j] = j * spacing;
    ham.is_linear = true;
    ham.spacing = spacing;
    return ham;
}

GlobalEnergyLadder global_ladder(const HamiltonianSpec& ham_a, const HamiltonianSpec& ham_b) {
    check_ladder(ham_a, "global_ladder");
    check_ladder(ham_b, "global_ladder");
    GlobalEnergyLadder ladder;
    ladder.energies.reserve(ham_a.energies.size() * ham_b.energies.size());
    for (double ea : ham_a.energies)
        for (double eb : ham_b.energies) ladder.energies.push_back(ea + eb);
    std::sort(ladder.energies.begin(), ladder.energies.end());
    return ladder;
}

BipartiteSystem make_bipartite(const DensityMatrix& rho, int d1, int d2,
                               HamiltonianSpec ham_a, HamiltonianSpec ham_b,
                               const ToleranceSet& tol) {
    if (d1 < 1 || d2 < 1) {
        throw ValidationError("make_bipartite: dimensions must be >= 1");
    }
    if (rho.dim() != static_cast<Eigen::Index>(d1) * d2) {
        throw ValidationError("make_bipartite: state dimension is not d1 * d2");
    }
    if (ham_a.dim() != d1 || ham_b.dim() != d2) {
        throw ValidationError("make_bipartite: ladder lengths do not match dimensions");
    }
    check_ladder(ham_a, "make_bipartite");
    check_ladder(ham_b, "make_bipartite");

    if (d1 <= d2) {
        return BipartiteSystem{d1, d2, rho, std::move(ham_a), std::move(ham_b), false};
    }

    // Exchange the subsystems: index (i,j) with i < d1, j < d2 becomes (j,i).
    const Matrix& m = rho.matrix();
    Matrix sw(m.rows(), m.cols());
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j)
            for (int i2 = 0; i2 < d1; ++i2)
                for (int j2 = 0; j2 < d2; ++j2)
                    sw(j * d1 + i, j2 * d1 + i2) = m(i * d2 + j, i2 * d2 + j2);
    return BipartiteSystem{d2, d1, DensityMatrix(sw, tol), std::move(ham_b), std::move(ham_a),
                           true};
}

BipartiteSystem werner_state(double p) {
    if (p < 0.0 || p > 1.0) {
        std::ostringstream msg;
        msg << "werner_state: p must lie in [0, 1], got " << p;
        throw ValidationError(msg.str());
    }
    Vector singlet(4);
    singlet << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
    Matrix m = p * (singlet * singlet.adjoint()) + (1.0 - p) / 4.0 * Matrix::Identity(4, 4);
    return make_bipartite(DensityMatrix(m), 2, 2, qubit_unit(), qubit_unit());
}

BipartiteSystem bell_diagonal(const Spectrum& x) {
    if (x.size() != 4) {
        throw ValidationError("bell_diagonal: spectrum must have length 4");
    }
    const double r = 1.0 / std::sqrt(2.0);
    Vector phi_plus(4), phi_minus(4), psi_plus(4), psi_minus(4);
    phi_plus << r, 0.0, 0.0, r;
    phi_minus << r, 0.0, 0.0, -r;
    psi_plus << 0.0, r, r, 0.0;
    psi_minus << 0.0, r, -r, 0.0;

    Matrix m = x[0] * (phi_plus * phi_plus.adjoint()) + x[1] * (phi_minus * phi_minus.adjoint()) +
               x[2] * (psi_plus * psi_plus.adjoint()) + x[3] * (psi_minus * psi_minus.adjoint());
    return make_bipartite(DensityMatrix(m), 2, 2, qubit_unit(), qubit_unit());
}

BipartiteSystem pure_from_schmidt(const std::vector<double>& coeffs, int d1, int d2,
                                  double spacing_a, double spacing_b) {
    if (d1 < 1 || d2 < 1 || d1 > d2) {
        throw ValidationError("pure_from_schmidt: need 1 <= d1 <= d2");
    }
    if (coeffs.empty() || static_cast<int>(coeffs.size()) > d1) {
        throw ValidationError("pure_from_schmidt: Schmidt rank exceeds d1");
    }
    double sum = 0.0;
    for (double c : coeffs) {
        if (c < 0.0) {
            throw ValidationError("pure_from_schmidt: coefficients must be non-negative");
        }
        sum += c;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "pure_from_schmidt: coefficients sum to " << sum << ", expected 1";
        throw ValidationError(msg.str());
    }

    Vector psi = Vector::Zero(d1 * d2);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        psi(static_cast<Eigen::Index>(i) * d2 + static_cast<Eigen::Index>(i)) =
            std::sqrt(coeffs[i] / sum);
    }
    Matrix m = psi * psi.adjoint();
    return make_bipartite(DensityMatrix(m), d1, d2, linear_hamiltonian(d1, spacing_a),
                          linear_hamiltonian(d2, spacing_b));
}

BipartiteSystem random_separable(int d1, int d2, int n_terms, std::uint64_t seed,
                                 double spacing_a, double spacing_b) {
    if (d1 < 1 || d2 < 1) {
        throw ValidationError("random_separable: dimensions must be >= 1");
    }
    if (n_terms < 1) {
        throw ValidationError("random_separable: n_terms must be >= 1");
    }
    std::mt19937_64 rng(seed);

    // Dirichlet(1,...,1) = normalized unit exponentials.
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> weights(n_terms);
    double total = 0.0;
    for (double& w : weights) {
        w = expo(rng);
        total += w;
    }

    Matrix m = Matrix::Zero(d1 * d2, d1 * d2);
    for (int t = 0; t < n_terms; ++t) {
        const Vector a = random_gaussian_vector(d1, rng);
        const Vector b = random_gaussian_vector(d2, rng);
        const Matrix sigma = a * a.adjoint();
        const Matrix tau = b * b.adjoint();
        m += (weights[t] / total) * kron(sigma, tau);
    }
    return make_bipartite(DensityMatrix(m), d1, d2, linear_hamiltonian(d1, spacing_a),
                          linear_hamiltonian(d2, spacing_b));
}

BipartiteSystem haar_random_pure(int d1, int d2, std::uint64_t seed, double spacing_a,
                                 double spacing_b) {
    if (d1 < 1 || d2 < 1) {
        throw ValidationError("haar_random_pure: dimensions must be >= 1");
    }
    std::mt19937_64 rng(seed);
    const Vector psi = random_gaussian_vector(d1 * d2, rng);
    Matrix m = psi * psi.adjoint();
    return make_bipartite(DensityMatrix(m), d1, d2, linear_hamiltonian(d1, spacing_a),
                          linear_hamiltonian(d2, spacing_b));
}

}  // namespace ergo

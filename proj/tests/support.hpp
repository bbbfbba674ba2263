#pragma once

// Shared randomized-state helpers for the test binaries. Everything is
// seeded by the caller so reruns are reproducible.

#include <Eigen/Dense>
#include <Eigen/QR>

#include <algorithm>
#include <random>
#include <vector>

#include "ergo/ergo.hpp"

namespace support {

inline ergo::Matrix random_ginibre(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ergo::Matrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = ergo::Complex(normal(rng), normal(rng));
    return g;
}

inline ergo::Matrix random_unitary(int n, std::mt19937_64& rng) {
    Eigen::HouseholderQR<ergo::Matrix> qr(random_ginibre(n, rng));
    return qr.householderQ();
}

// Hilbert-Schmidt random full-rank state.
inline ergo::DensityMatrix random_density(int n, std::mt19937_64& rng) {
    const ergo::Matrix g = random_ginibre(n, rng);
    ergo::Matrix m = g * g.adjoint();
    m /= m.trace().real();
    return ergo::DensityMatrix(m);
}

// Uniform point on the probability simplex (unsorted).
inline std::vector<double> random_simplex(int n, std::mt19937_64& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
        x = expo(rng);
        sum += x;
    }
    for (double& x : v) x /= sum;
    return v;
}

inline ergo::Matrix kron(const ergo::Matrix& a, const ergo::Matrix& b) {
    ergo::Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Mixing toward the uniform distribution can only spread the vector out,
// so the result is majorized by the input.
inline ergo::Spectrum mixed_toward_uniform(const ergo::Spectrum& x, double t) {
    std::vector<double> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        v[i] = (1.0 - t) * x[i] + t / static_cast<double>(x.size());
    }
    return ergo::Spectrum(v);
}

}  // namespace support

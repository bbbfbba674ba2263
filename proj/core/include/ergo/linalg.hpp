#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "ergo/errors.hpp"

namespace ergo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Absolute tolerances shared by validation and verdict logic.
struct ToleranceSet {
    double herm = 1e-10;   // entrywise |M - M†|
    double trace = 1e-9;   // |tr - 1|
    double psd = 1e-9;     // most negative admissible eigenvalue
    double eig = 1e-9;     // spectral comparisons and verdict margins
};

// Probability vector kept in non-increasing order, entries in [0,1],
// rescaled to sum exactly 1.
class Spectrum {
public:
    Spectrum() = default;

    // Canonicalizes the input: entries below -tol.psd or a total farther
    // than tol.trace from 1 are errors; small dips are clipped into [0,1],
    // the vector is sorted descending and renormalized.
    explicit Spectrum(std::vector<double> values, const ToleranceSet& tol = {});

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
};

// Validated density operator: Hermitian, positive semidefinite, unit trace.
// The stored matrix is the cleaned reconstruction (symmetrized, eigenvalues
// clipped into [0,1], trace renormalized).
class DensityMatrix {
public:
    explicit DensityMatrix(const Matrix& m, const ToleranceSet& tol = {});

    Eigen::Index dim() const noexcept { return matrix_.rows(); }
    const Matrix& matrix() const noexcept { return matrix_; }

private:
    Matrix matrix_;
};

enum class Subsystem { A, B };

inline DensityMatrix validate_density(const Matrix& m, const ToleranceSet& tol = {}) {
    return DensityMatrix(m, tol);
}

// Eigenvalues sorted non-increasing; tiny negatives clipped to zero.
Spectrum hermitian_spectrum(const DensityMatrix& rho, const ToleranceSet& tol = {});

// Trace out one subsystem of a d1 x d2 joint state.
DensityMatrix partial_trace(const DensityMatrix& rho, int d1, int d2, Subsystem keep,
                            const ToleranceSet& tol = {});

// -sum_i lambda_i log2 lambda_i, with 0 log 0 := 0. Base-2 throughout.
double von_neumann_entropy(const DensityMatrix& rho, const ToleranceSet& tol = {});

}  // namespace ergo

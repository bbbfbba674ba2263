#include "ergo/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ergo {

Spectrum::Spectrum(std::vector<double> values, const ToleranceSet& tol)
    : values_(std::move(values)) {
    if (values_.empty()) {
        throw ValidationError("Spectrum: empty probability vector");
    }
    double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(sum - 1.0) > tol.trace) {
        std::ostringstream msg;
        msg << "Spectrum: probabilities sum to " << sum << ", expected 1 within " << tol.trace;
        throw ValidationError(msg.str());
    }
    for (double& v : values_) {
        if (v < -tol.psd) {
            std::ostringstream msg;
            msg << "Spectrum: negative entry " << v << " below -" << tol.psd;
            throw ValidationError(msg.str());
        }
        v = std::clamp(v, 0.0, 1.0);
    }
    std::sort(values_.begin(), values_.end(), std::greater<double>());
    const double clipped = std::accumulate(values_.begin(), values_.end(), 0.0);
    for (double& v : values_) v /= clipped;
}

DensityMatrix::DensityMatrix(const Matrix& m, const ToleranceSet& tol) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw ValidationError("validate_density: matrix must be square and non-empty");
    }
    const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > tol.herm) {
        std::ostringstream msg;
        msg << "validate_density: not Hermitian, max |M - M*| = " << herm_dev
            << " exceeds " << tol.herm;
        throw ValidationError(msg.str());
    }
    Matrix h = 0.5 * (m + m.adjoint());

    const double tr = h.trace().real();
    if (std::abs(tr - 1.0) > tol.trace) {
        std::ostringstream msg;
        msg << "validate_density: trace " << tr << " deviates from 1 beyond " << tol.trace;
        throw ValidationError(msg.str());
    }
    h /= tr;

    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw EigensolverError("validate_density: eigendecomposition failed");
    }
    Eigen::VectorXd evals = solver.eigenvalues();
    if (evals.minCoeff() < -tol.psd) {
        std::ostringstream msg;
        msg << "validate_density: not positive semidefinite, min eigenvalue "
            << evals.minCoeff() << " below -" << tol.psd;
        throw ValidationError(msg.str());
    }
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        evals(i) = std::clamp(evals(i), 0.0, 1.0);
    }
    evals /= evals.sum();

    const Matrix& vecs = solver.eigenvectors();
    Matrix cleaned = vecs * evals.asDiagonal() * vecs.adjoint();
    matrix_ = 0.5 * (cleaned + cleaned.adjoint());
}

Spectrum hermitian_spectrum(const DensityMatrix& rho, const ToleranceSet& tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw EigensolverError("hermitian_spectrum: eigendecomposition failed");
    }
    const Eigen::VectorXd& evals = solver.eigenvalues();
    std::vector<double> values(evals.data(), evals.data() + evals.size());
    return Spectrum(std::move(values), tol);
}

DensityMatrix partial_trace(const DensityMatrix& rho, int d1, int d2, Subsystem keep,
                            const ToleranceSet& tol) {
    if (d1 < 1 || d2 < 1 || rho.dim() != static_cast<Eigen::Index>(d1) * d2) {
        throw ValidationError("partial_trace: state dimension is not d1 * d2");
    }
    const Matrix& m = rho.matrix();
    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(d1, d1);
        for (int i = 0; i < d1; ++i)
            for (int i2 = 0; i2 < d1; ++i2)
                for (int j = 0; j < d2; ++j)
                    out(i, i2) += m(i * d2 + j, i2 * d2 + j);
        return DensityMatrix(out, tol);
    }
    Matrix out = Matrix::Zero(d2, d2);
    for (int j = 0; j < d2; ++j)
        for (int j2 = 0; j2 < d2; ++j2)
            for (int i = 0; i < d1; ++i)
                out(j, j2) += m(i * d2 + j, i * d2 + j2);
    return DensityMatrix(out, tol);
}

double von_neumann_entropy(const DensityMatrix& rho, const ToleranceSet& tol) {
    const Spectrum spec = hermitian_spectrum(rho, tol);
    double s = 0.0;
    for (double v : spec.values()) {
        if (v > 0.0) s -= v * std::log2(v);
    }
    return std::max(s, 0.0);
}

}  // namespace ergo

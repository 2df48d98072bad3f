#pragma once

#include <complex>

#include <Eigen/Dense>

namespace krein {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;
using Index = Eigen::Index;

/// Default relative tolerance for residual checks, relative to the spectral
/// norm of the operators involved.  Dense double-precision eigensolvers
/// deliver ~1e-13 relative accuracy at the dimensions this library targets.
inline constexpr double kDefaultTol = 1e-9;

/// Relative cutoff separating numerically-zero eigenvalues from genuine
/// spectrum: an eigenvalue counts as zero when |lambda| <= kZeroCutoff * max|lambda|.
inline constexpr double kZeroCutoff = 1e-12;

/// Scale a relative tolerance by a norm, never below the tolerance itself.
inline double scaled_tol(double tol, double norm) {
  return tol * (norm > 1.0 ? norm : 1.0);
}

}  // namespace krein

#pragma once

#include <functional>

#include "krein/types.hpp"

namespace krein {

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct Eigh {
  RealVector values;
  Matrix vectors;  // columns are orthonormal eigenvectors
};

Matrix hermitize(const Matrix& a);

/// Eigendecomposition of (a + a^H)/2.  Throws if a is not square.
Eigh eigh(const Matrix& a);

/// Largest singular value; 0 for empty matrices.
double spectral_norm(const Matrix& a);

/// u f(d) u^H for Hermitian input.
Matrix hermitian_function(const Matrix& a, const std::function<double(double)>& f);

Matrix abs_hermitian(const Matrix& a);

/// Sign function with eigenvalues below cutoff_rel * max|lambda| mapped to 0.
Matrix sign_hermitian(const Matrix& a, double cutoff_rel = kZeroCutoff);

/// Square root of a positive semidefinite matrix (negative noise clipped to 0).
Matrix sqrt_psd(const Matrix& a);

/// Numerical rank from singular values with relative threshold.
Index rank_of(const Matrix& a, double tol_rel = kDefaultTol);

/// Moore-Penrose pseudoinverse via SVD with relative threshold.
Matrix pinv(const Matrix& a, double tol_rel = kDefaultTol);

bool is_psd(const Matrix& a, double tol_rel = kDefaultTol);

/// Supremum of x^H n x / x^H h x over the range of h, for Hermitian n (PSD up
/// to noise) and PSD h.  Restriction to range(h) is performed by whitening;
/// throws if the numerator form does not vanish on ker(h), in which case the
/// supremum is infinite.
double pencil_sup(const Matrix& n, const Matrix& h, double cutoff_rel = kZeroCutoff);

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace krein

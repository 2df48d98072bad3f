#pragma once

#include <string>
#include <vector>

#include "krein/space.hpp"

namespace krein {

/// Operator-valued hermitian kernel on a finite ordered point set:
/// K(x, y) = K(y, x)# blockwise.  Functions with finite support on the points
/// are stored as stacked coordinate vectors of length n * dim, block x
/// holding the value at x.
struct HermitianKernel {
  KreinSpace H;
  std::vector<std::string> points;
  std::vector<Matrix> blocks;  // row-major n x n grid of dim x dim blocks

  Index n() const { return static_cast<Index>(points.size()); }
  Index dim() const { return H.dim(); }
  Index total_dim() const { return n() * dim(); }

  const Matrix& block(Index x, Index y) const { return blocks[static_cast<std::size_t>(x * n() + y)]; }
  Matrix& block(Index x, Index y) { return blocks[static_cast<std::size_t>(x * n() + y)]; }

  /// Validates the hermitian property; the closure is never inferred.
  static HermitianKernel make(KreinSpace h, std::vector<std::string> points,
                              std::vector<Matrix> blocks, double tol = kDefaultTol);
  static HermitianKernel zero(KreinSpace h, std::vector<std::string> points);
};

/// Kernels compare in the basis-independent metric: max over blocks of
/// spectral norms.
double kernel_norm(const HermitianKernel& k);
double kernel_distance(const HermitianKernel& a, const HermitianKernel& b);

/// [f, g]_K = sum_{x,y} [K(x,y) f(y), g(x)]_H = <B_K f, g>.
Complex kernel_inner(const HermitianKernel& k, const Vector& f, const Vector& g);

/// The Gram realization: Hermitian matrix with blocks (B_K)_{xy} = J K(x,y).
Matrix big_matrix(const HermitianKernel& k);

/// Inverse of big_matrix: blocks J (B)_{xy}; validates hermitian-ness.
HermitianKernel kernel_from_big(const KreinSpace& h, std::vector<std::string> points,
                                const Matrix& big, double tol = kDefaultTol);

bool is_positive_definite(const HermitianKernel& k, double tol = kDefaultTol);

/// Schwartz condition -L <= K <= L: both B_L - B_K and B_L + B_K PSD.
bool schwartz_check(const HermitianKernel& k, const HermitianKernel& l,
                    double tol = kDefaultTol);

/// The canonical dominant with B_L = |B_K|; positive definite, dominates K,
/// and ker B_L = ker B_K.
HermitianKernel default_dominant(const HermitianKernel& k);

/// Orthonormal coordinates of H_L (the quotient by ker B_L, whitened by B_L)
/// together with the Gram operator of K with respect to L:
///   w: coordinates map F_0 -> H_L (full row rank),
///   w_pinv: its least-squares right inverse,
///   a: Hermitian contraction with [f, g]_K = [A f, g]_L.
struct GramData {
  Matrix w;       // r x (n dim)
  Matrix w_pinv;  // (n dim) x r
  Matrix a;       // r x r Hermitian, ||a|| <= 1
  Index rank = 0;
};

GramData gram_operator(const HermitianKernel& k, const HermitianKernel& l,
                       double tol = kDefaultTol);

struct JordanPair {
  HermitianKernel plus;
  HermitianKernel minus;
};

/// K = K+ - K- with both positive definite; with the default dominant the
/// parts are the spectral positive/negative parts of B_K and have orthogonal
/// ranges.
JordanPair jordan_decompose(const HermitianKernel& k, const HermitianKernel& l,
                            double tol = kDefaultTol);

/// Range-intersection criterion: rank B+ + rank B- = rank(B+ + B-).
bool disjointness_check(const HermitianKernel& plus, const HermitianKernel& minus,
                        double tol = kDefaultTol);

/// Count of eigenvalues of B_K below the zero cutoff.
Index negative_squares(const HermitianKernel& k);

}  // namespace krein

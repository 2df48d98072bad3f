#include "krein/kernel.hpp"

#include <stdexcept>

namespace krein {

HermitianKernel HermitianKernel::make(KreinSpace h, std::vector<std::string> points,
                                      std::vector<Matrix> blocks, double tol) {
  const Index n = static_cast<Index>(points.size());
  const Index d = h.dim();
  if (static_cast<Index>(blocks.size()) != n * n)
    throw std::invalid_argument("HermitianKernel: expected n*n blocks");
  for (const Matrix& b : blocks)
    if (b.rows() != d || b.cols() != d)
      throw std::invalid_argument("HermitianKernel: block shape mismatch");

  HermitianKernel k{std::move(h), std::move(points), std::move(blocks)};
  double scale = kernel_norm(k);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Matrix sharp = k.H.J * k.block(y, x).adjoint() * k.H.J;
      if (spectral_norm(k.block(x, y) - sharp) > scaled_tol(tol, scale))
        throw std::invalid_argument("HermitianKernel: K(x,y) != K(y,x)# at (" +
                                    k.points[static_cast<std::size_t>(x)] + "," +
                                    k.points[static_cast<std::size_t>(y)] + ")");
    }
  return k;
}

HermitianKernel HermitianKernel::zero(KreinSpace h, std::vector<std::string> points) {
  const Index n = static_cast<Index>(points.size());
  const Index d = h.dim();
  std::vector<Matrix> blocks(static_cast<std::size_t>(n * n), Matrix::Zero(d, d));
  return HermitianKernel{std::move(h), std::move(points), std::move(blocks)};
}

double kernel_norm(const HermitianKernel& k) {
  double norm = 0.0;
  for (const Matrix& b : k.blocks) norm = std::max(norm, spectral_norm(b));
  return norm;
}

double kernel_distance(const HermitianKernel& a, const HermitianKernel& b) {
  if (a.n() != b.n() || a.dim() != b.dim())
    throw std::invalid_argument("kernel_distance: shape mismatch");
  double dist = 0.0;
  for (Index x = 0; x < a.n(); ++x)
    for (Index y = 0; y < a.n(); ++y)
      dist = std::max(dist, spectral_norm(a.block(x, y) - b.block(x, y)));
  return dist;
}

Complex kernel_inner(const HermitianKernel& k, const Vector& f, const Vector& g) {
  if (f.size() != k.total_dim() || g.size() != k.total_dim())
    throw std::invalid_argument("kernel_inner: vector length != n*dim");
  Complex sum = 0.0;
  const Index d = k.dim();
  for (Index x = 0; x < k.n(); ++x)
    for (Index y = 0; y < k.n(); ++y)
      sum += indef_inner(k.H, k.block(x, y) * f.segment(y * d, d), g.segment(x * d, d));
  return sum;
}

Matrix big_matrix(const HermitianKernel& k) {
  const Index d = k.dim();
  Matrix big(k.total_dim(), k.total_dim());
  for (Index x = 0; x < k.n(); ++x)
    for (Index y = 0; y < k.n(); ++y)
      big.block(x * d, y * d, d, d) = k.H.J * k.block(x, y);
  return big;
}

HermitianKernel kernel_from_big(const KreinSpace& h, std::vector<std::string> points,
                                const Matrix& big, double tol) {
  const Index n = static_cast<Index>(points.size());
  const Index d = h.dim();
  if (big.rows() != n * d || big.cols() != n * d)
    throw std::invalid_argument("kernel_from_big: size mismatch");
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(n * n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      blocks.push_back(h.J * big.block(x * d, y * d, d, d));
  return HermitianKernel::make(h, std::move(points), std::move(blocks), tol);
}

bool is_positive_definite(const HermitianKernel& k, double tol) {
  return is_psd(big_matrix(k), tol);
}

bool schwartz_check(const HermitianKernel& k, const HermitianKernel& l, double tol) {
  if (k.n() != l.n() || k.dim() != l.dim())
    throw std::invalid_argument("schwartz_check: kernels on different (H, X)");
  const Matrix bk = big_matrix(k);
  const Matrix bl = big_matrix(l);
  return is_psd(bl - bk, tol) && is_psd(bl + bk, tol);
}

HermitianKernel default_dominant(const HermitianKernel& k) {
  return kernel_from_big(k.H, k.points, abs_hermitian(big_matrix(k)));
}

GramData gram_operator(const HermitianKernel& k, const HermitianKernel& l, double tol) {
  if (!schwartz_check(k, l, tol))
    throw std::invalid_argument("gram_operator: Schwartz condition -L <= K <= L fails");
  const Matrix bk = big_matrix(k);
  const Matrix bl = big_matrix(l);
  const Eigh e = eigh(bl);
  const double lmax = e.values.size() ? e.values.cwiseAbs().maxCoeff() : 0.0;
  const double cutoff = kZeroCutoff * lmax;

  std::vector<Index> keep, drop;
  for (Index i = 0; i < e.values.size(); ++i)
    (e.values(i) > cutoff ? keep : drop).push_back(i);
  const Index r = static_cast<Index>(keep.size());

  // Schwartz implies ker B_L subset ker B_K; inconsistent inputs are rejected.
  if (!drop.empty()) {
    Matrix uker(bl.rows(), static_cast<Index>(drop.size()));
    for (std::size_t j = 0; j < drop.size(); ++j)
      uker.col(static_cast<Index>(j)) = e.vectors.col(drop[j]);
    if (spectral_norm(bk * uker) > scaled_tol(tol, spectral_norm(bk)))
      throw std::invalid_argument("gram_operator: B_K does not vanish on ker B_L");
  }

  GramData g;
  g.rank = r;
  g.w.resize(r, bl.rows());
  g.w_pinv.resize(bl.rows(), r);
  for (Index i = 0; i < r; ++i) {
    const double root = std::sqrt(e.values(keep[i]));
    g.w.row(i) = root * e.vectors.col(keep[i]).adjoint();
    g.w_pinv.col(i) = e.vectors.col(keep[i]) / root;
  }
  g.a = hermitize(g.w_pinv.adjoint() * bk * g.w_pinv);
  return g;
}

JordanPair jordan_decompose(const HermitianKernel& k, const HermitianKernel& l, double tol) {
  const GramData g = gram_operator(k, l, tol);
  const Eigh e = eigh(g.a);
  RealVector pos(e.values.size()), neg(e.values.size());
  for (Index i = 0; i < e.values.size(); ++i) {
    pos(i) = std::max(e.values(i), 0.0);
    neg(i) = std::max(-e.values(i), 0.0);
  }
  const Matrix apos = e.vectors * pos.asDiagonal() * e.vectors.adjoint();
  const Matrix aneg = e.vectors * neg.asDiagonal() * e.vectors.adjoint();
  return JordanPair{
      kernel_from_big(k.H, k.points, g.w.adjoint() * apos * g.w),
      kernel_from_big(k.H, k.points, g.w.adjoint() * aneg * g.w),
  };
}

bool disjointness_check(const HermitianKernel& plus, const HermitianKernel& minus,
                        double tol) {
  if (!is_positive_definite(plus, tol) || !is_positive_definite(minus, tol))
    throw std::invalid_argument("disjointness_check: inputs must be positive definite");
  const Matrix bp = big_matrix(plus);
  const Matrix bm = big_matrix(minus);
  return rank_of(bp, tol) + rank_of(bm, tol) == rank_of(bp + bm, tol);
}

Index negative_squares(const HermitianKernel& k) {
  const Eigh e = eigh(big_matrix(k));
  if (e.values.size() == 0) return 0;
  const double cutoff = kZeroCutoff * e.values.cwiseAbs().maxCoeff();
  Index count = 0;
  for (Index i = 0; i < e.values.size(); ++i)
    if (e.values(i) < -cutoff) ++count;
  return count;
}

}  // namespace krein

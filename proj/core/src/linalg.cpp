#include "krein/linalg.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace krein {

Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

Eigh eigh(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigh: matrix not square");
  if (a.rows() == 0) return {RealVector(0), Matrix(0, 0)};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(a));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double spectral_norm(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

Matrix hermitian_function(const Matrix& a, const std::function<double(double)>& f) {
  const Eigh e = eigh(a);
  RealVector d(e.values.size());
  for (Index i = 0; i < d.size(); ++i) d(i) = f(e.values(i));
  return e.vectors * d.asDiagonal() * e.vectors.adjoint();
}

Matrix abs_hermitian(const Matrix& a) {
  return hermitian_function(a, [](double x) { return std::abs(x); });
}

Matrix sign_hermitian(const Matrix& a, double cutoff_rel) {
  const Eigh e = eigh(a);
  const double cutoff = e.values.size() ? cutoff_rel * e.values.cwiseAbs().maxCoeff() : 0.0;
  RealVector d(e.values.size());
  for (Index i = 0; i < d.size(); ++i)
    d(i) = e.values(i) > cutoff ? 1.0 : (e.values(i) < -cutoff ? -1.0 : 0.0);
  return e.vectors * d.asDiagonal() * e.vectors.adjoint();
}

Matrix sqrt_psd(const Matrix& a) {
  return hermitian_function(a, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

Index rank_of(const Matrix& a, double tol_rel) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double threshold = tol_rel * s(0);
  Index r = 0;
  while (r < s.size() && s(r) > threshold) ++r;
  return r;
}

Matrix pinv(const Matrix& a, double tol_rel) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix::Zero(a.cols(), a.rows());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double threshold = s.size() ? tol_rel * s(0) : 0.0;
  RealVector inv(s.size());
  for (Index i = 0; i < s.size(); ++i) inv(i) = s(i) > threshold ? 1.0 / s(i) : 0.0;
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

bool is_psd(const Matrix& a, double tol_rel) {
  const Eigh e = eigh(a);
  if (e.values.size() == 0) return true;
  const double scale = e.values.cwiseAbs().maxCoeff();
  return e.values.minCoeff() >= -scaled_tol(tol_rel, scale);
}

double pencil_sup(const Matrix& n, const Matrix& h, double cutoff_rel) {
  if (n.rows() != h.rows() || n.cols() != h.cols() || n.rows() != n.cols())
    throw std::invalid_argument("pencil_sup: shape mismatch");
  const Eigh eh = eigh(h);
  if (eh.values.size() == 0) return 0.0;
  const double hmax = eh.values.cwiseAbs().maxCoeff();
  if (hmax == 0.0) {
    if (spectral_norm(n) > 0.0)
      throw std::runtime_error("pencil_sup: denominator form vanishes, supremum infinite");
    return 0.0;
  }
  if (eh.values.minCoeff() < -cutoff_rel * hmax * 1e3)
    throw std::invalid_argument("pencil_sup: denominator form not positive semidefinite");
  const double cutoff = cutoff_rel * hmax;
  std::vector<Index> keep, drop;
  for (Index i = 0; i < eh.values.size(); ++i)
    (eh.values(i) > cutoff ? keep : drop).push_back(i);

  // The supremum is finite only if the numerator form vanishes on ker(h).
  if (!drop.empty()) {
    Matrix uker(h.rows(), static_cast<Index>(drop.size()));
    for (std::size_t j = 0; j < drop.size(); ++j) uker.col(static_cast<Index>(j)) = eh.vectors.col(drop[j]);
    const double leak = spectral_norm(n * uker);
    const double nscale = spectral_norm(n);
    if (leak > scaled_tol(1e-8, nscale))
      throw std::runtime_error("pencil_sup: numerator form does not vanish on ker of denominator");
  }

  Matrix w(h.rows(), static_cast<Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j)
    w.col(static_cast<Index>(j)) = eh.vectors.col(keep[j]) / std::sqrt(eh.values(keep[j]));
  const Eigh em = eigh(w.adjoint() * n * w);
  return em.values.size() ? em.values.maxCoeff() : 0.0;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace krein

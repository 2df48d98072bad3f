#include "krein/random.hpp"

#include <stdexcept>

#include <Eigen/QR>

namespace krein {

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return dist(gen_);
}

Complex Rng::scalar() { return Complex(normal(), normal()); }

Vector Rng::vector(Index n, double scale) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = scale * scalar();
  return v;
}

Matrix Rng::matrix(Index rows, Index cols, double scale) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = scale * scalar();
  return m;
}

Matrix Rng::hermitian(Index n, double scale) {
  const Matrix g = matrix(n, n, scale);
  return 0.5 * (g + g.adjoint());
}

Matrix Rng::unitary(Index n) {
  const Matrix g = matrix(n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix phases so the distribution does not depend on the QR convention.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

KreinSpace Rng::krein_space(Index dim, bool force_definite) {
  if (dim == 0) return KreinSpace::hilbert(0);
  if (force_definite || dim == 1) return KreinSpace::hilbert(dim);
  const Index minus = integer(1, dim - 1);
  const Matrix q = unitary(dim);
  RealVector signs = RealVector::Ones(dim);
  for (Index i = 0; i < minus; ++i) signs(i) = -1.0;
  return KreinSpace::make(hermitize(q * signs.asDiagonal() * q.adjoint()), 1e-8);
}

HermitianKernel Rng::hermitian_kernel(const KreinSpace& h, Index n_points, double scale) {
  const Index d = h.dim();
  std::vector<Matrix> raw;
  raw.reserve(static_cast<std::size_t>(n_points * n_points));
  for (Index i = 0; i < n_points * n_points; ++i) raw.push_back(matrix(d, d, scale));

  std::vector<std::string> points;
  for (Index i = 0; i < n_points; ++i) points.push_back("x" + std::to_string(i));

  // Hermitize blockwise: K(x,y) <- (G(x,y) + G(y,x)#)/2.
  std::vector<Matrix> blocks(raw.size());
  for (Index x = 0; x < n_points; ++x)
    for (Index y = 0; y < n_points; ++y) {
      const Matrix& gxy = raw[static_cast<std::size_t>(x * n_points + y)];
      const Matrix& gyx = raw[static_cast<std::size_t>(y * n_points + x)];
      blocks[static_cast<std::size_t>(x * n_points + y)] =
          0.5 * (gxy + h.J * gyx.adjoint() * h.J);
    }
  return HermitianKernel::make(h, std::move(points), std::move(blocks));
}

Matrix Rng::j_unitary(const KreinSpace& space, double scale) {
  const Index d = space.dim();
  const Matrix g = matrix(d, d, scale);
  const Matrix gs = space.J * g.adjoint() * space.J;  // g#
  const Matrix x = 0.5 * (g - gs);                    // sharp-skew: x# = -x
  const Matrix id = Matrix::Identity(d, d);
  // Cayley transform (I + x)^{-1} (I - x) of a sharp-skew generator.
  return (id + x).partialPivLu().solve(id - x);
}

}  // namespace krein

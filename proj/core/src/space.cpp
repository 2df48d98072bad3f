#include "krein/space.hpp"

#include <stdexcept>

namespace krein {

KreinSpace KreinSpace::make(Matrix j, double tol) {
  if (j.rows() != j.cols()) throw std::invalid_argument("KreinSpace: J not square");
  const double scale = spectral_norm(j);
  if (spectral_norm(j - j.adjoint()) > scaled_tol(tol, scale))
    throw std::invalid_argument("KreinSpace: J not Hermitian");
  if (j.rows() > 0 &&
      spectral_norm(j * j - Matrix::Identity(j.rows(), j.cols())) > scaled_tol(tol, scale * scale))
    throw std::invalid_argument("KreinSpace: J^2 != I");
  return KreinSpace{std::move(j)};
}

KreinSpace KreinSpace::hilbert(Index d) { return KreinSpace{Matrix::Identity(d, d)}; }

KreinSpace KreinSpace::diag_signature(Index plus, Index minus) {
  Matrix j = Matrix::Identity(plus + minus, plus + minus);
  for (Index i = plus; i < plus + minus; ++i) j(i, i) = -1.0;
  return KreinSpace{std::move(j)};
}

bool same_space(const KreinSpace& a, const KreinSpace& b, double tol) {
  return a.dim() == b.dim() && spectral_norm(a.J - b.J) <= scaled_tol(tol, spectral_norm(a.J));
}

Complex indef_inner(const KreinSpace& space, const Vector& xi, const Vector& eta) {
  if (xi.size() != space.dim() || eta.size() != space.dim())
    throw std::invalid_argument("indef_inner: dimension mismatch");
  // <J xi, eta> with <x, y> linear in x: eta^H (J xi).
  return (eta.adjoint() * (space.J * xi))(0, 0);
}

Operator Operator::make(KreinSpace source, KreinSpace target, Matrix m) {
  if (m.rows() != target.dim() || m.cols() != source.dim())
    throw std::invalid_argument("Operator: matrix shape does not match spaces");
  return Operator{std::move(source), std::move(target), std::move(m)};
}

Operator Operator::on(KreinSpace space, Matrix m) {
  KreinSpace copy = space;
  return make(std::move(copy), std::move(space), std::move(m));
}

Operator Operator::identity(const KreinSpace& space) {
  return Operator{space, space, Matrix::Identity(space.dim(), space.dim())};
}

Operator compose(const Operator& s, const Operator& t, double tol) {
  if (!same_space(s.source, t.target, tol))
    throw std::invalid_argument("compose: inner spaces differ");
  return Operator{t.source, s.target, s.m * t.m};
}

Operator sharp_adjoint(const Operator& t) {
  return Operator{t.target, t.source, t.source.J * t.m.adjoint() * t.target.J};
}

OperatorFlags classify(const Operator& t, double tol) {
  OperatorFlags flags;
  const Operator ts = sharp_adjoint(t);
  const double scale = spectral_norm(t.m);
  if (same_space(t.source, t.target, tol))
    flags.selfadjoint = spectral_norm(t.m - ts.m) <= scaled_tol(tol, scale);
  const Matrix tst = ts.m * t.m;
  flags.isometric =
      spectral_norm(tst - Matrix::Identity(t.source.dim(), t.source.dim())) <=
      scaled_tol(tol, scale * scale);
  if (flags.isometric) {
    const Matrix tts = t.m * ts.m;
    flags.unitary =
        spectral_norm(tts - Matrix::Identity(t.target.dim(), t.target.dim())) <=
        scaled_tol(tol, scale * scale);
  }
  return flags;
}

Signature signature(const KreinSpace& space) {
  Signature sig;
  if (space.dim() == 0) return sig;
  const Eigh e = eigh(space.J);
  for (Index i = 0; i < e.values.size(); ++i)
    (e.values(i) > 0.0 ? sig.plus : sig.minus)++;
  return sig;
}

Matrix sign_symmetry(const Matrix& g, double tol) {
  if (g.rows() != g.cols()) throw std::invalid_argument("sign_symmetry: G not square");
  const double scale = spectral_norm(g);
  if (spectral_norm(g - g.adjoint()) > scaled_tol(tol, scale))
    throw std::invalid_argument("sign_symmetry: G not Hermitian");
  const Eigh e = eigh(g);
  if (e.values.size() == 0) return Matrix(0, 0);
  if (e.values.cwiseAbs().minCoeff() <= scaled_tol(tol, scale))
    throw std::invalid_argument("sign_symmetry: G numerically singular");
  return sign_hermitian(g);
}

}  // namespace krein

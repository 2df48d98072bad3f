#include "krein/induced.hpp"

#include <cmath>
#include <stdexcept>

namespace krein {

InducedKreinSpace induce(const Operator& a, double tol, double cutoff_rel) {
  if (!same_space(a.source, a.target, tol))
    throw std::invalid_argument("induce: A must be an endomorphism");
  const KreinSpace& h = a.source;
  const Operator as = sharp_adjoint(a);
  const double scale = spectral_norm(a.m);
  if (spectral_norm(a.m - as.m) > scaled_tol(tol, scale))
    throw std::invalid_argument("induce: A not selfadjoint in [.,.]");

  const Matrix ja = h.J * a.m;  // Hermitian since A is [.,.]-selfadjoint
  const Eigh e = eigh(ja);
  const double lmax = e.values.size() ? e.values.cwiseAbs().maxCoeff() : 0.0;
  const double cutoff = cutoff_rel * lmax;

  // Positive spectrum first, so J_K comes out in signature-normal form.
  std::vector<Index> keep;
  for (Index i = 0; i < e.values.size(); ++i)
    if (e.values(i) > cutoff) keep.push_back(i);
  for (Index i = 0; i < e.values.size(); ++i)
    if (e.values(i) < -cutoff) keep.push_back(i);

  const Index r = static_cast<Index>(keep.size());
  Matrix jk = Matrix::Zero(r, r);
  Matrix pi(r, h.dim());
  RealVector sgn = RealVector::Zero(e.values.size());
  for (Index i = 0; i < r; ++i) {
    const double lambda = e.values(keep[i]);
    jk(i, i) = lambda > 0.0 ? 1.0 : -1.0;
    sgn(keep[i]) = jk(i, i).real();
    pi.row(i) = std::sqrt(std::abs(lambda)) * e.vectors.col(keep[i]).adjoint();
  }
  const Matrix s = e.vectors * sgn.asDiagonal() * e.vectors.adjoint();

  return InducedKreinSpace{h, a.m, KreinSpace::make(jk), std::move(pi), s};
}

LiftPair lift_pair(const InducedKreinSpace& ia, const InducedKreinSpace& ib,
                   const Operator& t1, const Operator& t2, double tol) {
  if (!same_space(t1.source, ia.base, tol) || !same_space(t1.target, ib.base, tol) ||
      !same_space(t2.source, ib.base, tol) || !same_space(t2.target, ia.base, tol))
    throw std::invalid_argument("lift_pair: operator spaces do not match the induced data");

  const Matrix t2s = sharp_adjoint(t2).m;
  const double scale = spectral_norm(t2s * ia.A) + spectral_norm(ib.A * t1.m);
  const double inter = spectral_norm(t2s * ia.A - ib.A * t1.m);
  if (inter > scaled_tol(tol, scale))
    throw std::invalid_argument("lift_pair: intertwining relation T2# A = B T1 fails");

  // Any right inverse of Pi_A gives the same lift once well-definedness holds.
  const Matrix lift1 = ib.Pi * t1.m * pinv(ia.Pi);
  const Matrix lift2 = ia.Pi * t2.m * pinv(ib.Pi);

  const double wd1 = spectral_norm(lift1 * ia.Pi - ib.Pi * t1.m);
  const double wd2 = spectral_norm(lift2 * ib.Pi - ia.Pi * t2.m);
  const double s1 = spectral_norm(ib.Pi * t1.m);
  const double s2 = spectral_norm(ia.Pi * t2.m);
  if (wd1 > scaled_tol(tol, s1) || wd2 > scaled_tol(tol, s2))
    throw std::runtime_error("lift_pair: lift not well defined (ker A not carried into ker B)");

  Operator l1{ia.space, ib.space, lift1};
  Operator l2{ib.space, ia.space, lift2};
  const double adj = spectral_norm(l2.m - sharp_adjoint(l1).m);
  return LiftPair{std::move(l1), std::move(l2), std::max({wd1, wd2, adj})};
}

double lifting_defect(const Operator& pi, const Operator& t, double tol) {
  if (!same_space(pi.source, t.source, tol) || !same_space(pi.source, t.target, tol))
    throw std::invalid_argument("lifting_defect: T must act on the base of Pi");
  const Matrix h = pi.m.adjoint() * pi.m;
  const Matrix n = t.m.adjoint() * h * t.m;
  const double sup = pencil_sup(n, h);
  return sup > 0.0 ? std::sqrt(sup) : 0.0;
}

CounterexampleInstance counterexample_instance(int m) {
  if (m < 1) throw std::invalid_argument("counterexample_instance: m >= 1 required");
  std::vector<double> spectrum(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) spectrum[static_cast<std::size_t>(k - 1)] = 1.0 / k;
  return counterexample_instance(std::move(spectrum));
}

CounterexampleInstance counterexample_instance(std::vector<double> spectrum) {
  const Index m = static_cast<Index>(spectrum.size());
  if (m == 0) throw std::invalid_argument("counterexample_instance: empty spectrum");
  for (double a : spectrum)
    if (!(a > 0.0) || a > 1.0)
      throw std::invalid_argument("counterexample_instance: spectrum values must lie in (0, 1]");

  const Matrix im = Matrix::Identity(m, m);
  Matrix a0 = Matrix::Zero(m, m);
  Matrix root = Matrix::Zero(m, m);   // (I - A0)^{1/2}
  Matrix delta = Matrix::Zero(m, m);  // 2 (I - A0)^{1/2} (2 - A0)^{-1}
  for (Index k = 0; k < m; ++k) {
    const double a = spectrum[static_cast<std::size_t>(k)];
    a0(k, k) = a;
    root(k, k) = std::sqrt(1.0 - a);
    delta(k, k) = 2.0 * std::sqrt(1.0 - a) / (2.0 - a);
  }

  Matrix aa = Matrix::Zero(2 * m, 2 * m);
  aa.topLeftCorner(m, m) = a0;
  aa.bottomRightCorner(m, m) = -a0;

  Matrix pi(2 * m, 2 * m);
  pi.topLeftCorner(m, m) = im;
  pi.topRightCorner(m, m) = -root;
  pi.bottomLeftCorner(m, m) = root;
  pi.bottomRightCorner(m, m) = -im;

  Matrix t = Matrix::Identity(2 * m, 2 * m);
  t.topRightCorner(m, m) = -delta;

  const KreinSpace h = KreinSpace::diag_signature(m, m);
  const Matrix s = h.J * t * h.J;

  // Algebraic identities of the construction, asserted as internal checks.
  if (spectral_norm(pi.adjoint() * h.J * pi - aa) > 1e-12 * std::max(1.0, spectral_norm(aa)))
    throw std::runtime_error("counterexample_instance: Pi^H J Pi != A");
  if (spectral_norm(aa * t - s * aa) > 1e-12 * std::max(1.0, spectral_norm(aa)))
    throw std::runtime_error("counterexample_instance: A T != S A");
  if (rank_of(pi) != 2 * m)
    throw std::runtime_error("counterexample_instance: Pi not of full rank");

  return CounterexampleInstance{h, std::move(aa), std::move(pi), std::move(t),
                                s,  std::move(delta), std::move(spectrum)};
}

double counterexample_defect(const CounterexampleInstance& inst, double tol) {
  const Operator pi{inst.H, inst.H, inst.Pi};
  const Operator t = Operator::on(inst.H, inst.T);
  return lifting_defect(pi, t, tol);
}

double counterexample_lower_bound(const std::vector<double>& spectrum) {
  double bound = 0.0;
  for (double a : spectrum) bound = std::max(bound, (2.0 - a) / a);
  return bound;
}

RemarkReport remark_variants(const CounterexampleInstance& inst, RemarkVariant variant,
                             double tol) {
  const Index m = inst.m();
  const Matrix im = Matrix::Identity(m, m);
  Matrix t(2 * m, 2 * m);
  RemarkReport report{};

  const Matrix& d = inst.Delta;
  const Matrix d2 = d * d;
  const Matrix d3 = d2 * d;
  Matrix lhs;

  if (variant == RemarkVariant::kQuestionDr) {
    t.topLeftCorner(m, m) = im;
    t.topRightCorner(m, m) = im;
    t.bottomLeftCorner(m, m) = -im;
    t.bottomRightCorner(m, m) = im;
    report.identity_residual = spectral_norm(inst.A * t - t.adjoint() * inst.A);
    lhs = 2.0 * (d3 + d2 - d + im);
  } else {
    const double c = 2.0 / std::sqrt(3.0);
    t.topLeftCorner(m, m) = c * im;
    t.topRightCorner(m, m) = -0.5 * c * im;
    t.bottomLeftCorner(m, m) = 0.5 * c * im;
    t.bottomRightCorner(m, m) = -c * im;
    report.identity_residual = spectral_norm(t.adjoint() * inst.A * t - inst.A);
    lhs = (4.0 / 3.0) * (-d3 + 3.75 * d2 - 3.0 * d + 1.25 * im);
  }

  const double scale = spectral_norm(inst.A);
  if (report.identity_residual > scaled_tol(tol, scale))
    throw std::runtime_error("remark_variants: defining identity of the variant fails");

  const Eigh elhs = eigh(lhs);
  const Eigh erhs = eigh(im - d2);
  report.lhs_min = elhs.values.minCoeff();
  report.rhs_min = erhs.values.minCoeff();
  report.rhs_max = erhs.values.maxCoeff();
  return report;
}

}  // namespace krein

#include "krein/kolmogorov.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace krein {

Matrix KolmogorovDecomposition::stacked() const {
  const Index n = static_cast<Index>(V.size());
  const Index d = H.dim();
  Matrix m(space.dim(), n * d);
  for (Index x = 0; x < n; ++x) m.middleCols(x * d, d) = V[static_cast<std::size_t>(x)];
  return m;
}

KolmogorovPipeline kolmogorov_pipeline(const HermitianKernel& k,
                                       std::optional<HermitianKernel> l, double tol) {
  HermitianKernel dominant = l ? std::move(*l) : default_dominant(k);
  GramData gram = gram_operator(k, dominant, tol);

  const KreinSpace hl = KreinSpace::hilbert(gram.rank);
  InducedKreinSpace induced = induce(Operator::on(hl, gram.a), tol);

  const Index d = k.dim();
  std::vector<Matrix> v;
  v.reserve(static_cast<std::size_t>(k.n()));
  const Matrix piw = induced.Pi * gram.w;  // space.dim x (n d)
  for (Index x = 0; x < k.n(); ++x) v.push_back(piw.middleCols(x * d, d));

  KolmogorovDecomposition dec{k.H, k.points, induced.space, std::move(v)};
  return KolmogorovPipeline{std::move(dominant), std::move(gram), std::move(induced),
                            std::move(dec)};
}

KolmogorovDecomposition build_kolmogorov(const HermitianKernel& k,
                                         std::optional<HermitianKernel> l, double tol) {
  return kolmogorov_pipeline(k, std::move(l), tol).decomposition;
}

double reconstruct_residual(const KolmogorovDecomposition& v, const HermitianKernel& k) {
  if (v.points.size() != k.points.size() || v.H.dim() != k.dim())
    throw std::invalid_argument("reconstruct_residual: shape mismatch");
  double res = 0.0;
  for (Index x = 0; x < k.n(); ++x) {
    const Matrix vxs = sharp_adjoint(v.v_operator(x)).m;
    for (Index y = 0; y < k.n(); ++y)
      res = std::max(res, spectral_norm(k.block(x, y) - vxs * v.V[static_cast<std::size_t>(y)]));
  }
  return res;
}

UniquenessReport uniqueness_report(const HermitianKernel& k,
                                   std::optional<HermitianKernel> l, double tol) {
  const GramData gram = gram_operator(k, l ? std::move(*l) : default_dominant(k), tol);
  const Eigh e = eigh(gram.a);
  const double inf = std::numeric_limits<double>::infinity();
  UniquenessReport report{inf, inf, false, false};
  const double lmax = e.values.size() ? e.values.cwiseAbs().maxCoeff() : 0.0;
  const double cutoff = kZeroCutoff * lmax;
  for (Index i = 0; i < e.values.size(); ++i) {
    const double lambda = e.values(i);
    if (lambda > cutoff)
      report.eps_plus = std::min(report.eps_plus, lambda);
    else if (lambda < -cutoff)
      report.eps_minus = std::min(report.eps_minus, -lambda);
    else if (lambda != 0.0)
      report.ambiguous = true;
  }
  report.unique = report.eps_plus > cutoff || report.eps_minus > cutoff;
  return report;
}

std::optional<Operator> unitary_equivalence(const KolmogorovDecomposition& v1,
                                            const KolmogorovDecomposition& v2,
                                            double tol) {
  if (v1.points != v2.points || v1.H.dim() != v2.H.dim()) return std::nullopt;
  const Matrix m1 = v1.stacked();
  const Matrix m2 = v2.stacked();
  const Matrix phi = m2 * pinv(m1);
  const double scale = std::max(spectral_norm(m1), spectral_norm(m2));
  if (spectral_norm(phi * m1 - m2) > scaled_tol(tol, scale)) return std::nullopt;
  Operator op{v1.space, v2.space, phi};
  if (!classify(op, tol).unitary) return std::nullopt;
  return op;
}

}  // namespace krein

#include "krein/invariant.hpp"

#include <cmath>
#include <stdexcept>

namespace krein {

bool is_invariant(const HermitianKernel& k, const ActionSystem& action, double tol) {
  if (k.n() != action.n_points)
    throw std::invalid_argument("is_invariant: kernel and action on different point sets");
  const double scale = kernel_norm(k);
  for (int a = 0; a < action.S.size(); ++a) {
    const int ai = action.S.inv[static_cast<std::size_t>(a)];
    for (Index x = 0; x < k.n(); ++x) {
      const Index xs = action.phi(ai, x);
      const Complex factor_x = std::conj(action.alpha(a, xs));
      for (Index y = 0; y < k.n(); ++y) {
        const Matrix lhs = k.block(x, action.phi(a, y));
        const Matrix rhs = factor_x * action.alpha(a, y) * k.block(xs, y);
        if (spectral_norm(lhs - rhs) > scaled_tol(tol, scale)) return false;
      }
    }
  }
  return true;
}

HermitianKernel average_invariant(const HermitianKernel& seed, const ActionSystem& action) {
  if (!action.S.is_group_with_inverse_involution())
    throw std::invalid_argument("average_invariant: requires a group with inverse involution");
  if (seed.n() != action.n_points)
    throw std::invalid_argument("average_invariant: point sets differ");
  const Index n = seed.n();
  const Index d = seed.dim();
  std::vector<Matrix> blocks(static_cast<std::size_t>(n * n), Matrix::Zero(d, d));
  const double weight = 1.0 / action.S.size();
  for (int a = 0; a < action.S.size(); ++a)
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const Complex c =
            1.0 / (std::conj(action.alpha(a, x)) * action.alpha(a, y));
        blocks[static_cast<std::size_t>(x * n + y)] +=
            weight * c * seed.block(action.phi(a, x), action.phi(a, y));
      }
  return HermitianKernel::make(seed.H, seed.points, std::move(blocks));
}

namespace {

struct Compressions {
  std::vector<Matrix> f;  // F(a) on H_L coordinates
};

Compressions compress_actions(const GramData& gram, const ActionSystem& action, Index d,
                              double tol) {
  Compressions out;
  const Matrix range_proj = gram.w_pinv * gram.w;  // projects onto range(B_L)
  const Matrix id = Matrix::Identity(range_proj.rows(), range_proj.cols());
  for (int a = 0; a < action.S.size(); ++a) {
    const Matrix psi = psi_matrix(action, d, a);
    const Matrix wpsi = gram.w * psi;
    const double leak = spectral_norm(wpsi * (id - range_proj));
    if (leak > scaled_tol(tol, spectral_norm(wpsi)))
      throw std::runtime_error("psi_a does not preserve ker B_L; dominant unusable for this action");
    out.f.push_back(wpsi * gram.w_pinv);
  }
  return out;
}

}  // namespace

std::vector<double> phi_bounded_norms(const HermitianKernel& l, const ActionSystem& action,
                                      double tol) {
  if (!is_positive_definite(l, tol))
    throw std::invalid_argument("phi_bounded_norms: L must be positive definite");
  const GramData gram = gram_operator(l, l, tol);
  const Compressions comp = compress_actions(gram, action, l.dim(), tol);
  std::vector<double> norms;
  norms.reserve(comp.f.size());
  for (const Matrix& f : comp.f) norms.push_back(spectral_norm(f));
  return norms;
}

InvariantDecomposition invariant_kolmogorov(const HermitianKernel& k,
                                            const ActionSystem& action,
                                            std::optional<HermitianKernel> l, double tol) {
  const Eigen::MatrixXcd sigma = cocycle_of(action, tol);
  if (!is_invariant(k, action, tol))
    throw std::invalid_argument("invariant_kolmogorov: kernel is not phi-invariant");

  KolmogorovPipeline pipeline = kolmogorov_pipeline(k, std::move(l), tol);
  const GramData& gram = pipeline.gram;
  const Compressions comp = compress_actions(gram, action, k.dim(), tol);
  const int s = action.S.size();

  // A_L F(a) = sigma(a, I(a)) F(I(a))^H A_L forces F(a) ker A_L into ker A_L,
  // so the lifted operators are well defined.
  double intertwine = 0.0;
  const double ascale = std::max(1.0, spectral_norm(gram.a));
  for (int a = 0; a < s; ++a) {
    const int ai = action.S.inv[static_cast<std::size_t>(a)];
    const Matrix lhs = gram.a * comp.f[static_cast<std::size_t>(a)];
    const Matrix rhs = sigma(a, ai) * comp.f[static_cast<std::size_t>(ai)].adjoint() * gram.a;
    intertwine = std::max(intertwine, spectral_norm(lhs - rhs));
  }
  if (intertwine > scaled_tol(tol, ascale))
    throw std::runtime_error("invariant_kolmogorov: Gram intertwining relation fails");

  const Matrix pi_pinv = pinv(pipeline.induced.Pi);
  std::vector<Matrix> u;
  u.reserve(static_cast<std::size_t>(s));
  double lift_res = 0.0;
  for (int a = 0; a < s; ++a) {
    const Matrix& f = comp.f[static_cast<std::size_t>(a)];
    Matrix ua = pipeline.induced.Pi * f * pi_pinv;
    lift_res = std::max(lift_res,
                        spectral_norm(ua * pipeline.induced.Pi - pipeline.induced.Pi * f));
    u.push_back(std::move(ua));
  }
  if (lift_res > scaled_tol(tol, std::max(1.0, spectral_norm(pipeline.induced.Pi))))
    throw std::runtime_error("invariant_kolmogorov: lifted operators not well defined");

  ProjectiveRepresentation rep{pipeline.induced.space, std::move(u), sigma};

  double rep_res = 0.0;
  for (int a = 0; a < s; ++a) {
    const int ai = action.S.inv[static_cast<std::size_t>(a)];
    const Matrix& ua = rep.U[static_cast<std::size_t>(a)];
    for (int b = 0; b < s; ++b)
      rep_res = std::max(rep_res,
                         spectral_norm(ua * rep.U[static_cast<std::size_t>(b)] -
                                       sigma(a, b) * rep.U[static_cast<std::size_t>(action.S.mult(a, b))]));
    const Matrix sharp = sharp_adjoint(rep.u_operator(a)).m;
    rep_res = std::max(rep_res, spectral_norm(sharp - std::conj(sigma(ai, a)) *
                                                          rep.U[static_cast<std::size_t>(ai)]));
  }

  const KolmogorovDecomposition& dec = pipeline.decomposition;
  double rel_res = 0.0;
  for (int a = 0; a < s; ++a)
    for (Index x = 0; x < k.n(); ++x) {
      const Matrix lhs = dec.V[static_cast<std::size_t>(action.phi(a, x))];
      const Matrix rhs = action.alpha(a, x) * rep.U[static_cast<std::size_t>(a)] *
                         dec.V[static_cast<std::size_t>(x)];
      rel_res = std::max(rel_res, spectral_norm(lhs - rhs));
    }

  return InvariantDecomposition{std::move(pipeline), std::move(rep), comp.f,
                                intertwine, rel_res, rep_res};
}

ReducibilityReport fundamental_reducibility(const ProjectiveRepresentation& rep,
                                            std::optional<Matrix> candidate, double tol) {
  const Matrix j = candidate ? std::move(*candidate) : rep.space.J;
  const Index d = rep.space.dim();
  if (j.rows() != d || j.cols() != d)
    throw std::invalid_argument("fundamental_reducibility: candidate shape mismatch");
  if (spectral_norm(j * j - Matrix::Identity(d, d)) > scaled_tol(tol, 1.0))
    throw std::invalid_argument("fundamental_reducibility: candidate is not an involution");
  // A valid fundamental symmetry for (K, [.,.]) makes G = J_K J' Hermitian
  // positive definite.
  const Matrix g = rep.space.J * j;
  if (spectral_norm(g - g.adjoint()) > scaled_tol(tol, spectral_norm(g)))
    throw std::invalid_argument("fundamental_reducibility: candidate not [.,.]-selfadjoint");
  if (d > 0) {
    const Eigh eg = eigh(g);
    if (eg.values.minCoeff() <= 0.0)
      throw std::invalid_argument(
          "fundamental_reducibility: candidate does not define a positive inner product");
  }

  ReducibilityReport report;
  report.J = j;
  for (const Matrix& ua : rep.U)
    report.commutation_residual =
        std::max(report.commutation_residual, spectral_norm(ua * j - j * ua));
  double scale = 1.0;
  for (const Matrix& ua : rep.U) scale = std::max(scale, spectral_norm(ua));
  report.reducible = report.commutation_residual <= scaled_tol(tol, scale);
  return report;
}

Matrix dixmier_average(const ProjectiveRepresentation& rep, double tol) {
  // Uniform averaging: the invariant mean of a finite group.
  if (rep.U.empty()) throw std::invalid_argument("dixmier_average: empty representation");
  const Index d = rep.space.dim();
  Matrix mean = Matrix::Zero(d, d);
  for (const Matrix& ua : rep.U) mean += ua.adjoint() * ua;
  mean /= static_cast<double>(rep.U.size());

  const Eigh e = eigh(mean);
  if (e.values.size() == 0 || e.values.minCoeff() <= kZeroCutoff * e.values.cwiseAbs().maxCoeff())
    throw std::runtime_error("dixmier_average: averaged Gram is singular");

  const Matrix phi = sqrt_psd(mean);
  const Matrix phi_inv = hermitian_function(mean, [](double x) { return 1.0 / std::sqrt(x); });
  for (const Matrix& ua : rep.U) {
    const Matrix t = phi * ua * phi_inv;
    const double res = spectral_norm(t.adjoint() * t - Matrix::Identity(d, d));
    if (res > scaled_tol(tol, spectral_norm(t) * spectral_norm(t)))
      throw std::runtime_error("dixmier_average: conjugated operator not unitary (is S a group?)");
  }
  return phi;
}

InvariantJordan invariant_jordan(const HermitianKernel& k, const ActionSystem& action,
                                 std::optional<HermitianKernel> l, double tol) {
  const InvariantDecomposition dec = invariant_kolmogorov(k, action, std::move(l), tol);
  const ReducibilityReport red = fundamental_reducibility(dec.rep, {}, tol);
  InvariantJordan out;
  if (!red.reducible) {
    out.note = "not established: the induced fundamental symmetry does not commute "
               "with the representation (residual " +
               std::to_string(red.commutation_residual) + ")";
    return out;
  }

  const KolmogorovDecomposition& v = dec.pipeline.decomposition;
  const Index p = v.space.dim();
  const Matrix jplus = 0.5 * (Matrix::Identity(p, p) + red.J);
  const Matrix jminus = 0.5 * (Matrix::Identity(p, p) - red.J);

  const Index n = k.n();
  const Index d = k.dim();
  std::vector<Matrix> bplus(static_cast<std::size_t>(n * n), Matrix::Zero(d, d));
  std::vector<Matrix> bminus = bplus;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Matrix vx = v.V[static_cast<std::size_t>(x)].adjoint();
      bplus[static_cast<std::size_t>(x * n + y)] =
          k.H.J * vx * jplus * v.V[static_cast<std::size_t>(y)];
      bminus[static_cast<std::size_t>(x * n + y)] =
          k.H.J * vx * jminus * v.V[static_cast<std::size_t>(y)];
    }

  JordanPair pair{HermitianKernel::make(k.H, k.points, std::move(bplus), tol),
                  HermitianKernel::make(k.H, k.points, std::move(bminus), tol)};

  const double scale = kernel_norm(k);
  HermitianKernel diff = pair.plus;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) diff.block(x, y) -= pair.minus.block(x, y);
  if (kernel_distance(diff, k) > scaled_tol(tol, scale))
    throw std::runtime_error("invariant_jordan: K != K+ - K-");
  if (!is_positive_definite(pair.plus, tol) || !is_positive_definite(pair.minus, tol))
    throw std::runtime_error("invariant_jordan: parts not positive definite");
  if (!is_invariant(pair.plus, action, tol) || !is_invariant(pair.minus, action, tol))
    throw std::runtime_error("invariant_jordan: parts not invariant");
  if (!disjointness_check(pair.plus, pair.minus, tol))
    throw std::runtime_error("invariant_jordan: parts not disjoint");

  out.established = true;
  out.kernels = std::move(pair);
  return out;
}

}  // namespace krein

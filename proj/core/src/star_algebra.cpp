#include "krein/star_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace krein {

Vector StarAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != d || y.size() != d)
    throw std::invalid_argument("StarAlgebra::multiply: coordinate length");
  Vector out = Vector::Zero(d);
  for (Index i = 0; i < d; ++i)
    if (x(i) != Complex(0.0)) out += x(i) * (lmul[static_cast<std::size_t>(i)] * y);
  return out;
}

Vector StarAlgebra::star(const Vector& x) const { return invol * x.conjugate(); }

Vector StarAlgebra::basis(Index i) const {
  Vector e = Vector::Zero(d);
  e(i) = 1.0;
  return e;
}

void StarAlgebra::validate(double tol) const {
  if (static_cast<Index>(names.size()) != d || static_cast<Index>(lmul.size()) != d ||
      unit.size() != d || invol.rows() != d || invol.cols() != d)
    throw std::invalid_argument("StarAlgebra: inconsistent sizes");
  double scale = 1.0;
  for (const Matrix& c : lmul) scale = std::max(scale, spectral_norm(c));

  for (Index i = 0; i < d; ++i) {
    const Vector bi = basis(i);
    if ((multiply(unit, bi) - bi).norm() > scaled_tol(tol, scale) ||
        (multiply(bi, unit) - bi).norm() > scaled_tol(tol, scale))
      throw std::invalid_argument("StarAlgebra: unit laws fail");
    if ((star(star(bi)) - bi).norm() > scaled_tol(tol, scale))
      throw std::invalid_argument("StarAlgebra: involution not involutive");
    for (Index j = 0; j < d; ++j) {
      const Vector bj = basis(j);
      if ((star(multiply(bi, bj)) - multiply(star(bj), star(bi))).norm() >
          scaled_tol(tol, scale * scale))
        throw std::invalid_argument("StarAlgebra: (ab)* != b* a*");
      for (Index k = 0; k < d; ++k) {
        const Vector bk = basis(k);
        if ((multiply(multiply(bi, bj), bk) - multiply(bi, multiply(bj, bk))).norm() >
            scaled_tol(tol, scale * scale))
          throw std::invalid_argument("StarAlgebra: associativity fails");
      }
    }
  }
}

StarAlgebra StarAlgebra::matrix_algebra(int k) {
  if (k < 1) throw std::invalid_argument("matrix_algebra: k >= 1");
  StarAlgebra a;
  a.d = static_cast<Index>(k) * k;
  a.matrix_units_k = k;
  auto idx = [k](int i, int j) { return static_cast<Index>(i) * k + j; };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      a.names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));

  a.lmul.assign(static_cast<std::size_t>(a.d), Matrix::Zero(a.d, a.d));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
          if (j == p)  // E_ij E_pq = delta_jp E_iq
            a.lmul[static_cast<std::size_t>(idx(i, j))](idx(i, q), idx(p, q)) = 1.0;

  a.unit = Vector::Zero(a.d);
  for (int i = 0; i < k; ++i) a.unit(idx(i, i)) = 1.0;
  a.invol = Matrix::Zero(a.d, a.d);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a.invol(idx(j, i), idx(i, j)) = 1.0;
  a.validate();
  return a;
}

StarAlgebra StarAlgebra::group_algebra(const InvolutiveSemigroup& s) {
  s.validate();
  StarAlgebra a;
  a.d = s.size();
  a.names = s.names;
  a.lmul.assign(static_cast<std::size_t>(a.d), Matrix::Zero(a.d, a.d));
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j)
      a.lmul[static_cast<std::size_t>(i)](s.mult(i, j), j) = 1.0;
  a.unit = Vector::Zero(a.d);
  a.unit(s.unit) = 1.0;
  a.invol = Matrix::Zero(a.d, a.d);
  for (int i = 0; i < s.size(); ++i) a.invol(s.inv[static_cast<std::size_t>(i)], i) = 1.0;
  a.validate();
  return a;
}

Matrix right_mult_matrix(const StarAlgebra& a, const Vector& element) {
  Matrix r(a.d, a.d);
  for (Index i = 0; i < a.d; ++i) r.col(i) = a.multiply(a.basis(i), element);
  return r;
}

HermitianFunctional HermitianFunctional::make(StarAlgebra algebra, Vector values,
                                              double tol) {
  if (values.size() != algebra.d)
    throw std::invalid_argument("HermitianFunctional: value count != dim");
  algebra.validate(tol);
  HermitianFunctional z{std::move(algebra), std::move(values)};
  const double scale = z.values.size() ? z.values.cwiseAbs().maxCoeff() : 1.0;
  if (std::abs(z(z.algebra.unit) - 1.0) > scaled_tol(tol, scale))
    throw std::invalid_argument("HermitianFunctional: Z(1) != 1");
  for (Index i = 0; i < z.algebra.d; ++i)
    if (std::abs(z(z.algebra.star(z.algebra.basis(i))) - std::conj(z.values(i))) >
        scaled_tol(tol, scale))
      throw std::invalid_argument("HermitianFunctional: Z(a*) != conj(Z(a))");
  return z;
}

HermitianKernel kz_kernel(const HermitianFunctional& z) {
  const StarAlgebra& a = z.algebra;
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(a.d * a.d));
  for (Index i = 0; i < a.d; ++i) {
    const Vector bi = a.basis(i);
    for (Index j = 0; j < a.d; ++j) {
      Matrix b(1, 1);
      b(0, 0) = z(a.multiply(bi, a.star(a.basis(j))));
      blocks.push_back(std::move(b));
    }
  }
  return HermitianKernel::make(KreinSpace::hilbert(1), a.names, std::move(blocks));
}

double kz_invariance_residual(const HermitianFunctional& z) {
  const StarAlgebra& alg = z.algebra;
  double res = 0.0;
  for (Index x = 0; x < alg.d; ++x)
    for (Index a = 0; a < alg.d; ++a)
      for (Index y = 0; y < alg.d; ++y) {
        const Vector ys = alg.star(alg.basis(y));
        const Complex lhs = z(alg.multiply(alg.basis(x), alg.multiply(alg.basis(a), ys)));
        const Complex rhs = z(alg.multiply(alg.multiply(alg.basis(x), alg.basis(a)), ys));
        res = std::max(res, std::abs(lhs - rhs));
      }
  return res;
}

namespace {

struct GnsPipeline {
  KolmogorovPipeline kolmogorov;
  GnsData data;
};

GnsPipeline gns_pipeline(const HermitianFunctional& z, double tol) {
  const StarAlgebra& alg = z.algebra;
  const HermitianKernel k = kz_kernel(z);
  KolmogorovPipeline pipeline = kolmogorov_pipeline(k, {}, tol);
  const Matrix mv = pipeline.decomposition.stacked();  // p x d, columns V(b_i)
  const Matrix mv_pinv = pinv(mv);

  std::vector<Matrix> pi;
  pi.reserve(static_cast<std::size_t>(alg.d));
  const double scale = std::max(1.0, spectral_norm(mv));
  for (Index j = 0; j < alg.d; ++j) {
    // pi(a) V(x) = V(x a*), extended linearly through the basis expansion.
    const Matrix r = right_mult_matrix(alg, alg.star(alg.basis(j)));
    const Matrix target = mv * r;
    Matrix pj = target * mv_pinv;
    const double residual = spectral_norm(pj * mv - target);
    if (residual > scaled_tol(tol, scale))
      throw std::runtime_error("gns_build: pi(" + alg.names[static_cast<std::size_t>(j)] +
                               ") not well defined, residual " + std::to_string(residual));
    pi.push_back(std::move(pj));
  }

  const Vector omega = mv * alg.unit;
  GnsData data{pipeline.decomposition.space, std::move(pi), omega};
  return GnsPipeline{std::move(pipeline), std::move(data)};
}

}  // namespace

GnsData gns_build(const HermitianFunctional& z, double tol) {
  GnsPipeline p = gns_pipeline(z, tol);
  const GnsReport report = gns_verify(p.data, z, tol);
  const double scale = std::max(1.0, z.values.cwiseAbs().maxCoeff());
  if (report.z_residual > scaled_tol(tol, scale) ||
      report.mult_residual > scaled_tol(tol, scale) ||
      report.sharp_residual > scaled_tol(tol, scale) || !report.cyclic)
    throw std::runtime_error("gns_build: GNS invariants fail numerically");
  return std::move(p.data);
}

GnsReport gns_verify(const GnsData& data, const HermitianFunctional& z, double tol) {
  const StarAlgebra& alg = z.algebra;
  GnsReport report;
  const KreinSpace& space = data.space;

  for (Index i = 0; i < alg.d; ++i) {
    const Matrix& pi_i = data.pi[static_cast<std::size_t>(i)];
    report.z_residual = std::max(
        report.z_residual,
        std::abs(indef_inner(space, pi_i * data.omega, data.omega) - z.values(i)));

    const Vector istar = alg.star(alg.basis(i));
    Matrix pi_istar = Matrix::Zero(space.dim(), space.dim());
    for (Index m = 0; m < alg.d; ++m)
      if (istar(m) != Complex(0.0)) pi_istar += istar(m) * data.pi[static_cast<std::size_t>(m)];
    const Matrix sharp = sharp_adjoint(Operator::on(space, pi_i)).m;
    report.sharp_residual = std::max(report.sharp_residual, spectral_norm(sharp - pi_istar));

    for (Index j = 0; j < alg.d; ++j) {
      const Vector prod = alg.multiply(alg.basis(i), alg.basis(j));
      Matrix pi_prod = Matrix::Zero(space.dim(), space.dim());
      for (Index m = 0; m < alg.d; ++m)
        if (prod(m) != Complex(0.0)) pi_prod += prod(m) * data.pi[static_cast<std::size_t>(m)];
      report.mult_residual = std::max(
          report.mult_residual,
          spectral_norm(pi_prod - pi_i * data.pi[static_cast<std::size_t>(j)]));
    }
  }

  Matrix cyclic(space.dim(), alg.d);
  for (Index i = 0; i < alg.d; ++i)
    cyclic.col(i) = data.pi[static_cast<std::size_t>(i)] * data.omega;
  report.cyclic_rank = rank_of(cyclic, tol);
  report.cyclic = report.cyclic_rank == space.dim();
  return report;
}

UniquenessReport gns_uniqueness_report(const HermitianFunctional& z,
                                       std::optional<HermitianKernel> dominant, double tol) {
  return uniqueness_report(kz_kernel(z), std::move(dominant), tol);
}

double phi_bounded_constant(const HermitianFunctional& f, const Vector& element,
                            double tol) {
  const HermitianKernel kf = kz_kernel(f);
  if (!is_positive_definite(kf, tol))
    throw std::invalid_argument("phi_bounded_constant: functional not positive");
  const Matrix q0 = big_matrix(kf).transpose();  // F(x x*) = x^H q0 x
  const Matrix r = right_mult_matrix(f.algebra, f.algebra.star(element));
  return pencil_sup(r.adjoint() * q0 * r, q0);
}

std::vector<double> phi_bounded_constants(const HermitianFunctional& f, double tol) {
  std::vector<double> constants;
  constants.reserve(static_cast<std::size_t>(f.algebra.d));
  for (Index a = 0; a < f.algebra.d; ++a)
    constants.push_back(phi_bounded_constant(f, f.algebra.basis(a), tol));
  return constants;
}

FunctionalJordan functional_jordan(const HermitianFunctional& z, double tol) {
  GnsPipeline p = gns_pipeline(z, tol);
  const StarAlgebra& alg = z.algebra;
  const KreinSpace& space = p.data.space;

  double commutation = 0.0;
  double scale = 1.0;
  for (const Matrix& pi : p.data.pi) {
    commutation = std::max(commutation, spectral_norm(pi * space.J - space.J * pi));
    scale = std::max(scale, spectral_norm(pi));
  }

  FunctionalJordan out;
  if (commutation > scaled_tol(tol, scale)) {
    out.note = "not established: the induced fundamental symmetry does not commute with "
               "the GNS representation (residual " + std::to_string(commutation) + ")";
    return out;
  }

  const Index pdim = space.dim();
  const Matrix jplus = 0.5 * (Matrix::Identity(pdim, pdim) + space.J);
  const Matrix jminus = 0.5 * (Matrix::Identity(pdim, pdim) - space.J);
  const Matrix mv = p.kolmogorov.decomposition.stacked();

  // K±(x, y) = ± V(x)# J± V(y), scalars; Z±(x) = K±(x, 1).
  const Matrix kplus = mv.adjoint() * jplus * mv;
  const Matrix kminus = mv.adjoint() * jminus * mv;
  // Entry i is K+(b_i, 1) = sum_m conj(unit_m) K+(i, m), antilinear in the
  // second argument.
  out.z_plus = kplus * alg.unit.conjugate();
  out.z_minus = kminus * alg.unit.conjugate();

  const double vtol = scaled_tol(tol, std::max(1.0, z.values.cwiseAbs().maxCoeff()));
  if ((out.z_plus - out.z_minus - z.values).cwiseAbs().maxCoeff() > vtol)
    throw std::runtime_error("functional_jordan: Z != Z+ - Z-");

  auto kernel_of = [&alg](const Vector& values) {
    std::vector<Matrix> blocks;
    blocks.reserve(static_cast<std::size_t>(alg.d * alg.d));
    for (Index i = 0; i < alg.d; ++i)
      for (Index j = 0; j < alg.d; ++j) {
        Matrix b(1, 1);
        b(0, 0) = (values.transpose() *
                   alg.multiply(alg.basis(i), alg.star(alg.basis(j))))(0, 0);
        blocks.push_back(std::move(b));
      }
    return HermitianKernel::make(KreinSpace::hilbert(1), alg.names, std::move(blocks));
  };

  const HermitianKernel kp = kernel_of(out.z_plus);
  const HermitianKernel km = kernel_of(out.z_minus);
  if (!is_positive_definite(kp, tol) || !is_positive_definite(km, tol))
    throw std::runtime_error("functional_jordan: parts not positive");
  if (spectral_norm(big_matrix(kp) - kplus) > scaled_tol(tol, spectral_norm(kplus)) ||
      spectral_norm(big_matrix(km) - kminus) > scaled_tol(tol, spectral_norm(kminus)))
    throw std::runtime_error("functional_jordan: split kernels inconsistent with V-form");
  if (!disjointness_check(kp, km, tol))
    throw std::runtime_error("functional_jordan: parts not disjoint");

  // Density-matrix cross-oracle for matrix algebras: Z = tr(. rho) splits
  // along the spectral parts of rho.
  if (alg.matrix_units_k > 0) {
    const int k = alg.matrix_units_k;
    Matrix rho(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        rho(j, i) = z.values(static_cast<Index>(i) * k + j);  // Z(E_ij) = rho_ji
    const Eigh e = eigh(rho);
    Matrix rho_plus = Matrix::Zero(k, k), rho_minus = Matrix::Zero(k, k);
    for (Index t = 0; t < e.values.size(); ++t) {
      const Matrix proj = e.vectors.col(t) * e.vectors.col(t).adjoint();
      if (e.values(t) > 0.0)
        rho_plus += e.values(t) * proj;
      else
        rho_minus -= e.values(t) * proj;
    }
    double oracle_gap = 0.0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const Index idx = static_cast<Index>(i) * k + j;
        oracle_gap = std::max(oracle_gap, std::abs(out.z_plus(idx) - rho_plus(j, i)));
        oracle_gap = std::max(oracle_gap, std::abs(out.z_minus(idx) - rho_minus(j, i)));
      }
    if (oracle_gap > vtol)
      throw std::runtime_error("functional_jordan: disagrees with the density-matrix oracle");
  }

  out.established = true;
  return out;
}

}  // namespace krein

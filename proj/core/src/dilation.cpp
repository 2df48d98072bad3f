#include "krein/dilation.hpp"

#include <cmath>
#include <stdexcept>

namespace krein {

namespace {

std::vector<std::string> unit_labels(int k) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  return labels;
}

}  // namespace

Matrix HermitianMap::apply(const Matrix& a) const {
  if (a.rows() != k || a.cols() != k)
    throw std::invalid_argument("HermitianMap::apply: argument not k x k");
  Matrix out = Matrix::Zero(h, h);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (a(i, j) != Complex(0.0)) out += a(i, j) * block(i, j);
  return out;
}

HermitianMap HermitianMap::make(int k, int h, std::vector<Matrix> blocks, double tol) {
  if (k < 1 || h < 1) throw std::invalid_argument("HermitianMap: k, h >= 1");
  if (static_cast<int>(blocks.size()) != k * k)
    throw std::invalid_argument("HermitianMap: expected k*k blocks");
  for (const Matrix& b : blocks)
    if (b.rows() != h || b.cols() != h)
      throw std::invalid_argument("HermitianMap: block shape mismatch");
  HermitianMap t{k, h, std::move(blocks)};
  double scale = 0.0;
  for (const Matrix& b : t.blocks) scale = std::max(scale, spectral_norm(b));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (spectral_norm(t.block(j, i) - t.block(i, j).adjoint()) > scaled_tol(tol, scale))
        throw std::invalid_argument("HermitianMap: T(E_ji) != T(E_ij)^H");
  return t;
}

HermitianMap HermitianMap::identity_map(int k) {
  std::vector<Matrix> blocks;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Matrix b = Matrix::Zero(k, k);
      b(i, j) = 1.0;
      blocks.push_back(std::move(b));
    }
  return make(k, k, std::move(blocks));
}

HermitianMap HermitianMap::transpose_map(int k) {
  std::vector<Matrix> blocks;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Matrix b = Matrix::Zero(k, k);
      b(j, i) = 1.0;
      blocks.push_back(std::move(b));
    }
  return make(k, k, std::move(blocks));
}

HermitianMap HermitianMap::zero(int k, int h) {
  std::vector<Matrix> blocks(static_cast<std::size_t>(k) * k, Matrix::Zero(h, h));
  return HermitianMap{k, h, std::move(blocks)};
}

Matrix choi_matrix(const HermitianMap& t) {
  Matrix c(t.k * t.h, t.k * t.h);
  for (int i = 0; i < t.k; ++i)
    for (int j = 0; j < t.k; ++j)
      c.block(static_cast<Index>(i) * t.h, static_cast<Index>(j) * t.h, t.h, t.h) =
          t.block(i, j);
  return c;
}

HermitianKernel kt_kernel(const HermitianMap& t) {
  const int k = t.k;
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(k) * k * k * k);
  const Matrix zero = Matrix::Zero(t.h, t.h);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)      // point x = E_ij
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)  // point y = E_pq; x y* = E_ij E_qp
          blocks.push_back(j == q ? t.block(i, p) : zero);
  return HermitianKernel::make(KreinSpace::hilbert(t.h), unit_labels(k), std::move(blocks));
}

bool is_completely_positive(const HermitianMap& t, double tol) {
  const bool kernel_route = is_positive_definite(kt_kernel(t), tol);
  const bool choi_route = is_psd(choi_matrix(t), tol);
  if (kernel_route != choi_route)
    throw std::runtime_error("is_completely_positive: kernel and Choi routes disagree");
  return kernel_route;
}

WittstockDecomposition wittstock_decompose(const HermitianMap& t, double tol) {
  const Eigh e = eigh(choi_matrix(t));
  const Index n = e.values.size();
  Matrix cplus = Matrix::Zero(n, n);
  Matrix cminus = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const Matrix proj = e.vectors.col(i) * e.vectors.col(i).adjoint();
    if (e.values(i) > 0.0)
      cplus += e.values(i) * proj;
    else
      cminus -= e.values(i) * proj;
  }

  auto map_of = [&t](const Matrix& c) {
    std::vector<Matrix> blocks;
    blocks.reserve(static_cast<std::size_t>(t.k) * t.k);
    for (int i = 0; i < t.k; ++i)
      for (int j = 0; j < t.k; ++j)
        blocks.push_back(
            c.block(static_cast<Index>(i) * t.h, static_cast<Index>(j) * t.h, t.h, t.h));
    return HermitianMap::make(t.k, t.h, std::move(blocks));
  };

  WittstockDecomposition w{map_of(cplus), map_of(cminus), map_of(cplus + cminus)};

  if (!is_completely_positive(w.plus, tol) || !is_completely_positive(w.minus, tol))
    throw std::runtime_error("wittstock_decompose: parts not completely positive");
  if (!disjointness_check(kt_kernel(w.plus), kt_kernel(w.minus), tol))
    throw std::runtime_error("wittstock_decompose: parts not disjoint");
  double recon = 0.0;
  for (int i = 0; i < t.k; ++i)
    for (int j = 0; j < t.k; ++j)
      recon = std::max(recon, spectral_norm(w.plus.block(i, j) - w.minus.block(i, j) -
                                            t.block(i, j)));
  if (recon > scaled_tol(tol, spectral_norm(choi_matrix(t))))
    throw std::runtime_error("wittstock_decompose: T != T+ - T-");
  // -S <=cp T <=cp S holds by construction: S -/+ T = 2 T-/+.
  return w;
}

bool paulsen_block_check(const HermitianMap& t, const HermitianMap& phi1,
                         const HermitianMap& phi2, double tol) {
  if (phi1.k != t.k || phi2.k != t.k || phi1.h != t.h || phi2.h != t.h)
    throw std::invalid_argument("paulsen_block_check: shape mismatch");
  const int k = t.k, h = t.h;
  const int k2 = 2 * k, h2 = 2 * h;
  std::vector<Matrix> blocks(static_cast<std::size_t>(k2) * k2, Matrix::Zero(h2, h2));
  auto at = [&blocks, k2](int i, int j) -> Matrix& {
    return blocks[static_cast<std::size_t>(i) * k2 + j];
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      at(i, j).topLeftCorner(h, h) = phi1.block(i, j);            // a quadrant
      at(i, j + k).topRightCorner(h, h) = t.block(i, j);          // b quadrant: T(b)
      at(i + k, j).bottomLeftCorner(h, h) = t.block(j, i).adjoint();  // T(c*)^*
      at(i + k, j + k).bottomRightCorner(h, h) = phi2.block(i, j);    // d quadrant
    }
  const HermitianMap f = HermitianMap::make(k2, h2, std::move(blocks), tol);
  return is_completely_positive(f, tol);
}

double dilation_residual(const StinespringDilation& d, const HermitianMap& t) {
  const Matrix bsharp = d.B.adjoint() * d.space.J;  // target C^h is a Hilbert space
  double res = 0.0;
  for (int i = 0; i < t.k; ++i)
    for (int j = 0; j < t.k; ++j)
      res = std::max(res,
                     spectral_norm(t.block(i, j) - bsharp * d.pi_block(i, j, t.k) * d.B));
  return res;
}

namespace {

KolmogorovDecomposition dilation_to_kolmogorov(const StinespringDilation& d, int k, int h) {
  // V(x) = pi(x*) B; for matrix units V(E_ij) = pi(E_ji) B.
  std::vector<Matrix> v;
  v.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) v.push_back(d.pi_block(j, i, k) * d.B);
  return KolmogorovDecomposition{KreinSpace::hilbert(h), unit_labels(k), d.space,
                                 std::move(v)};
}

void verify_dilation(const StinespringDilation& d, const HermitianMap& t, double tol,
                     const char* who) {
  const int k = t.k;
  double scale = 1.0;
  for (const Matrix& p : d.pi) scale = std::max(scale, spectral_norm(p));

  double mult = 0.0, sharp = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Matrix& pij = d.pi_block(i, j, k);
      sharp = std::max(sharp, spectral_norm(sharp_adjoint(Operator::on(d.space, pij)).m -
                                            d.pi_block(j, i, k)));
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
          const Matrix prod = pij * d.pi_block(p, q, k);
          const Matrix expected =
              j == p ? d.pi_block(i, q, k) : Matrix::Zero(d.space.dim(), d.space.dim());
          mult = std::max(mult, spectral_norm(prod - expected));
        }
    }
  if (mult > scaled_tol(tol, scale * scale) || sharp > scaled_tol(tol, scale))
    throw std::runtime_error(std::string(who) + ": pi is not a *-representation");

  if (dilation_residual(d, t) > scaled_tol(tol, spectral_norm(choi_matrix(t))))
    throw std::runtime_error(std::string(who) + ": T != B# pi B");

  Matrix span(d.space.dim(), static_cast<Index>(k) * k * t.h);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      span.middleCols((static_cast<Index>(i) * k + j) * t.h, t.h) =
          d.pi_block(i, j, k) * d.B;
  if (rank_of(span, tol) != d.space.dim())
    throw std::runtime_error(std::string(who) + ": dilation not minimal");
}

}  // namespace

StinespringDilation choi_stinespring(const HermitianMap& t, double tol) {
  const Matrix c = choi_matrix(t);
  const Eigh e = eigh(c);
  const double lmax = e.values.size() ? e.values.cwiseAbs().maxCoeff() : 0.0;
  const double cutoff = kZeroCutoff * lmax;

  std::vector<Index> keep;
  for (Index i = 0; i < e.values.size(); ++i)
    if (std::abs(e.values(i)) > cutoff) keep.push_back(i);
  const Index m = static_cast<Index>(keep.size());
  const int k = t.k, h = t.h;

  Matrix jm = Matrix::Zero(m, m);
  for (Index s = 0; s < m; ++s) jm(s, s) = e.values(keep[s]) > 0.0 ? 1.0 : -1.0;
  const KreinSpace space = KreinSpace::make(kron(Matrix::Identity(k, k), jm));

  // B[(i, s), r] = sqrt|lambda_s| conj(w_s(i, r)), so that
  // B^H (I ⊗ J) (E_ij ⊗ I) B reproduces the Choi blocks.
  Matrix b = Matrix::Zero(static_cast<Index>(k) * m, h);
  for (Index s = 0; s < m; ++s) {
    const double root = std::sqrt(std::abs(e.values(keep[s])));
    const Vector w = e.vectors.col(keep[s]);
    for (int i = 0; i < k; ++i)
      for (int r = 0; r < h; ++r)
        b(static_cast<Index>(i) * m + s, r) = root * std::conj(w(static_cast<Index>(i) * h + r));
  }

  std::vector<Matrix> pi;
  pi.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Matrix unit = Matrix::Zero(k, k);
      unit(i, j) = 1.0;
      pi.push_back(kron(unit, Matrix::Identity(m, m)));
    }

  StinespringDilation d{space, std::move(pi), std::move(b)};
  verify_dilation(d, t, tol, "choi_stinespring");
  return d;
}

StinespringDilation minimal_stinespring(const HermitianMap& t, double tol) {
  const int k = t.k;
  const HermitianKernel kernel = kt_kernel(t);
  const KolmogorovPipeline pipeline = kolmogorov_pipeline(kernel, {}, tol);
  const KolmogorovDecomposition& dec = pipeline.decomposition;

  // pi(E_pq) V(E_ij) = V(E_ij E_qp) = delta_jq V(E_ip), extended linearly.
  const Matrix mv = dec.stacked();
  const Matrix mv_pinv = pinv(mv);
  const Index p_dim = dec.space.dim();
  std::vector<Matrix> pi;
  pi.reserve(static_cast<std::size_t>(k) * k);
  const double scale = std::max(1.0, spectral_norm(mv));
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      Matrix target = Matrix::Zero(p_dim, static_cast<Index>(k) * k * t.h);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          if (j != q) continue;
          target.middleCols((static_cast<Index>(i) * k + j) * t.h, t.h) =
              dec.V[static_cast<std::size_t>(i) * k + p];
        }
      Matrix pij = target * mv_pinv;
      if (spectral_norm(pij * mv - target) > scaled_tol(tol, scale))
        throw std::runtime_error("minimal_stinespring: representation not well defined");
      pi.push_back(std::move(pij));
    }

  Matrix b = Matrix::Zero(p_dim, t.h);
  for (int i = 0; i < k; ++i) b += dec.V[static_cast<std::size_t>(i) * k + i];

  StinespringDilation d{dec.space, std::move(pi), std::move(b)};
  verify_dilation(d, t, tol, "minimal_stinespring");

  // Cross-oracle: the Choi-eigenvector dilation must be unitarily equivalent.
  const StinespringDilation oracle = choi_stinespring(t, tol);
  const KolmogorovDecomposition dec1 = dilation_to_kolmogorov(d, k, t.h);
  const KolmogorovDecomposition dec2 = dilation_to_kolmogorov(oracle, k, t.h);
  if (!unitary_equivalence(dec1, dec2, tol))
    throw std::runtime_error("minimal_stinespring: routes not unitarily equivalent");
  return d;
}

double cb_upper_bound(const HermitianMap& t, double tol) {
  const WittstockDecomposition w = wittstock_decompose(t, tol);
  return spectral_norm(w.s.apply(Matrix::Identity(t.k, t.k)));
}

}  // namespace krein

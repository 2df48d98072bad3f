#pragma once

#include "krein/kolmogorov.hpp"

namespace krein {

/// Linear hermitian map T: M_k -> L(C^h), stored through its matrix-unit
/// blocks T(E_ij); hermitian means T(E_ji) = T(E_ij)^H.
struct HermitianMap {
  int k = 0;
  int h = 0;
  std::vector<Matrix> blocks;  // row-major k x k grid of h x h blocks

  const Matrix& block(int i, int j) const {
    return blocks[static_cast<std::size_t>(i) * k + j];
  }
  /// T(a) = sum_ij a_ij T(E_ij).
  Matrix apply(const Matrix& a) const;

  static HermitianMap make(int k, int h, std::vector<Matrix> blocks,
                           double tol = kDefaultTol);
  static HermitianMap identity_map(int k);
  static HermitianMap transpose_map(int k);
  static HermitianMap zero(int k, int h);
};

/// C_T = sum_ij E_ij ⊗ T(E_ij), Hermitian of size k h.
Matrix choi_matrix(const HermitianMap& t);

/// K_T(x, y) = T(x y*) on the matrix-unit basis, an L(C^h)-valued kernel on
/// k^2 points.
HermitianKernel kt_kernel(const HermitianMap& t);

/// Kernel positivity of K_T cross-checked against Choi positivity; the two
/// routes must agree (throws on disagreement).
bool is_completely_positive(const HermitianMap& t, double tol = kDefaultTol);

struct WittstockDecomposition {
  HermitianMap plus;   // completely positive
  HermitianMap minus;  // completely positive, disjoint from plus
  HermitianMap s;      // plus + minus, dominates T: -S <=cp T <=cp S
};

/// Spectral split of the Choi matrix mapped back through the Choi
/// correspondence.
WittstockDecomposition wittstock_decompose(const HermitianMap& t, double tol = kDefaultTol);

/// Complete positivity of the off-diagonal block map
/// [[phi1(a), T(b)], [T(c*)^*, phi2(d)]] on M_{2k}.
bool paulsen_block_check(const HermitianMap& t, const HermitianMap& phi1,
                         const HermitianMap& phi2, double tol = kDefaultTol);

/// T(a) = B# pi(a) B with pi a representation on a Krein space and the span
/// of pi(a) B C^h total.
struct StinespringDilation {
  KreinSpace space;
  std::vector<Matrix> pi;  // per matrix unit, row-major
  Matrix B;                // space.dim x h

  const Matrix& pi_block(int i, int j, int k) const {
    return pi[static_cast<std::size_t>(i) * k + j];
  }
};

/// max_ij || T(E_ij) - B# pi(E_ij) B ||.
double dilation_residual(const StinespringDilation& d, const HermitianMap& t);

/// Primary route: the invariant Kolmogorov decomposition of K_T under right
/// multiplication, with the representation extended linearly from the lifted
/// operators.  Cross-checked against the Choi-eigenvector dilation; the two
/// must be [.,.]-unitarily equivalent.
StinespringDilation minimal_stinespring(const HermitianMap& t, double tol = kDefaultTol);

/// The independent construction from the Choi eigendecomposition:
/// K = C^k ⊗ C^m (m = rank C_T), pi(a) = a ⊗ I_m, J from eigenvalue signs.
StinespringDilation choi_stinespring(const HermitianMap& t, double tol = kDefaultTol);

/// ||S(1)|| for the Wittstock dominant S = T+ + T-; an upper bound for the
/// completely bounded norm.
double cb_upper_bound(const HermitianMap& t, double tol = kDefaultTol);

}  // namespace krein

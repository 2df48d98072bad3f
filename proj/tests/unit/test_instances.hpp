#pragma once

#include "krein/invariant.hpp"
#include "krein/random.hpp"

namespace krein::test {

// Z2 = {e, g} acting on two points by the swap, alpha = 1.
inline ActionSystem z2_swap_action() {
  IntMatrix phi(2, 2);
  phi << 0, 1, 1, 0;
  return ActionSystem::trivial_alpha(InvolutiveSemigroup::cyclic_group(2), 2, phi);
}

// Z2 x Z2 translating itself, with the Heisenberg-type multiplier
// alpha((a1,a2),(x1,x2)) = (-1)^{a2 x1}; sigma(a,b) = (-1)^{a2 b1}.
inline ActionSystem heisenberg_action() {
  const InvolutiveSemigroup s = InvolutiveSemigroup::klein_four();
  IntMatrix phi(4, 4);
  Eigen::MatrixXcd alpha(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int x = 0; x < 4; ++x) {
      phi(a, x) = a ^ x;
      const int a2 = a >> 1, x1 = x & 1;
      alpha(a, x) = (a2 * x1) % 2 ? -1.0 : 1.0;
    }
  return ActionSystem{s, 4, phi, alpha};
}

// Z2 swap with the non-unimodular multiplier alpha(g, .) = (2, 1/2); psi_g is
// a boost-like non-unitary swap.
inline ActionSystem boost_swap_action() {
  IntMatrix phi(2, 2);
  phi << 0, 1, 1, 0;
  Eigen::MatrixXcd alpha(2, 2);
  alpha << 1.0, 1.0, 2.0, 0.5;
  return ActionSystem{InvolutiveSemigroup::cyclic_group(2), 2, phi, alpha};
}

// The two-element semigroup {e, p} with p^2 = p acting by the constant map
// phi(p, .) = 0; not a group, psi_p is not invertible.
inline ActionSystem idempotent_action() {
  InvolutiveSemigroup s;
  s.names = {"e", "p"};
  s.mult.resize(2, 2);
  s.mult << 0, 1, 1, 1;
  s.unit = 0;
  s.inv = {0, 1};
  IntMatrix phi(2, 2);
  phi << 0, 1, 0, 0;
  return ActionSystem::trivial_alpha(std::move(s), 2, phi);
}

// Left translation of a group on itself, alpha = 1.
inline ActionSystem translation_action(const InvolutiveSemigroup& s) {
  const int n = s.size();
  IntMatrix phi(n, n);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) phi(a, x) = s.mult(a, x);
  return ActionSystem::trivial_alpha(s, n, phi);
}

// Positive definite group-invariant scalar kernel K(x, y) = <l(y) w, l(x) w>
// through the left regular representation; satisfies K(ab, ac) = K(b, c).
inline HermitianKernel toeplitz_kernel(const InvolutiveSemigroup& s, Rng& rng) {
  const int n = s.size();
  Vector w = rng.vector(n);
  w /= w.norm();
  Matrix stack(n, n);  // column x = l(x) w
  for (int x = 0; x < n; ++x) {
    Vector lx = Vector::Zero(n);
    for (int i = 0; i < n; ++i) lx(s.mult(x, i)) = w(i);
    stack.col(x) = lx;
  }
  const Matrix values = stack.adjoint() * stack;  // K(x,y) = <l(y)w, l(x)w>
  std::vector<std::string> points(s.names);
  std::vector<Matrix> blocks;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix b(1, 1);
      b(0, 0) = values(i, j);
      blocks.push_back(b);
    }
  return HermitianKernel::make(KreinSpace::hilbert(1), std::move(points), std::move(blocks));
}

// Random invariant hermitian kernel by twisted group averaging.
inline HermitianKernel random_invariant_kernel(const ActionSystem& action,
                                               const KreinSpace& h, Rng& rng) {
  return average_invariant(rng.hermitian_kernel(h, action.n_points), action);
}

inline HermitianKernel scalar_kernel_on(const std::vector<std::string>& points,
                                        const Matrix& values) {
  std::vector<Matrix> blocks;
  for (Index i = 0; i < values.rows(); ++i)
    for (Index j = 0; j < values.cols(); ++j) {
      Matrix b(1, 1);
      b(0, 0) = values(i, j);
      blocks.push_back(b);
    }
  return HermitianKernel::make(KreinSpace::hilbert(1), points, std::move(blocks));
}

}  // namespace krein::test

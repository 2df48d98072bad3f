#pragma once

#include <string>
#include <vector>

#include "krein/types.hpp"

namespace krein {

/// Finite unital semigroup with involution, given by tables.
struct InvolutiveSemigroup {
  std::vector<std::string> names;
  IntMatrix mult;        // mult(a, b) = index of ab
  int unit = 0;
  std::vector<int> inv;  // the involution

  int size() const { return static_cast<int>(names.size()); }

  /// Checks associativity, unit laws and the involution anti-homomorphism
  /// properties; throws on violation.
  void validate() const;

  /// True when every element has a two-sided inverse equal to its involution.
  bool is_group_with_inverse_involution() const;

  static InvolutiveSemigroup cyclic_group(int order);
  static InvolutiveSemigroup klein_four();
  static InvolutiveSemigroup symmetric3();
  static InvolutiveSemigroup dihedral4();
  static InvolutiveSemigroup trivial();
};

/// A semigroup action phi on a finite point set together with a nonvanishing
/// multiplier alpha subject to the multiplicative compatibility relation and
/// alpha(a I(a), x) = 1.
struct ActionSystem {
  InvolutiveSemigroup S;
  Index n_points = 0;
  IntMatrix phi;              // s x n, phi(a, x) in [0, n)
  Eigen::MatrixXcd alpha;     // s x n, nonzero

  static ActionSystem trivial_alpha(InvolutiveSemigroup s, Index n_points, IntMatrix phi);
};

struct ActionDiagnostics {
  bool ok = true;
  double max_residual = 0.0;
  std::vector<std::string> violations;
};

ActionDiagnostics validate_action(const ActionSystem& action, double tol = kDefaultTol);

/// sigma(a, b) = alpha(a, phi(b,x))^{-1} alpha(b,x)^{-1} alpha(ab,x); asserts
/// x-independence, unimodularity, and the 2-cocycle identity.
Eigen::MatrixXcd cocycle_of(const ActionSystem& action, double tol = kDefaultTol);

/// The block matrix of psi_a on stacked coordinates: block column x is sent
/// to block row phi(a, x) scaled by alpha(a, x)^{-1}.
Matrix psi_matrix(const ActionSystem& action, Index block_dim, int a);

}  // namespace krein

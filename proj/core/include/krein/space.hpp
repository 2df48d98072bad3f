#pragma once

#include <string>

#include "krein/linalg.hpp"
#include "krein/types.hpp"

namespace krein {

/// A finite-dimensional complex space carrying the indefinite inner product
/// [x, y] = <J x, y>, where J is a fundamental symmetry (J = J^H = J^{-1})
/// and <.,.> is the standard inner product, linear in the FIRST argument and
/// conjugate-linear in the second.  That convention is used everywhere in
/// this library.
struct KreinSpace {
  Matrix J;

  Index dim() const { return J.rows(); }

  /// Validates that J is Hermitian and J^2 = I to tolerance.
  static KreinSpace make(Matrix j, double tol = kDefaultTol);

  /// J = I: an ordinary Hilbert space.
  static KreinSpace hilbert(Index d);

  /// J = diag(+1 x plus, -1 x minus).
  static KreinSpace diag_signature(Index plus, Index minus);
};

bool same_space(const KreinSpace& a, const KreinSpace& b, double tol = kDefaultTol);

/// [xi, eta] = <J xi, eta>.
Complex indef_inner(const KreinSpace& space, const Vector& xi, const Vector& eta);

/// A linear map between Krein spaces, stored as a target.dim x source.dim matrix.
struct Operator {
  KreinSpace source;
  KreinSpace target;
  Matrix m;

  static Operator make(KreinSpace source, KreinSpace target, Matrix m);
  /// Endomorphism of a single space.
  static Operator on(KreinSpace space, Matrix m);
  static Operator identity(const KreinSpace& space);

  Vector operator()(const Vector& v) const { return m * v; }
};

/// Composition s ∘ t (apply t first).
Operator compose(const Operator& s, const Operator& t, double tol = kDefaultTol);

/// Adjoint with respect to the indefinite inner products:
/// [T xi, eta]_target = [xi, T# eta]_source, i.e. T# = J_source T^H J_target.
Operator sharp_adjoint(const Operator& t);

struct OperatorFlags {
  bool selfadjoint = false;
  bool isometric = false;
  bool unitary = false;
};

/// selfadjoint:  ||T - T#||      <= tol * scale (requires source == target)
/// isometric:    ||T# T - I||    <= tol * scale
/// unitary:      isometric and ||T T# - I|| <= tol * scale
OperatorFlags classify(const Operator& t, double tol = kDefaultTol);

struct Signature {
  Index plus = 0;
  Index minus = 0;
};

/// Counts of +1 / -1 eigenvalues of the fundamental symmetry.
Signature signature(const KreinSpace& space);

/// J = sgn(G) for a Hermitian boundedly invertible G; the result is a
/// fundamental symmetry commuting with G.
Matrix sign_symmetry(const Matrix& g, double tol = kDefaultTol);

}  // namespace krein

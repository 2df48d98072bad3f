#pragma once

#include <optional>
#include <string>

#include "krein/action.hpp"
#include "krein/kolmogorov.hpp"

namespace krein {

/// Finite-dimensional unital *-algebra in a fixed basis.  Multiplication is
/// stored through the left-multiplication slices lmul[i](m, j) = coefficient
/// of b_m in b_i b_j; the involution is the conjugate-linear map
/// star(x) = invol conj(x).
struct StarAlgebra {
  Index d = 0;
  std::vector<std::string> names;
  std::vector<Matrix> lmul;
  Vector unit;
  Matrix invol;
  int matrix_units_k = 0;  // > 0 when the basis is the matrix units of M_k

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector star(const Vector& x) const;
  Vector basis(Index i) const;

  /// Associativity, unit laws, (ab)* = b* a*, (a*)* = a, all on basis tuples.
  void validate(double tol = kDefaultTol) const;

  /// M_k with the matrix-unit basis E_ij (row-major), involution = adjoint.
  static StarAlgebra matrix_algebra(int k);
  /// C[S] for a finite unital semigroup with involution g -> I(g).
  static StarAlgebra group_algebra(const InvolutiveSemigroup& s);
};

/// Right multiplication x -> x a in coordinates.
Matrix right_mult_matrix(const StarAlgebra& a, const Vector& element);

/// Linear functional with Z(1) = 1 and Z(a*) = conj(Z(a)).
struct HermitianFunctional {
  StarAlgebra algebra;
  Vector values;

  Complex operator()(const Vector& x) const { return (values.transpose() * x)(0, 0); }

  static HermitianFunctional make(StarAlgebra algebra, Vector values,
                                  double tol = kDefaultTol);
};

/// K_Z(x, y) = Z(x y*) as a scalar hermitian kernel on the basis of A.
HermitianKernel kz_kernel(const HermitianFunctional& z);

/// Residual of Z(x (a y*)) = Z((x a) y*) over basis triples; the twisted
/// symmetry of K_Z under right multiplication, extended linearly.
double kz_invariance_residual(const HermitianFunctional& z);

/// GNS data: representation pi with Z(a) = [pi(a) Omega, Omega], cyclic Omega.
struct GnsData {
  KreinSpace space;
  std::vector<Matrix> pi;  // per basis element
  Vector omega;
};

GnsData gns_build(const HermitianFunctional& z, double tol = kDefaultTol);

struct GnsReport {
  double z_residual = 0.0;      // Z(a) vs [pi(a) Omega, Omega] on basis
  double mult_residual = 0.0;   // pi(ab) vs pi(a) pi(b)
  double sharp_residual = 0.0;  // pi(a)# vs pi(a*)
  Index cyclic_rank = 0;
  bool cyclic = false;
};

GnsReport gns_verify(const GnsData& data, const HermitianFunctional& z,
                     double tol = kDefaultTol);

/// Spectral gaps of the Gram operator of K_Z for the chosen dominant.
UniquenessReport gns_uniqueness_report(const HermitianFunctional& z,
                                       std::optional<HermitianKernel> dominant = {},
                                       double tol = kDefaultTol);

/// Smallest C_a with F(x a* a x*) <= C_a F(x x*) for a positive functional F,
/// by a Hermitian pencil on the quotient by the null space of the F(x x*)
/// form.
double phi_bounded_constant(const HermitianFunctional& f, const Vector& element,
                            double tol = kDefaultTol);

/// One constant per basis element.
std::vector<double> phi_bounded_constants(const HermitianFunctional& f,
                                          double tol = kDefaultTol);

/// Jordan decomposition Z = Z+ - Z- into disjoint positive functionals via a
/// fundamental symmetry commuting with the GNS representation; failure of the
/// sufficient test is reported, not treated as a disproof.
struct FunctionalJordan {
  bool established = false;
  std::string note;
  Vector z_plus;
  Vector z_minus;
};

FunctionalJordan functional_jordan(const HermitianFunctional& z, double tol = kDefaultTol);

}  // namespace krein

#pragma once

#include <optional>
#include <string>

#include "krein/action.hpp"
#include "krein/kolmogorov.hpp"

namespace krein {

/// Checks the twisted symmetry
/// K(x, phi(a,y)) = conj(alpha(a, phi(I(a),x))) alpha(a,y) K(phi(I(a),x), y)
/// for all a, x, y.
bool is_invariant(const HermitianKernel& k, const ActionSystem& action,
                  double tol = kDefaultTol);

/// Group averaging that projects any hermitian kernel onto the invariant ones
/// (requires a group with inverse involution and unimodular cocycle).
HermitianKernel average_invariant(const HermitianKernel& seed, const ActionSystem& action);

/// Spectral norms of the compressions F(a) of psi_a to the coordinates of H_L
/// for a positive definite L; throws when psi_a does not preserve ker B_L.
std::vector<double> phi_bounded_norms(const HermitianKernel& l, const ActionSystem& action,
                                      double tol = kDefaultTol);

/// U(a) U(b) = sigma(a,b) U(ab) with conj(sigma(I(a),a)) U(I(a)) = U(a)#.
struct ProjectiveRepresentation {
  KreinSpace space;
  std::vector<Matrix> U;
  Eigen::MatrixXcd sigma;

  Operator u_operator(int a) const {
    return Operator::on(space, U[static_cast<std::size_t>(a)]);
  }
};

struct InvariantDecomposition {
  KolmogorovPipeline pipeline;
  ProjectiveRepresentation rep;
  std::vector<Matrix> F;       // compressed psi_a on H_L
  double intertwine_residual;  // A_L F(a) - sigma(a,I(a)) F(I(a))^H A_L
  double relation_residual;    // V(phi(a,x)) - alpha(a,x) U(a) V(x)
  double rep_residual;         // projective representation identities
};

/// The constructive route: build the Gram data of an invariant kernel, lift
/// each compressed psi_a through the induced space, and verify all identities.
InvariantDecomposition invariant_kolmogorov(const HermitianKernel& k,
                                            const ActionSystem& action,
                                            std::optional<HermitianKernel> l = {},
                                            double tol = kDefaultTol);

/// Sufficient-condition tester for the existence of a fundamental symmetry
/// commuting with the whole representation.  With no candidate the natural
/// symmetry of the representation space is tried; a negative answer is not a
/// disproof.
struct ReducibilityReport {
  bool reducible = false;
  double commutation_residual = 0.0;
  Matrix J;  // the symmetry tested
};

ReducibilityReport fundamental_reducibility(const ProjectiveRepresentation& rep,
                                            std::optional<Matrix> candidate = {},
                                            double tol = kDefaultTol);

/// Uniform averaging over a finite group: Phi = (mean_a U(a)^H U(a))^{1/2}
/// makes T(a) = Phi U(a) Phi^{-1} unitary in the Hilbert norm.
Matrix dixmier_average(const ProjectiveRepresentation& rep, double tol = kDefaultTol);

/// Splits an invariant kernel into invariant disjoint positive parts through
/// a commuting fundamental symmetry; "not established" reports that the
/// sufficient tests failed, not that no splitting exists.
struct InvariantJordan {
  bool established = false;
  std::string note;
  std::optional<JordanPair> kernels;
};

InvariantJordan invariant_jordan(const HermitianKernel& k, const ActionSystem& action,
                                 std::optional<HermitianKernel> l = {},
                                 double tol = kDefaultTol);

}  // namespace krein

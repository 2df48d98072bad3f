#pragma once

#include <optional>

#include "krein/induced.hpp"
#include "krein/kernel.hpp"

namespace krein {

/// Factorization K(x, y) = V(x)# V(y) with the spans of V(x)H filling the
/// whole space.
struct KolmogorovDecomposition {
  KreinSpace H;
  std::vector<std::string> points;
  KreinSpace space;
  std::vector<Matrix> V;  // per point, space.dim x H.dim

  Operator v_operator(Index x) const {
    return Operator{H, space, V[static_cast<std::size_t>(x)]};
  }
  /// All V(x) stacked side by side, space.dim x (n * H.dim).
  Matrix stacked() const;
};

/// The composite construction: Gram operator of K against the dominant, the
/// induced space of the Gram operator, and V(x) = Pi [xi_x].
struct KolmogorovPipeline {
  HermitianKernel dominant;
  GramData gram;
  InducedKreinSpace induced;
  KolmogorovDecomposition decomposition;
};

KolmogorovPipeline kolmogorov_pipeline(const HermitianKernel& k,
                                       std::optional<HermitianKernel> l = {},
                                       double tol = kDefaultTol);

/// L defaults to default_dominant(K).
KolmogorovDecomposition build_kolmogorov(const HermitianKernel& k,
                                         std::optional<HermitianKernel> l = {},
                                         double tol = kDefaultTol);

/// max_{x,y} ||K(x,y) - V(x)# V(y)||.
double reconstruct_residual(const KolmogorovDecomposition& v, const HermitianKernel& k);

/// Spectral gaps of the Gram operator around zero.  At finite dimension the
/// spectrum is finite, so a gap always exists and uniqueness holds; eigenvalues
/// below the zero cutoff are flagged as numerically ambiguous.
struct UniquenessReport {
  double eps_plus;   // smallest positive eigenvalue of A_L, +inf if none
  double eps_minus;  // |largest negative eigenvalue|, +inf if none
  bool unique;
  bool ambiguous;    // nonzero-but-below-cutoff eigenvalues present
};

UniquenessReport uniqueness_report(const HermitianKernel& k,
                                   std::optional<HermitianKernel> l = {},
                                   double tol = kDefaultTol);

/// Solves V2(x) = Phi V1(x) by least squares over the stacked columns and
/// returns Phi iff the relation holds to tol and Phi is [.,.]-unitary.
std::optional<Operator> unitary_equivalence(const KolmogorovDecomposition& v1,
                                            const KolmogorovDecomposition& v2,
                                            double tol = kDefaultTol);

}  // namespace krein

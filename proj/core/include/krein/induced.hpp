#pragma once

#include <vector>

#include "krein/space.hpp"

namespace krein {

/// Krein space induced by a selfadjoint operator A on (H, [.,.]):
/// spectral coordinates of JA above the zero cutoff, with
///   [Pi xi, Pi eta]_K = [A xi, eta]_H   and   J_K Pi = Pi S,
/// where S is the partial isometry of the polar decomposition of JA.
/// At finite dimension the quotient by ker A replaces the completion.
struct InducedKreinSpace {
  KreinSpace base;
  Matrix A;
  KreinSpace space;  // the induced space, dim = rank(JA)
  Matrix Pi;         // space.dim x base.dim, surjective
  Matrix S;          // partial isometry of JA on the base

  Operator pi_operator() const { return Operator{base, space, Pi}; }
};

/// Relative eigenvalue cutoff is kZeroCutoff * ||JA||; configurable because
/// near-kernel spectra occur deliberately in the lifting counterexample.
InducedKreinSpace induce(const Operator& a, double tol = kDefaultTol,
                         double cutoff_rel = kZeroCutoff);

struct LiftPair {
  Operator t1;  // K_A -> K_B
  Operator t2;  // K_B -> K_A
  double residual;
};

/// Lifts a pair T1: H1 -> H2, T2: H2 -> H1 with T2# A = B T1 to the induced
/// spaces: t1 Pi_A = Pi_B T1, t2 Pi_B = Pi_A T2 and [t1 f, g] = [f, t2 g].
LiftPair lift_pair(const InducedKreinSpace& ia, const InducedKreinSpace& ib,
                   const Operator& t1, const Operator& t2, double tol = kDefaultTol);

/// Smallest C >= 0 with ||Pi T xi|| <= C ||Pi xi|| for all xi (unitary norm
/// on the target), as the square root of the largest generalized eigenvalue
/// of the pencil (T^H H T, H) with H = Pi^H Pi.
double lifting_defect(const Operator& pi, const Operator& t, double tol = kDefaultTol);

/// The block construction over a diagonal spectrum 0 < a_k <= 1:
///   A = diag(A0, -A0), J = diag(I, -I),
///   Pi = [[I, -(I-A0)^{1/2}], [(I-A0)^{1/2}, -I]],
///   Delta = 2 (I-A0)^{1/2} (2-A0)^{-1}, T = [[I, -Delta], [0, I]], S = J T J.
/// Satisfies Pi^H J Pi = A and A T = S A; the optimal lifting constant grows
/// like max_k (2 - a_k)/a_k along spectra accumulating at 0.
struct CounterexampleInstance {
  KreinSpace H;  // C^{2m} with J = diag(I, -I)
  Matrix A;
  Matrix Pi;
  Matrix T;
  Matrix S;
  Matrix Delta;
  std::vector<double> spectrum;

  Index m() const { return static_cast<Index>(spectrum.size()); }
};

/// Default spectrum a_k = 1/k, k = 1..m.
CounterexampleInstance counterexample_instance(int m);
CounterexampleInstance counterexample_instance(std::vector<double> spectrum);

/// sup ||Pi T xi|| / ||Pi xi|| for the instance.
double counterexample_defect(const CounterexampleInstance& inst, double tol = kDefaultTol);

/// Closed-form lower bound max_k (2 - a_k)/a_k (= 2m - 1 for a_k = 1/k).
double counterexample_lower_bound(const std::vector<double>& spectrum);

enum class RemarkVariant {
  kQuestionDr,  // T = [[I, I], [-I, I]], lhs operator 2(D^3 + D^2 - D + I)
  kIsometric,   // T = (2/sqrt 3)[[I, -I/2], [I/2, -I]], A-isometric variant
};

/// Evaluates the variant's defining identity and the two sides of the
/// resulting operator inequality lhs <= C^2 (I - Delta^2): the lhs spectrum
/// stays bounded away from zero while min(I - Delta^2) -> 0 along spectra
/// accumulating at 0, so no finite C works in the limit.
struct RemarkReport {
  double identity_residual;  // ||A T - T^H A|| resp. ||T^H A T - A||
  double lhs_min;            // min eigenvalue of the lhs polynomial in Delta
  double rhs_min;            // min eigenvalue of I - Delta^2 (the vanishing side)
  double rhs_max;            // max eigenvalue of I - Delta^2
};

RemarkReport remark_variants(const CounterexampleInstance& inst, RemarkVariant variant,
                             double tol = kDefaultTol);

}  // namespace krein

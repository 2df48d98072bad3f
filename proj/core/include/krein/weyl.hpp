#pragma once

#include <vector>

#include "krein/space.hpp"

namespace krein {

/// K(xi, eta) = exp(i Im[eta, xi] / 2) exp(-[xi - eta, xi - eta] / 4).
Complex weyl_kernel(const KreinSpace& h, const Vector& xi, const Vector& eta);

/// Translation multiplier alpha(xi, eta) = exp(-i Im[xi, eta] / 2).
Complex weyl_alpha(const KreinSpace& h, const Vector& xi, const Vector& eta);

/// Derived cocycle sigma(xi, eta) = exp(+i Im[xi, eta] / 2).
Complex weyl_sigma(const KreinSpace& h, const Vector& xi, const Vector& eta);

/// | K(xi+eta, xi+eta') - conj(alpha(xi,eta)) alpha(xi,eta') K(eta,eta') |.
double invariance_identity(const KreinSpace& h, const Vector& xi, const Vector& eta,
                           const Vector& eta2);

/// Boson Fock space over (H, J) truncated at tensor degree N, in the
/// occupation-number basis of symmetric tensors.  The fundamental symmetry is
/// the compression of ⊕_n ⊗^n J to the symmetric part, assembled degree by
/// degree (diagonal J short-circuits to a diagonal matrix; general J goes
/// through the permanent formula for symmetric powers).
struct TruncatedFock {
  KreinSpace H;
  int cutoff = 0;
  std::vector<std::vector<int>> occupations;  // all |mu| <= N, by degree
  std::vector<Index> degree_offset;           // size cutoff + 2
  Matrix JF;
  KreinSpace space;  // (F^s_N, JF)

  Index dim() const { return static_cast<Index>(occupations.size()); }

  static TruncatedFock make(const KreinSpace& h, int cutoff);
};

/// Exp(xi) truncated: degree-n coordinates xi^mu / sqrt(mu!).
Vector exp_vector(const TruncatedFock& fock, const Vector& xi);

/// V(xi) = exp(-[xi,xi]/4) Exp(xi / sqrt 2); pairings reproduce the Weyl
/// kernel up to the truncation tail.
Vector v_vector(const TruncatedFock& fock, const Vector& xi);

/// [x, y] on the truncated Fock space.
Complex fock_pair(const TruncatedFock& fock, const Vector& x, const Vector& y);

/// Tail bound for |[v(eta), v(xi)]_N - K(xi, eta)|:
///   |z|^{N+1} e^{|z|} / (N+1)! * exp(-([xi,xi]+[eta,eta])/4),  z = [eta, xi]/2.
double kernel_truncation_bound(const KreinSpace& h, const Vector& xi, const Vector& eta,
                               int cutoff);

/// The truncation error itself, |prefactor| |sum_{n > N} z^n / n!|, summed
/// directly from the tail so it stays accurate far below the rounding floor
/// of the assembled coordinate pairing.
double kernel_truncation_exact(const KreinSpace& h, const Vector& xi, const Vector& eta,
                               int cutoff);

/// Finite combination of exponential-vector labels; the symbolic domain of
/// the Weyl operators.  Labels closer than 1e-12 in max norm are merged.
struct ExpLabelCombo {
  struct Term {
    Complex coeff;
    Vector label;
  };
  std::vector<Term> terms;

  void add(Complex coeff, const Vector& label);
  static ExpLabelCombo single(Complex coeff, const Vector& label);
};

/// W(xi) acting on label combinations: (z, eta) -> (z / alpha(xi, eta), xi + eta).
/// Exact at the label level, independent of any truncation.
ExpLabelCombo weyl_apply(const KreinSpace& h, const Vector& xi, const ExpLabelCombo& c);

/// sum_k z_k v(label_k) in the truncated space.
Vector embed(const TruncatedFock& fock, const ExpLabelCombo& c);

struct IsometryCheck {
  double residual;  // |[W c1, W c2] - [c1, c2]| after embedding
  double bound;     // accumulated truncation tail bound
};

IsometryCheck isometry_check(const TruncatedFock& fock, const Vector& xi,
                             const ExpLabelCombo& c1, const ExpLabelCombo& c2);

}  // namespace krein

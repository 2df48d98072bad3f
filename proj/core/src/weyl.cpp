#include "krein/weyl.hpp"

#include <cmath>
#include <stdexcept>

namespace krein {

namespace {

constexpr double kLabelMergeTol = 1e-12;

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double occupation_log_factorial(const std::vector<int>& mu) {
  double sum = 0.0;
  for (int c : mu) sum += log_factorial(c);
  return sum;
}

// Ryser's formula with Gray-code updates of the column sums.
Complex permanent(const Matrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1.0;
  std::vector<Complex> row_sum(static_cast<std::size_t>(n), Complex(0.0));
  Complex total = 0.0;
  const unsigned long full = 1ul << n;
  unsigned long gray = 0;
  for (unsigned long iter = 1; iter < full; ++iter) {
    const unsigned long next = iter ^ (iter >> 1);
    const unsigned long changed = next ^ gray;
    int col = 0;
    while (!((changed >> col) & 1ul)) ++col;
    const double sign_col = (next & changed) ? 1.0 : -1.0;
    for (Index r = 0; r < n; ++r) row_sum[static_cast<std::size_t>(r)] += sign_col * m(r, col);
    gray = next;
    Complex prod = 1.0;
    for (Index r = 0; r < n; ++r) prod *= row_sum[static_cast<std::size_t>(r)];
    const int bits = __builtin_popcountl(next);
    total += ((n - bits) % 2 == 0 ? 1.0 : -1.0) * prod;
  }
  return total;
}

std::vector<int> letters_of(const std::vector<int>& mu) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int c = 0; c < mu[i]; ++c) letters.push_back(static_cast<int>(i));
  return letters;
}

// <(⊗^n J) e_mu, e_nu> = perm(J[nu | mu]) / sqrt(nu! mu!) on normalized
// symmetric basis vectors.
Complex symmetric_power_entry(const Matrix& j, const std::vector<int>& nu,
                              const std::vector<int>& mu) {
  const std::vector<int> rows = letters_of(nu);
  const std::vector<int> cols = letters_of(mu);
  const Index n = static_cast<Index>(rows.size());
  Matrix sub(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      sub(r, c) = j(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
  const double lognorm = 0.5 * (occupation_log_factorial(nu) + occupation_log_factorial(mu));
  return permanent(sub) * std::exp(-lognorm);
}

void enumerate_occupations(Index d, int degree, std::vector<int>& current,
                           std::vector<std::vector<int>>& out, Index pos, int remaining) {
  if (pos == d - 1) {
    current[static_cast<std::size_t>(pos)] = remaining;
    out.push_back(current);
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    current[static_cast<std::size_t>(pos)] = c;
    enumerate_occupations(d, degree, current, out, pos + 1, remaining - c);
  }
}

bool is_diagonal(const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (i != j && std::abs(m(i, j)) > 1e-14) return false;
  return true;
}

}  // namespace

Complex weyl_kernel(const KreinSpace& h, const Vector& xi, const Vector& eta) {
  const Vector diff = xi - eta;
  const double quad = indef_inner(h, diff, diff).real();
  const double phase = 0.5 * indef_inner(h, eta, xi).imag();
  return std::exp(Complex(0.0, phase)) * std::exp(-0.25 * quad);
}

Complex weyl_alpha(const KreinSpace& h, const Vector& xi, const Vector& eta) {
  return std::exp(Complex(0.0, -0.5 * indef_inner(h, xi, eta).imag()));
}

Complex weyl_sigma(const KreinSpace& h, const Vector& xi, const Vector& eta) {
  return std::exp(Complex(0.0, 0.5 * indef_inner(h, xi, eta).imag()));
}

double invariance_identity(const KreinSpace& h, const Vector& xi, const Vector& eta,
                           const Vector& eta2) {
  const Complex lhs = weyl_kernel(h, xi + eta, xi + eta2);
  const Complex rhs =
      std::conj(weyl_alpha(h, xi, eta)) * weyl_alpha(h, xi, eta2) * weyl_kernel(h, eta, eta2);
  return std::abs(lhs - rhs);
}

TruncatedFock TruncatedFock::make(const KreinSpace& h, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("TruncatedFock: cutoff must be >= 0");
  if (h.dim() == 0) throw std::invalid_argument("TruncatedFock: base space is empty");
  TruncatedFock fock;
  fock.H = h;
  fock.cutoff = cutoff;
  fock.degree_offset.push_back(0);
  std::vector<int> current(static_cast<std::size_t>(h.dim()), 0);
  for (int n = 0; n <= cutoff; ++n) {
    enumerate_occupations(h.dim(), n, current, fock.occupations, 0, n);
    fock.degree_offset.push_back(static_cast<Index>(fock.occupations.size()));
  }

  const Index dim = fock.dim();
  fock.JF = Matrix::Zero(dim, dim);
  const bool diag = is_diagonal(h.J);
  // The permanent assembly is exponential in the degree; diagonal symmetries
  // bypass it and carry no such limit.
  if (!diag && cutoff > 12)
    throw std::invalid_argument(
        "TruncatedFock: non-diagonal symmetries are supported up to cutoff 12");
  for (int n = 0; n <= cutoff; ++n) {
    const Index begin = fock.degree_offset[static_cast<std::size_t>(n)];
    const Index end = fock.degree_offset[static_cast<std::size_t>(n) + 1];
    for (Index i = begin; i < end; ++i) {
      const auto& mu = fock.occupations[static_cast<std::size_t>(i)];
      if (diag) {
        Complex prod = 1.0;
        for (Index l = 0; l < h.dim(); ++l)
          for (int c = 0; c < mu[static_cast<std::size_t>(l)]; ++c) prod *= h.J(l, l);
        fock.JF(i, i) = prod;
        continue;
      }
      for (Index k = i; k < end; ++k) {
        const Complex entry =
            symmetric_power_entry(h.J, fock.occupations[static_cast<std::size_t>(k)], mu);
        fock.JF(k, i) = entry;
        fock.JF(i, k) = std::conj(entry);
      }
    }
  }
  // Hermitian by assembly and squares to the identity degreewise; the
  // generic validation would cost an SVD of the full Fock dimension.
  fock.space = KreinSpace{fock.JF};
  return fock;
}

Vector exp_vector(const TruncatedFock& fock, const Vector& xi) {
  if (xi.size() != fock.H.dim()) throw std::invalid_argument("exp_vector: label dimension");
  Vector out(fock.dim());
  for (Index i = 0; i < fock.dim(); ++i) {
    const auto& mu = fock.occupations[static_cast<std::size_t>(i)];
    Complex prod = 1.0;
    for (Index l = 0; l < fock.H.dim(); ++l)
      for (int c = 0; c < mu[static_cast<std::size_t>(l)]; ++c) prod *= xi(l);
    out(i) = prod * std::exp(-0.5 * occupation_log_factorial(mu));
  }
  return out;
}

Vector v_vector(const TruncatedFock& fock, const Vector& xi) {
  const double norm2 = indef_inner(fock.H, xi, xi).real();
  return std::exp(-0.25 * norm2) * exp_vector(fock, xi / std::sqrt(2.0));
}

Complex fock_pair(const TruncatedFock& fock, const Vector& x, const Vector& y) {
  if (x.size() != fock.dim() || y.size() != fock.dim())
    throw std::invalid_argument("fock_pair: coordinate length");
  return (y.adjoint() * (fock.JF * x))(0, 0);
}

double kernel_truncation_bound(const KreinSpace& h, const Vector& xi, const Vector& eta,
                               int cutoff) {
  const double z = 0.5 * std::abs(indef_inner(h, eta, xi));
  const double quad = 0.25 * (indef_inner(h, xi, xi).real() + indef_inner(h, eta, eta).real());
  if (z == 0.0) return 0.0;
  const double logtail = (cutoff + 1) * std::log(z) + z - log_factorial(cutoff + 1);
  return std::exp(logtail - quad);
}

double kernel_truncation_exact(const KreinSpace& h, const Vector& xi, const Vector& eta,
                               int cutoff) {
  const Complex z = 0.5 * indef_inner(h, eta, xi);
  if (std::abs(z) == 0.0) return 0.0;
  const double quad = 0.25 * (indef_inner(h, xi, xi).real() + indef_inner(h, eta, eta).real());
  // term_{N+1} = z^{N+1} / (N+1)!, then multiply up.
  Complex term = std::exp(Complex(static_cast<double>(cutoff + 1) * std::log(std::abs(z)),
                                  static_cast<double>(cutoff + 1) * std::arg(z)) -
                          Complex(log_factorial(cutoff + 1), 0.0));
  Complex tail = 0.0;
  for (int n = cutoff + 1; n < cutoff + 200; ++n) {
    tail += term;
    term *= z / static_cast<double>(n + 1);
    if (std::abs(term) < 1e-30 * std::abs(tail)) break;
  }
  return std::abs(tail) * std::exp(-quad);
}

void ExpLabelCombo::add(Complex coeff, const Vector& label) {
  for (Term& term : terms) {
    if (term.label.size() == label.size() &&
        (term.label - label).cwiseAbs().maxCoeff() <= kLabelMergeTol) {
      term.coeff += coeff;
      return;
    }
  }
  terms.push_back(Term{coeff, label});
}

ExpLabelCombo ExpLabelCombo::single(Complex coeff, const Vector& label) {
  ExpLabelCombo c;
  c.add(coeff, label);
  return c;
}

ExpLabelCombo weyl_apply(const KreinSpace& h, const Vector& xi, const ExpLabelCombo& c) {
  ExpLabelCombo out;
  for (const auto& term : c.terms)
    out.add(term.coeff / weyl_alpha(h, xi, term.label), xi + term.label);
  return out;
}

Vector embed(const TruncatedFock& fock, const ExpLabelCombo& c) {
  Vector out = Vector::Zero(fock.dim());
  for (const auto& term : c.terms) out += term.coeff * v_vector(fock, term.label);
  return out;
}

IsometryCheck isometry_check(const TruncatedFock& fock, const Vector& xi,
                             const ExpLabelCombo& c1, const ExpLabelCombo& c2) {
  const ExpLabelCombo w1 = weyl_apply(fock.H, xi, c1);
  const ExpLabelCombo w2 = weyl_apply(fock.H, xi, c2);
  const Complex before = fock_pair(fock, embed(fock, c1), embed(fock, c2));
  const Complex after = fock_pair(fock, embed(fock, w1), embed(fock, w2));

  // The kernel-level identity is exact; only the two truncations contribute.
  double bound = 0.0;
  auto accumulate = [&](const ExpLabelCombo& a, const ExpLabelCombo& b) {
    for (const auto& ta : a.terms)
      for (const auto& tb : b.terms)
        bound += std::abs(ta.coeff) * std::abs(tb.coeff) *
                 kernel_truncation_bound(fock.H, tb.label, ta.label, fock.cutoff);
  };
  accumulate(c1, c2);
  accumulate(w1, w2);
  return IsometryCheck{std::abs(after - before), bound};
}

}  // namespace krein

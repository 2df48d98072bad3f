#include "krein/action.hpp"

#include <array>
#include <stdexcept>

namespace krein {

namespace {

InvolutiveSemigroup from_tables(std::vector<std::string> names, IntMatrix mult, int unit,
                                std::vector<int> inv) {
  InvolutiveSemigroup s{std::move(names), std::move(mult), unit, std::move(inv)};
  s.validate();
  return s;
}

}  // namespace

void InvolutiveSemigroup::validate() const {
  const int s = size();
  if (mult.rows() != s || mult.cols() != s || static_cast<int>(inv.size()) != s)
    throw std::invalid_argument("InvolutiveSemigroup: table sizes inconsistent");
  if (unit < 0 || unit >= s) throw std::invalid_argument("InvolutiveSemigroup: bad unit");
  auto in_range = [s](int v) { return v >= 0 && v < s; };
  for (int a = 0; a < s; ++a) {
    if (!in_range(inv[static_cast<std::size_t>(a)]))
      throw std::invalid_argument("InvolutiveSemigroup: involution out of range");
    for (int b = 0; b < s; ++b)
      if (!in_range(mult(a, b)))
        throw std::invalid_argument("InvolutiveSemigroup: product out of range");
  }
  for (int a = 0; a < s; ++a) {
    if (mult(unit, a) != a || mult(a, unit) != a)
      throw std::invalid_argument("InvolutiveSemigroup: unit laws fail");
    if (inv[static_cast<std::size_t>(inv[static_cast<std::size_t>(a)])] != a)
      throw std::invalid_argument("InvolutiveSemigroup: involution not involutive");
  }
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      if (inv[static_cast<std::size_t>(mult(a, b))] !=
          mult(inv[static_cast<std::size_t>(b)], inv[static_cast<std::size_t>(a)]))
        throw std::invalid_argument("InvolutiveSemigroup: involution not anti-multiplicative");
      for (int c = 0; c < s; ++c)
        if (mult(mult(a, b), c) != mult(a, mult(b, c)))
          throw std::invalid_argument("InvolutiveSemigroup: associativity fails");
    }
}

bool InvolutiveSemigroup::is_group_with_inverse_involution() const {
  for (int a = 0; a < size(); ++a) {
    const int ai = inv[static_cast<std::size_t>(a)];
    if (mult(a, ai) != unit || mult(ai, a) != unit) return false;
  }
  return true;
}

InvolutiveSemigroup InvolutiveSemigroup::cyclic_group(int order) {
  if (order < 1) throw std::invalid_argument("cyclic_group: order >= 1");
  std::vector<std::string> names;
  IntMatrix mult(order, order);
  std::vector<int> inv(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) {
    names.push_back("g" + std::to_string(a));
    inv[static_cast<std::size_t>(a)] = (order - a) % order;
    for (int b = 0; b < order; ++b) mult(a, b) = (a + b) % order;
  }
  return from_tables(std::move(names), std::move(mult), 0, std::move(inv));
}

InvolutiveSemigroup InvolutiveSemigroup::klein_four() {
  IntMatrix mult(4, 4);
  std::vector<int> inv = {0, 1, 2, 3};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mult(a, b) = a ^ b;
  return from_tables({"e", "x", "y", "xy"}, std::move(mult), 0, std::move(inv));
}

namespace {

// Permutation composition helpers for the concrete small groups.
using Perm = std::array<int, 4>;

int find_perm(const std::vector<Perm>& perms, const Perm& p) {
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (perms[i] == p) return static_cast<int>(i);
  throw std::logic_error("find_perm: closure violated");
}

InvolutiveSemigroup group_from_perms(std::vector<std::string> names,
                                     const std::vector<Perm>& perms, int degree) {
  const int s = static_cast<int>(perms.size());
  IntMatrix mult(s, s);
  std::vector<int> inv(static_cast<std::size_t>(s));
  for (int a = 0; a < s; ++a) {
    Perm ia{};
    for (int p = 0; p < degree; ++p) ia[static_cast<std::size_t>(perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)])] = p;
    for (int p = degree; p < 4; ++p) ia[static_cast<std::size_t>(p)] = p;
    inv[static_cast<std::size_t>(a)] = find_perm(perms, ia);
    for (int b = 0; b < s; ++b) {
      Perm ab{};
      for (int p = 0; p < degree; ++p)
        ab[static_cast<std::size_t>(p)] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(p)])];
      for (int p = degree; p < 4; ++p) ab[static_cast<std::size_t>(p)] = p;
      mult(a, b) = find_perm(perms, ab);
    }
  }
  return InvolutiveSemigroup{std::move(names), std::move(mult), 0, std::move(inv)};
}

}  // namespace

InvolutiveSemigroup InvolutiveSemigroup::symmetric3() {
  const std::vector<Perm> perms = {
      {0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}, {1, 0, 2, 3}, {0, 2, 1, 3}, {2, 1, 0, 3}};
  auto s = group_from_perms({"e", "r", "rr", "s01", "s12", "s02"}, perms, 3);
  s.validate();
  return s;
}

InvolutiveSemigroup InvolutiveSemigroup::dihedral4() {
  // Symmetries of the square as permutations of its vertices.
  const std::vector<Perm> perms = {
      {0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2},
      {1, 0, 3, 2}, {3, 2, 1, 0}, {0, 3, 2, 1}, {2, 1, 0, 3}};
  auto s = group_from_perms({"e", "r", "r2", "r3", "m0", "m1", "d0", "d1"}, perms, 4);
  s.validate();
  return s;
}

InvolutiveSemigroup InvolutiveSemigroup::trivial() {
  return from_tables({"e"}, IntMatrix::Zero(1, 1), 0, {0});
}

ActionSystem ActionSystem::trivial_alpha(InvolutiveSemigroup s, Index n_points,
                                         IntMatrix phi) {
  Eigen::MatrixXcd alpha = Eigen::MatrixXcd::Ones(s.size(), n_points);
  return ActionSystem{std::move(s), n_points, std::move(phi), std::move(alpha)};
}

ActionDiagnostics validate_action(const ActionSystem& action, double tol) {
  ActionDiagnostics diag;
  auto fail = [&diag](std::string msg, double residual = 1.0) {
    diag.ok = false;
    diag.violations.push_back(std::move(msg));
    diag.max_residual = std::max(diag.max_residual, residual);
  };

  const int s = action.S.size();
  const Index n = action.n_points;
  try {
    action.S.validate();
  } catch (const std::exception& e) {
    fail(e.what());
    return diag;
  }
  if (action.phi.rows() != s || action.phi.cols() != n ||
      action.alpha.rows() != s || action.alpha.cols() != n) {
    fail("table shapes inconsistent");
    return diag;
  }
  for (int a = 0; a < s; ++a)
    for (Index x = 0; x < n; ++x) {
      if (action.phi(a, x) < 0 || action.phi(a, x) >= n) {
        fail("phi out of range");
        return diag;
      }
      if (std::abs(action.alpha(a, x)) == 0.0) fail("alpha vanishes");
    }

  for (Index x = 0; x < n; ++x)
    if (action.phi(action.S.unit, x) != x) fail("phi(e, x) != x");
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      for (Index x = 0; x < n; ++x)
        if (action.phi(a, action.phi(b, x)) != action.phi(action.S.mult(a, b), x))
          fail("phi(a, phi(b, x)) != phi(ab, x)");

  // alpha(ab,x) conj(alpha(ab,y)) = alpha(a,phi(b,x)) conj(alpha(a,phi(b,y))) alpha(b,x) conj(alpha(b,y))
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      const int ab = action.S.mult(a, b);
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
          const Complex lhs = action.alpha(ab, x) * std::conj(action.alpha(ab, y));
          const Complex rhs = action.alpha(a, action.phi(b, x)) *
                              std::conj(action.alpha(a, action.phi(b, y))) *
                              action.alpha(b, x) * std::conj(action.alpha(b, y));
          const double res = std::abs(lhs - rhs);
          if (res > scaled_tol(tol, std::abs(lhs)))
            fail("multiplier relation fails at (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(x) + "," + std::to_string(y) + ")",
                 res);
        }
    }

  for (int a = 0; a < s; ++a) {
    const int aia = action.S.mult(a, action.S.inv[static_cast<std::size_t>(a)]);
    for (Index x = 0; x < n; ++x) {
      const double res = std::abs(action.alpha(aia, x) - 1.0);
      if (res > tol) fail("alpha(a I(a), x) != 1", res);
    }
  }
  return diag;
}

Eigen::MatrixXcd cocycle_of(const ActionSystem& action, double tol) {
  const ActionDiagnostics diag = validate_action(action, tol);
  if (!diag.ok) throw std::invalid_argument("cocycle_of: invalid action: " + diag.violations.front());

  const int s = action.S.size();
  Eigen::MatrixXcd sigma(s, s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      Complex value = 0.0;
      for (Index x = 0; x < action.n_points; ++x) {
        const Complex cur = action.alpha(action.S.mult(a, b), x) /
                            (action.alpha(a, action.phi(b, x)) * action.alpha(b, x));
        if (x == 0)
          value = cur;
        else if (std::abs(cur - value) > scaled_tol(tol, std::abs(value)))
          throw std::runtime_error("cocycle_of: sigma depends on the base point");
      }
      if (std::abs(std::abs(value) - 1.0) > tol)
        throw std::runtime_error("cocycle_of: sigma not unimodular");
      sigma(a, b) = value;
    }

  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      for (int c = 0; c < s; ++c) {
        const Complex lhs = sigma(a, b) * sigma(action.S.mult(a, b), c);
        const Complex rhs = sigma(a, action.S.mult(b, c)) * sigma(b, c);
        if (std::abs(lhs - rhs) > tol)
          throw std::runtime_error("cocycle_of: 2-cocycle identity fails");
      }
  return sigma;
}

Matrix psi_matrix(const ActionSystem& action, Index block_dim, int a) {
  if (a < 0 || a >= action.S.size()) throw std::invalid_argument("psi_matrix: bad element");
  const Index n = action.n_points;
  Matrix psi = Matrix::Zero(n * block_dim, n * block_dim);
  for (Index x = 0; x < n; ++x) {
    const Index y = action.phi(a, x);
    psi.block(y * block_dim, x * block_dim, block_dim, block_dim) +=
        (1.0 / action.alpha(a, x)) * Matrix::Identity(block_dim, block_dim);
  }
  return psi;
}

}  // namespace krein

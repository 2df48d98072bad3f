#include "krein/invariant.hpp"
#include "krein/random.hpp"
#include "test_instances.hpp"
#include "test_util.hpp"

using namespace krein;
using namespace krein::test;

TEST_CASE("invariance of scalar kernels under the swap") {
  const ActionSystem swap = z2_swap_action();
  const std::vector<std::string> pts = {"1", "2"};
  CHECK(is_invariant(scalar_kernel_on(pts, Matrix::Identity(2, 2) + Matrix::Ones(2, 2)), swap));
  CHECK(is_invariant(scalar_kernel_on(pts, m2(0, 1, 1, 0)), swap));
  CHECK_FALSE(is_invariant(scalar_kernel_on(pts, m2(1, 0, 0, -1)), swap));
  CHECK_FALSE(is_invariant(scalar_kernel_on(pts, m2(1, 0, 0, 2)), swap));
}

TEST_CASE("twisted averaging produces invariant kernels") {
  Rng rng(61);
  for (const ActionSystem& action : {z2_swap_action(), heisenberg_action(),
                                     boost_swap_action(),
                                     translation_action(InvolutiveSemigroup::symmetric3())}) {
    for (int trial = 0; trial < 5; ++trial) {
      const KreinSpace h = rng.krein_space(1 + trial % 2);
      const HermitianKernel k = random_invariant_kernel(action, h, rng);
      CHECK(is_invariant(k, action));
    }
  }
}

TEST_CASE("group actions preserve the kernel form (isometry of psi)") {
  Rng rng(62);
  for (const ActionSystem& action :
       {z2_swap_action(), heisenberg_action(), boost_swap_action(),
        translation_action(InvolutiveSemigroup::dihedral4())}) {
    const KreinSpace h = rng.krein_space(2);
    const HermitianKernel k = random_invariant_kernel(action, h, rng);
    const Matrix bk = big_matrix(k);
    for (int a = 0; a < action.S.size(); ++a) {
      const Matrix psi = psi_matrix(action, h.dim(), a);
      CHECK(dist(psi.adjoint() * bk * psi, bk) < 1e-12 * std::max(1.0, spectral_norm(bk)));
    }
  }
}

TEST_CASE("psi preserves the isotropic subspace of an invariant kernel") {
  // B_K psi_a vanishes on ker B_K, by rank arithmetic: rank [B_K | B_K psi_a]
  // equals rank B_K.
  const ActionSystem swap = z2_swap_action();
  const HermitianKernel ones = scalar_kernel_on({"1", "2"}, Matrix::Ones(2, 2));

  const ActionSystem z4 = translation_action(InvolutiveSemigroup::cyclic_group(4));
  Matrix circulant(4, 4);  // rank-2 invariant kernel: 1 + i^{x-y}
  for (Index x = 0; x < 4; ++x)
    for (Index y = 0; y < 4; ++y)
      circulant(x, y) = 1.0 + std::pow(Complex(0.0, 1.0), static_cast<double>(x - y));
  const HermitianKernel degenerate =
      scalar_kernel_on({"g0", "g1", "g2", "g3"}, circulant);
  REQUIRE(is_invariant(degenerate, z4));
  REQUIRE(rank_of(big_matrix(degenerate)) == 2);

  struct Case {
    const HermitianKernel* k;
    const ActionSystem* action;
  };
  for (const Case& c : {Case{&ones, &swap}, Case{&degenerate, &z4}}) {
    const Matrix bk = big_matrix(*c.k);
    const Eigh e = eigh(bk);
    const double cutoff = kZeroCutoff * e.values.cwiseAbs().maxCoeff();
    std::vector<Index> null_indices;
    for (Index i = 0; i < e.values.size(); ++i)
      if (std::abs(e.values(i)) <= cutoff) null_indices.push_back(i);
    REQUIRE(!null_indices.empty());
    Matrix uker(bk.rows(), static_cast<Index>(null_indices.size()));
    for (std::size_t j = 0; j < null_indices.size(); ++j)
      uker.col(static_cast<Index>(j)) = e.vectors.col(null_indices[j]);

    for (int a = 0; a < c.action->S.size(); ++a) {
      const Matrix psi = psi_matrix(*c.action, c.k->dim(), a);
      Matrix stacked(bk.rows(), 2 * uker.cols());
      stacked << uker, psi * uker;  // psi_a(ker) inside ker <=> no rank growth
      CHECK(rank_of(stacked) == uker.cols());
    }
  }
}

TEST_CASE("phi-bounded norms") {
  const ActionSystem trivial = ActionSystem::trivial_alpha(InvolutiveSemigroup::trivial(), 1,
                                                           IntMatrix::Zero(1, 1));
  const HermitianKernel one = scalar_kernel_on({"x"}, Matrix::Identity(1, 1));
  CHECK(phi_bounded_norms(one, trivial) == std::vector<double>{1.0});

  const ActionSystem swap = z2_swap_action();
  const HermitianKernel eye = scalar_kernel_on({"1", "2"}, Matrix::Identity(2, 2));
  for (double norm : phi_bounded_norms(eye, swap)) CHECK(norm == doctest::Approx(1.0));

  Rng rng(63);
  const HermitianKernel k = random_invariant_kernel(swap, KreinSpace::hilbert(2), rng);
  const std::vector<double> norms = phi_bounded_norms(default_dominant(k), swap);
  for (double n : norms) CHECK(std::isfinite(n));
}

TEST_CASE("dominants whose null space moves under the action are rejected") {
  // L = diag(1, 0) as a scalar kernel is positive semidefinite but the swap
  // maps its null space off itself.
  const ActionSystem swap = z2_swap_action();
  const HermitianKernel l = scalar_kernel_on({"1", "2"}, m2(1, 0, 0, 0));
  REQUIRE(is_positive_definite(l));
  CHECK_THROWS(phi_bounded_norms(l, swap));
}

TEST_CASE("non-invariant kernels are rejected by the invariant pipeline") {
  const ActionSystem swap = z2_swap_action();
  const HermitianKernel k = scalar_kernel_on({"1", "2"}, m2(1, 0, 0, -1));
  CHECK_THROWS_AS((void)invariant_kolmogorov(k, swap), std::invalid_argument);
}

TEST_CASE("invariant factorization of the swap kernel") {
  const ActionSystem swap = z2_swap_action();
  const HermitianKernel k = scalar_kernel_on({"1", "2"}, m2(0, 1, 1, 0));
  const InvariantDecomposition dec = invariant_kolmogorov(k, swap);

  CHECK(dist(dec.pipeline.decomposition.space.J, m2(1, 0, 0, -1)) < 1e-12);
  const Matrix ug = dec.rep.U[1];
  CHECK(dist(ug, m2(1, 0, 0, -1)) < 1e-10);
  CHECK(dist(ug * ug, Matrix::Identity(2, 2)) < 1e-10);
  CHECK(classify(dec.rep.u_operator(1)).selfadjoint);
  CHECK(dec.relation_residual < 1e-10);
  CHECK(dec.rep_residual < 1e-10);
  CHECK(dec.intertwine_residual < 1e-10);
}

TEST_CASE("trivial semigroup reduces to the plain factorization") {
  Rng rng(64);
  IntMatrix phi(1, 3);
  phi << 0, 1, 2;
  const ActionSystem trivial =
      ActionSystem::trivial_alpha(InvolutiveSemigroup::trivial(), 3, phi);
  const HermitianKernel k = rng.hermitian_kernel(rng.krein_space(2), 3);
  const InvariantDecomposition dec = invariant_kolmogorov(k, trivial);
  CHECK(dec.rep.U.size() == 1);
  CHECK(dist(dec.rep.U[0],
             Matrix::Identity(dec.rep.space.dim(), dec.rep.space.dim())) < 1e-10);
  CHECK(reconstruct_residual(dec.pipeline.decomposition, k) < 1e-9);
}

TEST_CASE("Toeplitz kernels dilate to isometries (Naimark picture)") {
  Rng rng(65);
  for (const InvolutiveSemigroup& group :
       {InvolutiveSemigroup::cyclic_group(3), InvolutiveSemigroup::symmetric3()}) {
    const ActionSystem action = translation_action(group);
    const HermitianKernel k = toeplitz_kernel(group, rng);
    REQUIRE(is_positive_definite(k));
    REQUIRE(is_invariant(k, action));

    const InvariantDecomposition dec = invariant_kolmogorov(k, action);
    // Hilbert representation space for a positive kernel.
    CHECK(signature(dec.rep.space).minus == 0);
    for (int a = 0; a < group.size(); ++a) {
      const Matrix& u = dec.rep.U[static_cast<std::size_t>(a)];
      const Matrix us = sharp_adjoint(dec.rep.u_operator(a)).m;
      CHECK(dist(us * u, Matrix::Identity(dec.rep.space.dim(), dec.rep.space.dim())) < 1e-9);
    }

    // K(a, b) = V(e)# U(a)# U(b) V(e).
    const Matrix ve = dec.pipeline.decomposition.V[static_cast<std::size_t>(group.unit)];
    for (int a = 0; a < group.size(); ++a)
      for (int b = 0; b < group.size(); ++b) {
        const Matrix lhs = k.block(a, b);
        const Matrix rhs = ve.adjoint() * dec.rep.space.J *
                           sharp_adjoint(dec.rep.u_operator(a)).m *
                           dec.rep.U[static_cast<std::size_t>(b)] * ve;
        CHECK(dist(lhs, rhs) < 1e-9);
      }
  }
}

TEST_CASE("U(a)# U(a) = U(I(a) a) also off the group case") {
  const ActionSystem idem = idempotent_action();
  const HermitianKernel k = scalar_kernel_on({"1", "2"}, m2(1, 1, 1, -1));
  REQUIRE(is_invariant(k, idem));
  const InvariantDecomposition dec = invariant_kolmogorov(k, idem);
  const Matrix up = dec.rep.U[1];
  const Matrix ups = sharp_adjoint(dec.rep.u_operator(1)).m;
  CHECK(dist(ups * up, up) < 1e-9);  // I(p) p = p
  CHECK(dist(up * up, up) < 1e-9);
}

TEST_CASE("Heisenberg multiplier gives a genuinely projective representation") {
  Rng rng(66);
  const ActionSystem action = heisenberg_action();
  const HermitianKernel k = random_invariant_kernel(action, KreinSpace::hilbert(1), rng);
  const InvariantDecomposition dec = invariant_kolmogorov(k, action);
  CHECK(dec.rep_residual < 1e-9);
  CHECK(dec.relation_residual < 1e-9);
  // sigma(1,2) = -sigma(2,1): U(1)U(2) = -U(2)U(1) wherever the rep is faithful.
  CHECK(std::abs(dec.rep.sigma(2, 1) + dec.rep.sigma(1, 2)) < 1e-12);
}

TEST_CASE("boost-flavored multiplier instance") {
  const ActionSystem action = boost_swap_action();
  const HermitianKernel k = scalar_kernel_on({"1", "2"}, m2(1, 3, 3, 4));
  REQUIRE(is_invariant(k, action));
  const InvariantDecomposition dec = invariant_kolmogorov(k, action);
  CHECK(dec.rep_residual < 1e-9);
  CHECK(dec.relation_residual < 1e-9);
}

TEST_CASE("fundamental reducibility") {
  SUBCASE("Hilbert representations reduce with J = I") {
    Rng rng(67);
    const InvolutiveSemigroup z3 = InvolutiveSemigroup::cyclic_group(3);
    const ActionSystem action = translation_action(z3);
    const HermitianKernel k = toeplitz_kernel(z3, rng);
    const InvariantDecomposition dec = invariant_kolmogorov(k, action);
    const ReducibilityReport r = fundamental_reducibility(dec.rep);
    CHECK(r.reducible);
  }

  SUBCASE("boost-conjugated involution fails the natural candidate") {
    const double t = 0.8;
    const Matrix b = m2(std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t));
    const Matrix binv = m2(std::cosh(t), -std::sinh(t), -std::sinh(t), std::cosh(t));
    const Matrix ug = b * m2(1, 0, 0, -1) * binv;
    ProjectiveRepresentation rep{KreinSpace::diag_signature(1, 1),
                                 {Matrix::Identity(2, 2), ug},
                                 Eigen::MatrixXcd::Ones(2, 2)};
    const ReducibilityReport r = fundamental_reducibility(rep, rep.space.J);
    CHECK_FALSE(r.reducible);
    CHECK(r.commutation_residual > 0.1);

    // The tester is candidate-dependent: U(g) itself is a commuting
    // fundamental symmetry for this representation.
    const ReducibilityReport r2 = fundamental_reducibility(rep, ug);
    CHECK(r2.reducible);

    CHECK_THROWS(fundamental_reducibility(rep, m2(1, 1, 0, 1)));  // not an involution
  }

  SUBCASE("pipeline representation with an invariant dominant reduces") {
    const ActionSystem swap = z2_swap_action();
    const HermitianKernel k = scalar_kernel_on({"1", "2"}, m2(0, 1, 1, 0));
    const InvariantDecomposition dec = invariant_kolmogorov(k, swap);
    const ReducibilityReport r = fundamental_reducibility(dec.rep);
    CHECK(r.reducible);
    CHECK(r.commutation_residual < 1e-10);
  }
}

TEST_CASE("uniform averaging produces a unitarizing similarity") {
  SUBCASE("already unitary representations are fixed") {
    Rng rng(68);
    Matrix p = Matrix::Zero(3, 3);  // 3-cycle permutation, p^3 = I
    p(0, 2) = p(1, 0) = p(2, 1) = 1.0;
    ProjectiveRepresentation rep{KreinSpace::hilbert(3),
                                 {Matrix::Identity(3, 3), p, p * p},
                                 Eigen::MatrixXcd::Ones(3, 3)};
    const Matrix phi = dixmier_average(rep);
    CHECK(dist(phi, Matrix::Identity(3, 3)) < 1e-10);
  }

  SUBCASE("boost-conjugated involution") {
    const double t = 0.7;
    const Matrix b = m2(std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t));
    const Matrix binv = m2(std::cosh(t), -std::sinh(t), -std::sinh(t), std::cosh(t));
    const Matrix ug = b * m2(1, 0, 0, -1) * binv;
    ProjectiveRepresentation rep{KreinSpace::hilbert(2),
                                 {Matrix::Identity(2, 2), ug},
                                 Eigen::MatrixXcd::Ones(2, 2)};
    const Matrix phi = dixmier_average(rep);
    const Matrix phi_inv = phi.partialPivLu().inverse();
    const Matrix tg = phi * ug * phi_inv;
    CHECK(dist(tg.adjoint() * tg, Matrix::Identity(2, 2)) < 1e-10);
  }

  SUBCASE("scaled rotation representation of Z4") {
    const Matrix d = m2(2, 0, 0, 1);
    const Matrix dinv = m2(0.5, 0, 0, 1);
    const Matrix r = m2(0, -1, 1, 0);
    std::vector<Matrix> u;
    Matrix rk = Matrix::Identity(2, 2);
    for (int k = 0; k < 4; ++k) {
      u.push_back(d * rk * dinv);
      rk = rk * r;
    }
    ProjectiveRepresentation rep{KreinSpace::hilbert(2), u, Eigen::MatrixXcd::Ones(4, 4)};
    const Matrix phi = dixmier_average(rep);
    const Matrix phi_inv = phi.partialPivLu().inverse();
    for (const Matrix& ua : rep.U) {
      const Matrix t = phi * ua * phi_inv;
      CHECK(dist(t.adjoint() * t, Matrix::Identity(2, 2)) < 1e-10);
    }
  }

  SUBCASE("projective representations with unimodular cocycle average too") {
    Rng rng(71);
    const ActionSystem action = heisenberg_action();
    const HermitianKernel k = random_invariant_kernel(action, KreinSpace::hilbert(1), rng);
    const InvariantDecomposition dec = invariant_kolmogorov(k, action);
    const Matrix phi = dixmier_average(dec.rep);
    const Matrix phi_inv = phi.partialPivLu().inverse();
    for (const Matrix& ua : dec.rep.U) {
      const Matrix t = phi * ua * phi_inv;
      CHECK(dist(t.adjoint() * t,
                 Matrix::Identity(t.rows(), t.cols())) < 1e-10);
    }
  }

  SUBCASE("non-group families are rejected") {
    const ActionSystem idem = idempotent_action();
    const HermitianKernel k = scalar_kernel_on({"1", "2"}, m2(1, 1, 1, -1));
    const InvariantDecomposition dec = invariant_kolmogorov(k, idem);
    CHECK_THROWS(dixmier_average(dec.rep));
  }
}

TEST_CASE("invariant Jordan decomposition") {
  SUBCASE("positive kernels split trivially") {
    Rng rng(69);
    const ActionSystem swap = z2_swap_action();
    const HermitianKernel pos =
        scalar_kernel_on({"1", "2"}, Matrix::Identity(2, 2) + Matrix::Ones(2, 2));
    const InvariantJordan ij = invariant_jordan(pos, swap);
    REQUIRE(ij.established);
    CHECK(kernel_distance(ij.kernels->plus, pos) < 1e-9);
    CHECK(kernel_norm(ij.kernels->minus) < 1e-9);
  }

  SUBCASE("swap kernel splits into the projected halves") {
    const ActionSystem swap = z2_swap_action();
    const HermitianKernel k = scalar_kernel_on({"1", "2"}, m2(0, 1, 1, 0));
    const InvariantJordan ij = invariant_jordan(k, swap);
    REQUIRE(ij.established);
    CHECK(kernel_distance(ij.kernels->plus, scalar_kernel_on({"1", "2"}, 0.5 * m2(1, 1, 1, 1))) <
          1e-10);
    CHECK(kernel_distance(ij.kernels->minus, scalar_kernel_on({"1", "2"}, 0.5 * m2(1, -1, -1, 1))) <
          1e-10);
    CHECK(is_invariant(ij.kernels->plus, swap));
    CHECK(is_invariant(ij.kernels->minus, swap));
  }

  SUBCASE("the boost-flavored instance is reported not established") {
    const ActionSystem action = boost_swap_action();
    const HermitianKernel k = scalar_kernel_on({"1", "2"}, m2(1, 3, 3, 4));
    const InvariantJordan ij = invariant_jordan(k, action);
    CHECK_FALSE(ij.established);
    CHECK(ij.note.find("not established") != std::string::npos);
  }

  SUBCASE("the idempotent instance is reported not established") {
    const ActionSystem idem = idempotent_action();
    const HermitianKernel k = scalar_kernel_on({"1", "2"}, m2(1, 1, 1, -1));
    const InvariantJordan ij = invariant_jordan(k, idem);
    CHECK_FALSE(ij.established);
  }
}

TEST_CASE("invariant decompositions from different dominants are equivalent") {
  Rng rng(70);
  for (const InvolutiveSemigroup& group :
       {InvolutiveSemigroup::cyclic_group(2), InvolutiveSemigroup::cyclic_group(3)}) {
    const ActionSystem action = translation_action(group);
    const KreinSpace h = rng.krein_space(2);
    const HermitianKernel k = random_invariant_kernel(action, h, rng);

    const InvariantDecomposition d1 = invariant_kolmogorov(k, action);
    // Enlarging by the unit-form kernel delta_xy J keeps the big matrix PSD
    // (its Gram realization is 0.4 I) and stays invariant under the action.
    HermitianKernel bigger = default_dominant(k);
    for (Index x = 0; x < bigger.n(); ++x) bigger.block(x, x) += 0.4 * h.J;
    REQUIRE(is_invariant(bigger, action));
    const InvariantDecomposition d2 = invariant_kolmogorov(k, action, bigger);

    const auto phi = unitary_equivalence(d1.pipeline.decomposition, d2.pipeline.decomposition);
    REQUIRE(phi.has_value());
    for (int a = 0; a < group.size(); ++a) {
      const Matrix lhs = phi->m * d1.rep.U[static_cast<std::size_t>(a)];
      const Matrix rhs = d2.rep.U[static_cast<std::size_t>(a)] * phi->m;
      CHECK(dist(lhs, rhs) < 1e-9 * std::max(1.0, spectral_norm(lhs)));
    }
  }
}

#include "doctest.h"
#include "fixtures.hpp"
#include "workbench/errors.hpp"
#include "workbench/selftest.hpp"

using namespace workbench;
using namespace workbench::testing;

TEST_CASE("matrix representations check their brackets") {
  CHECK(heis_oracle().unitary_flag == false);
  CHECK(su2_oracle().unitary_flag == true);
  // Swapping the generators breaks [X1, X2] = X3.
  MatrixRep h = heis_oracle();
  CHECK_THROWS_AS(make_matrix_rep(LieAlgebra::heisenberg(),
                                  {h.matrices[1], h.matrices[0],
                                   h.matrices[2]}),
                  ValidationError);
  CHECK_THROWS_AS(make_matrix_rep(LieAlgebra::heisenberg(),
                                  {h.matrices[0], h.matrices[1]}),
                  ValidationError);
}

TEST_CASE("cyclic data validation") {
  // Non-skew generators are rejected.
  CHECK_THROWS_AS(CyclicData::create(heis_oracle(), Matrix::identity(3),
                                     {Scalar(1), Scalar(0), Scalar(0)}),
                  ValidationError);
  // A cyclic vector that is not J-fixed is rejected.
  MatrixRep rep = make_matrix_rep(LieAlgebra::abelian(1),
                                  {int_matrix(2, {0, 1, -1, 0})});
  CHECK_THROWS_AS(CyclicData::create(rep, Matrix::identity(2),
                                     {Scalar::i(), Scalar(0)}),
                  ValidationError);
  // A non-unit vector is rejected.
  CHECK_THROWS_AS(CyclicData::create(rep, Matrix::identity(2),
                                     {Scalar(2), Scalar(0)}),
                  ValidationError);
}

TEST_CASE("the quarter-turn state realizes cosine") {
  CyclicData cd = make_cos();
  DualFunctional omega = state_from_rep(cd);
  for (unsigned k = 0; k <= 8; ++k) {
    Scalar want(cos_taylor(k) * Rational(factorial(k)));
    CHECK(omega.coeff(MultiIndex{k}) == want);
  }
  CHECK(hermitian_state_check(omega, 8));
  // monomial_vector matches the generic matrix route.
  for (unsigned k = 0; k <= 5; ++k) {
    std::vector<Scalar> direct = cd.monomial_vector(MultiIndex{k});
    std::vector<Scalar> via = apply_element(
        cd.rep(), PbwElement::monomial(cd.rep().algebra, MultiIndex{k}),
        cd.cyclic());
    CHECK(direct == via);
  }
}

TEST_CASE("equivariance of representative functionals") {
  CyclicData so3 = make_so3();
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    PbwElement e = rng.element(so3.rep().algebra, 3, 2);
    std::vector<Scalar> xi = rng.vec(3);
    CHECK(vanishes_up_to(equivariance_residual(so3, e, xi), 4));
  }
}

TEST_CASE("conjugation intertwines with the involution") {
  CyclicData grid = make_grid4();
  Rng rng(32);
  std::vector<Scalar> xi = rng.vec(4);
  DualFunctional lhs = representative_functional(grid, grid.conjugation(xi));
  DualFunctional rhs = dual_involution(representative_functional(grid, xi));
  for (const auto &alpha : indices_up_to(3, 4))
    CHECK(lhs.coeff(alpha) == rhs.coeff(alpha));
}

TEST_CASE("moment states") {
  DualFunctional gauss =
      moment_state(LieAlgebra::abelian(1), gaussian_moments(4));
  CHECK(gauss.coeff(MultiIndex{0}) == Scalar(1));
  CHECK(gauss.coeff(MultiIndex{1}) == Scalar(0));
  CHECK(gauss.coeff(MultiIndex{2}) == Scalar(-1));
  CHECK(gauss.coeff(MultiIndex{4}) == Scalar(3));
  CHECK(gauss.order().bound() == 4);
  CHECK_THROWS_AS(moment_state(LieAlgebra::abelian(2), {Rational(1)}),
                  ValidationError);
  CHECK_THROWS_AS(moment_state(LieAlgebra::abelian(1), {Rational(2)}),
                  ValidationError);
  try {
    moment_state(LieAlgebra::abelian(1),
                 {Rational(1), Rational(0), Rational(-1)});
    FAIL("expected PositivityFailure");
  } catch (const PositivityFailure &e) {
    CHECK(e.witness == "X1");
  }
}

TEST_CASE("orbit generating family") {
  CyclicData cd = make_cos();
  auto fam = orbit_algebra_generators(cd, {cd.cyclic()}, 2);
  // Monomials of degree <= 2 in one variable: three seeds paired with
  // their involutions.
  REQUIRE(fam.size() == 3);
  DualFunctional omega = state_from_rep(cd);
  for (const auto &alpha : indices_up_to(1, 4))
    CHECK(fam[0].first.coeff(alpha) == omega.coeff(alpha));
  for (std::size_t k = 0; k < fam.size(); ++k)
    for (const auto &alpha : indices_up_to(1, 4))
      CHECK(fam[k].second.coeff(alpha) ==
            dual_involution(fam[k].first).coeff(alpha));
}

#include "doctest.h"
#include "fixtures.hpp"
#include "workbench/errors.hpp"
#include "workbench/selftest.hpp"

using namespace workbench;
using namespace workbench::testing;

TEST_CASE("functional evaluation and truncation bookkeeping") {
  auto line = LieAlgebra::abelian(1);
  TermMap t;
  t.emplace(MultiIndex{0}, Scalar(1));
  t.emplace(MultiIndex{2}, Scalar(-3));
  DualFunctional a = DualFunctional::from_table(line, TruncOrder::at(4), t);
  CHECK(a.coeff(MultiIndex{2}) == Scalar(-3));
  CHECK(a.coeff(MultiIndex{3}) == Scalar(0));
  CHECK(a.order().bound() == 4);
  CHECK_THROWS_AS(a.coeff(MultiIndex{5}), OrderExceeded);
  PbwElement e = PbwElement::monomial(line, MultiIndex{2}, Scalar(2)) +
                 PbwElement::one(line);
  CHECK(a.evaluate(e) == Scalar(-5));
}

TEST_CASE("dual product against the binomial convolution oracle") {
  auto heis = LieAlgebra::heisenberg();
  Rng rng(21);
  DualFunctional a = rng.functional(heis, 4);
  DualFunctional b = rng.functional(heis, 4);
  DualFunctional ab = dual_product(a, b);
  CHECK(ab.order().bound() == 4);
  for (const auto &alpha : indices_up_to(3, 4)) {
    Scalar want(0);
    for (const auto &beta : indices_up_to(3, degree(alpha))) {
      if (!index_leq(beta, alpha)) continue;
      want += Scalar(Rational(multi_binomial(alpha, beta))) * a.coeff(beta) *
              b.coeff(sub_index(alpha, beta));
    }
    CHECK(ab.coeff(alpha) == want);
  }
}

TEST_CASE("action shifts the argument") {
  auto line = LieAlgebra::abelian(1);
  // a(X^k) = k! realizes the geometric series sum x^k.
  DualFunctional a = DualFunctional::from_function(
      line, TruncOrder::unbounded(),
      [](const MultiIndex &alpha) { return Scalar(Rational(factorial(alpha[0]))); });
  // act(X, a)(X^k) = a(conj(X)^dagger X^k) = -a(X^(k+1)).
  DualFunctional xa = act(PbwElement::generator(line, 0), a);
  for (unsigned k = 0; k <= 5; ++k)
    CHECK(xa.coeff(MultiIndex{k}) == Scalar(-Rational(factorial(k + 1))));
  // The derivative of 1/(1-x) is the square: f_{xa} = -f_a * f_a ... checked
  // through the series layer at order 6.
  PowerSeries sa = to_power_series(a, 6);
  PowerSeries sxa = to_power_series(xa, 6);
  PowerSeries minus_sq = series_product(sa, sa);
  for (const auto &[alpha, c] : sxa.coeffs)
    CHECK(c == Scalar(0) - minus_sq.coeffs.at(alpha));
}

TEST_CASE("involution conjugates the coefficient table") {
  auto line = LieAlgebra::abelian(1);
  TermMap t;
  t.emplace(MultiIndex{1}, Scalar(Rational(2), Rational(5)));
  t.emplace(MultiIndex{2}, Scalar(Rational(0), Rational(1)));
  DualFunctional a = DualFunctional::from_table(line, TruncOrder::at(3), t);
  DualFunctional ad = dual_involution(a);
  CHECK(ad.coeff(MultiIndex{1}) == Scalar(Rational(2), Rational(-5)));
  CHECK(ad.coeff(MultiIndex{2}) == Scalar(Rational(0), Rational(-1)));
  CHECK(ad.coeff(MultiIndex{0}) == Scalar(0));
  // Compatible with the module action: (E a)^dagger = conj(E) a^dagger.
  PbwElement e = PbwElement::monomial(line, MultiIndex{1}, Scalar::i());
  DualFunctional lhs = dual_involution(act(e, a));
  DualFunctional rhs = act(conjugate(e), ad);
  for (unsigned k = 0; k <= 2; ++k)
    CHECK(lhs.coeff(MultiIndex{k}) == rhs.coeff(MultiIndex{k}));
}

TEST_CASE("derivation residual vanishes and truncates") {
  auto su2 = LieAlgebra::su2();
  Rng rng(22);
  DualFunctional a = rng.functional(su2, 4);
  DualFunctional b = rng.functional(su2, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    DualFunctional r = derivation_residual(i, a, b);
    CHECK(vanishes_up_to(r, 3));
  }
}

TEST_CASE("series text round-trip and errors") {
  auto line = LieAlgebra::abelian(1);
  TermMap t;
  t.emplace(MultiIndex{0}, Scalar(1));
  t.emplace(MultiIndex{1}, Scalar(Rational(1, 2), Rational(-1)));
  DualFunctional a = DualFunctional::from_table(line, TruncOrder::at(2), t);
  PowerSeries s = to_power_series(a, 2);
  std::string text = series_to_text(s);
  CHECK(series_from_text(text) == s);
  CHECK_THROWS_AS(series_from_text(""), ParseError);
  CHECK_THROWS_AS(series_from_text("alpha= 0 coeff= 1/1 + 0/1 i\n"
                                   "alpha= 0 coeff= 1/1 + 0/1 i\n"),
                  ParseError);
  CHECK_THROWS_AS(series_from_text("alpha= 0 coeff= nope\n"), ParseError);
}

TEST_CASE("radius of the geometric series") {
  auto line = LieAlgebra::abelian(1);
  DualFunctional a = DualFunctional::from_function(
      line, TruncOrder::unbounded(),
      [](const MultiIndex &alpha) { return Scalar(Rational(factorial(alpha[0]))); });
  RadiusEstimate est = radius_estimate(to_power_series(a, 10), {Rational(1)});
  // Every sample of the geometric series sits exactly at 1.
  for (const auto &s : est.samples) CHECK(s.value.cmp(BigFloat(Rational(1))) == 0);
  CHECK(est.estimate.cmp(BigFloat(Rational(1))) == 0);
  CHECK_THROWS_AS(
      radius_estimate(to_power_series(a, 10), {Rational(1), Rational(1)}),
      DimensionMismatch);
}

#include "doctest.h"
#include "fixtures.hpp"
#include "workbench/errors.hpp"
#include "workbench/selftest.hpp"

using namespace workbench;
using namespace workbench::testing;

TEST_CASE("symmetrization and expansion") {
  PlainTensor t{2, 2, {}};
  t.coeffs[{0, 1}] = Scalar(1);
  SymTensor s = symmetrize(t);
  REQUIRE(s.coeffs.size() == 1);
  CHECK(s.coeffs.at(MultiIndex{1, 1}) == Scalar(1));
  PlainTensor back = expand(s);
  CHECK(back.coeffs.at(Word{0, 1}) == Scalar(Rational(1, 2)));
  CHECK(back.coeffs.at(Word{1, 0}) == Scalar(Rational(1, 2)));
  // Projection is idempotent.
  CHECK(symmetrize(back).coeffs == s.coeffs);
  CHECK(tensor_inner(t, expand(s)) == Scalar(Rational(1, 2)));
}

TEST_CASE("symmetric inner product weights") {
  SymTensor a{2, 2, {}};
  a.coeffs[MultiIndex{1, 1}] = Scalar(1);
  CHECK(sym_inner(a, a) == Scalar(Rational(1, 2)));
  SymTensor b{2, 2, {}};
  b.coeffs[MultiIndex{2, 0}] = Scalar(1);
  CHECK(sym_inner(b, b) == Scalar(1));
  CHECK(sym_inner(a, b) == Scalar(0));
  CHECK_THROWS_AS(sym_inner(a, SymTensor{2, 3, {}}), DegreeMismatch);
}

TEST_CASE("polynomial algebra") {
  SymPolynomial e1 = SymPolynomial::basis_vector(2, 0);
  SymPolynomial e2 = SymPolynomial::basis_vector(2, 1);
  SymPolynomial p = poly_multiply(e1 + e2, e1 + e2);
  CHECK(p.coeff(MultiIndex{2, 0}) == Scalar(1));
  CHECK(p.coeff(MultiIndex{1, 1}) == Scalar(2));
  CHECK(p.coeff(MultiIndex{0, 2}) == Scalar(1));
  CHECK(p.top_degree() == 2);
  SymPolynomial one = SymPolynomial::constant(2, Scalar(1));
  CHECK(poly_multiply(one, p) == p);
  // Powers of a point vector match the multinomial expansion.
  std::vector<Scalar> xi{Scalar(1), Scalar::i()};
  SymPolynomial x3 = vector_power(xi, 3);
  CHECK(x3.coeff(MultiIndex{3, 0}) == Scalar(1));
  CHECK(x3.coeff(MultiIndex{2, 1}) == Scalar(Rational(0), Rational(3)));
  CHECK(x3.coeff(MultiIndex{1, 2}) == Scalar(-3));
  CHECK(x3.coeff(MultiIndex{0, 3}) == Scalar(Rational(0), Rational(-1)));
  // <xi^n, xi^n> = <xi, xi>^n.
  Scalar ip = sym_inner(x3.component(3), x3.component(3));
  CHECK(ip == Scalar(8));
}

TEST_CASE("evaluation is conjugate linear in the coefficients") {
  SymPolynomial p =
      SymPolynomial::monomial(2, MultiIndex{1, 1}, Scalar::i()) +
      SymPolynomial::constant(2, Scalar(Rational(1), Rational(2)));
  std::vector<Scalar> xi{Scalar(2), Scalar(3)};
  // conj(i) * 6 + conj(1 + 2i) = -6i + 1 - 2i.
  CHECK(evaluate_poly(p, xi) == Scalar(Rational(1), Rational(-8)));
  CHECK_THROWS_AS(evaluate_poly(p, {Scalar(1)}), DimensionMismatch);
}

TEST_CASE("weighted norms") {
  SymPolynomial e1 = SymPolynomial::basis_vector(2, 0);
  RNorm n = r_norm(e1, Rational(7, 3));
  CHECK(n.squared == std::vector<std::pair<unsigned, Rational>>{
                         {1, Rational(1)}});
  CHECK(n.value.cmp(BigFloat(Rational(7, 3))) == 0);
  CHECK(r_norm(SymPolynomial::zero(2), Rational(1)).value.cmp(BigFloat()) ==
        0);
  CHECK_THROWS_AS(r_norm(e1, Rational(0)), NonpositiveRadius);
  CHECK_THROWS_AS(r_norm(e1, Rational(-1)), NonpositiveRadius);
}

TEST_CASE("involution over a swap conjugation") {
  Matrix swap(2, 2);
  swap.at(0, 1) = Scalar(1);
  swap.at(1, 0) = Scalar(1);
  FSpace h = make_fspace(2, swap);
  SymPolynomial e1 = SymPolynomial::basis_vector(2, 0);
  SymPolynomial e2 = SymPolynomial::basis_vector(2, 1);
  CHECK(poly_involution(h, e1) == e2);
  SymPolynomial p = poly_multiply(e1, e1) * Scalar::i();
  CHECK(poly_involution(h, p) == poly_multiply(e2, e2) * (-Scalar::i()));
  CHECK(poly_involution(h, poly_involution(h, p)) == p);
  // U conj(U) != identity has no involutive conjugation.
  Matrix bad(2, 2);
  bad.at(0, 1) = Scalar(1);
  bad.at(1, 0) = Scalar(-1);
  CHECK(is_unitary(bad));
  CHECK_THROWS_AS(make_fspace(2, bad), ValidationError);
}

TEST_CASE("characters at fixed and moving points") {
  FSpace h = standard_fspace(1);
  SymPolynomial e1 = SymPolynomial::basis_vector(1, 0);
  CharacterReport real_pt = character_check(h, {e1}, {Scalar(Rational(5, 7))});
  CHECK(real_pt.pass);
  CHECK(real_pt.point_fixed);
  CHECK(real_pt.reality == std::vector<bool>{true});
  CharacterReport moved = character_check(h, {e1}, {Scalar::i()});
  CHECK(!moved.point_fixed);
  CHECK(moved.reality == std::vector<bool>{false});
}

TEST_CASE("polynomial serialization") {
  SymPolynomial p =
      SymPolynomial::monomial(3, MultiIndex{2, 0, 1},
                              Scalar(Rational(1, 3), Rational(-2))) +
      SymPolynomial::constant(3, Scalar(4));
  std::string text = sym_poly_to_text(p);
  CHECK(sym_poly_from_text(3, text) == p);
  CHECK(text.find("deg=3 multiset=1,1,3 coeff=1/3-2/1i") != std::string::npos);
  CHECK_THROWS_AS(sym_poly_from_text(2, text), ValidationError);
  CHECK_THROWS_AS(sym_poly_from_text(3, "deg=1 multiset=1\n"), ParseError);
  CHECK_THROWS_AS(sym_poly_from_text(3, "deg=1 multiset=1 coeff=1/1+0/1i\n"
                                        "deg=1 multiset=1 coeff=1/1+0/1i\n"),
                  ParseError);
}

#pragma once

#include <array>
#include <map>

#include "workbench/rep.hpp"

namespace workbench::testing {

inline Matrix int_matrix(std::size_t n, const std::vector<int> &vals) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(vals[i * n + j]);
  return m;
}

/// Quarter-turn plane: one generator rotating R^2, cyclic vector e1.  The
/// state has omega(X^k) = 0, -1, 0, 1 cyclically, so its series is cosine.
inline CyclicData make_cos() {
  MatrixRep rep = make_matrix_rep(LieAlgebra::abelian(1),
                                  {int_matrix(2, {0, 1, -1, 0})});
  return CyclicData::create(std::move(rep), Matrix::identity(2),
                            {Scalar(1), Scalar(0)});
}

/// Rotation generators on R^3 with cyclic vector e1.
inline CyclicData make_so3() {
  MatrixRep rep = make_matrix_rep(
      LieAlgebra::by_name("so3"),
      {int_matrix(3, {0, 0, 0, 0, 0, -1, 0, 1, 0}),
       int_matrix(3, {0, 0, 1, 0, 0, 0, -1, 0, 0}),
       int_matrix(3, {0, -1, 0, 1, 0, 0, 0, 0, 0})});
  return CyclicData::create(std::move(rep), Matrix::identity(3),
                            {Scalar(1), Scalar(0), Scalar(0)});
}

/// Heisenberg generators as commuting imaginary diagonals on a four-point
/// grid, central element zero, conjugation the index flip.
inline CyclicData make_grid4() {
  auto diag = [](std::initializer_list<Rational> vals) {
    Matrix m(4, 4);
    std::size_t i = 0;
    for (const Rational &v : vals) m.at(i, i) = Scalar(Rational(0), v), ++i;
    return m;
  };
  MatrixRep rep = make_matrix_rep(
      LieAlgebra::heisenberg(),
      {diag({Rational(-3, 2), Rational(-1, 2), Rational(1, 2),
             Rational(3, 2)}),
       diag({Rational(1, 2), Rational(-3, 2), Rational(3, 2),
             Rational(-1, 2)}),
       Matrix(4, 4)});
  Matrix flip(4, 4);
  for (std::size_t i = 0; i < 4; ++i) flip.at(i, 3 - i) = Scalar(1);
  return CyclicData::create(std::move(rep), std::move(flip),
                            std::vector<Scalar>(4, Scalar(Rational(1, 2))));
}

/// Faithful strictly-upper-triangular Heisenberg matrices E12, E23, E13.
inline MatrixRep heis_oracle() {
  return make_matrix_rep(LieAlgebra::heisenberg(),
                         {int_matrix(3, {0, 1, 0, 0, 0, 0, 0, 0, 0}),
                          int_matrix(3, {0, 0, 0, 0, 0, 1, 0, 0, 0}),
                          int_matrix(3, {0, 0, 1, 0, 0, 0, 0, 0, 0})});
}

/// Spin one-half: X1 = -i sigma_x / 2, X2 = -i sigma_y / 2, X3 = -i sigma_z / 2.
inline MatrixRep su2_oracle() {
  Matrix x1(2, 2), x2(2, 2), x3(2, 2);
  x1.at(0, 1) = Scalar(Rational(0), Rational(-1, 2));
  x1.at(1, 0) = Scalar(Rational(0), Rational(-1, 2));
  x2.at(0, 1) = Scalar(Rational(-1, 2));
  x2.at(1, 0) = Scalar(Rational(1, 2));
  x3.at(0, 0) = Scalar(Rational(0), Rational(-1, 2));
  x3.at(1, 1) = Scalar(Rational(0), Rational(1, 2));
  return make_matrix_rep(LieAlgebra::su2(), {x1, x2, x3});
}

/// k-th Taylor coefficient of cos.
inline Rational cos_taylor(unsigned k) {
  if (k % 2 == 1) return Rational(0);
  Rational c(1);
  c /= Rational(factorial(k));
  return (k / 2) % 2 == 0 ? c : -c;
}

/// k-th Taylor coefficient of exp(-x^2/2).
inline Rational gauss_taylor(unsigned k) {
  if (k % 2 == 1) return Rational(0);
  unsigned j = k / 2;
  Rational c(1);
  c /= Rational(factorial(j)) * rational_pow(Rational(2), j);
  return j % 2 == 0 ? c : -c;
}

/// Real moment sequence of the standard Gaussian: m_{2j} = (2j-1)!!.
inline std::vector<Rational> gaussian_moments(unsigned order) {
  std::vector<Rational> m{1};
  for (unsigned k = 1; k <= order; ++k)
    m.push_back(k % 2 == 1 ? Rational(0) : m[k - 2] * Rational(k - 1));
  return m;
}

inline std::vector<Rational> factorial_moments(unsigned order) {
  std::vector<Rational> m;
  for (unsigned k = 0; k <= order; ++k) m.push_back(Rational(factorial(k)));
  return m;
}

using TripleKey = std::array<MultiIndex, 3>;
using TripleMap = std::map<TripleKey, Scalar>;

inline void triple_add(TripleMap &m, const TripleKey &k, const Scalar &c) {
  Scalar &slot = m[k];
  slot += c;
  if (slot.is_zero()) m.erase(k);
}

/// Apply the coproduct once more inside the first tensor slot.
inline TripleMap coproduct_left(const PbwElement &e) {
  TripleMap out;
  PbwTensor outer = coproduct(e);
  for (const auto &[key, c] : outer.terms()) {
    PbwTensor inner = coproduct(PbwElement::monomial(e.algebra(), key.first));
    for (const auto &[k2, c2] : inner.terms())
      triple_add(out, {k2.first, k2.second, key.second}, c * c2);
  }
  return out;
}

/// Apply the coproduct once more inside the second tensor slot.
inline TripleMap coproduct_right(const PbwElement &e) {
  TripleMap out;
  PbwTensor outer = coproduct(e);
  for (const auto &[key, c] : outer.terms()) {
    PbwTensor inner = coproduct(PbwElement::monomial(e.algebra(), key.second));
    for (const auto &[k2, c2] : inner.terms())
      triple_add(out, {key.first, k2.first, k2.second}, c * c2);
  }
  return out;
}

} // namespace workbench::testing

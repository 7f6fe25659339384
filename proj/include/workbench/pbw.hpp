#pragma once

#include <map>
#include <utility>
#include <vector>

#include "workbench/lie_algebra.hpp"

namespace workbench {

/// Element of the universal enveloping algebra, stored on the normal-ordered
/// monomial basis X^alpha = X_1^{a_1}...X_n^{a_n}.  Zero coefficients are
/// never stored.
class PbwElement {
public:
  explicit PbwElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static PbwElement zero(AlgebraPtr alg) { return PbwElement(std::move(alg)); }
  static PbwElement one(const AlgebraPtr &alg);
  static PbwElement generator(const AlgebraPtr &alg, std::size_t i);
  static PbwElement monomial(const AlgebraPtr &alg, const MultiIndex &alpha,
                             const Scalar &c = Scalar(1));
  static PbwElement from_terms(AlgebraPtr alg, TermMap terms);

  const AlgebraPtr &algebra() const { return alg_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned top_degree() const;
  Scalar coeff(const MultiIndex &alpha) const;

  PbwElement operator+(const PbwElement &o) const;
  PbwElement operator-(const PbwElement &o) const;
  PbwElement operator-() const;
  PbwElement operator*(const Scalar &c) const;
  bool operator==(const PbwElement &o) const;
  bool operator!=(const PbwElement &o) const { return !(*this == o); }

  std::string str() const;

private:
  AlgebraPtr alg_;
  TermMap terms_;
};

/// Straighten the word X_{w_1} X_{w_2} ... X_{w_m} (0-based indices) into the
/// normal-ordered basis using the rewriting rule
///   X_j X_i = X_i X_j + [X_j, X_i]   (j > i).
PbwElement normal_order(const AlgebraPtr &alg,
                        const std::vector<std::size_t> &word,
                        const Scalar &c = Scalar(1));

/// Product in the enveloping algebra.
PbwElement multiply(const PbwElement &a, const PbwElement &b);

/// Conjugate-linear antiautomorphism with X_i -> -X_i on generators, so
/// (X_{i_1}...X_{i_m})^dagger = (-1)^m X_{i_m}...X_{i_1}.
PbwElement involution(const PbwElement &a);

/// Conjugate every coefficient; monomials are fixed.
PbwElement conjugate(const PbwElement &a);

struct TensorKeyLess {
  bool operator()(const std::pair<MultiIndex, MultiIndex> &a,
                  const std::pair<MultiIndex, MultiIndex> &b) const {
    if (graded_lex_less(a.first, b.first)) return true;
    if (graded_lex_less(b.first, a.first)) return false;
    return graded_lex_less(a.second, b.second);
  }
};

using TensorTermMap =
    std::map<std::pair<MultiIndex, MultiIndex>, Scalar, TensorKeyLess>;

/// Element of E tensor E on the monomial-pair basis.
class PbwTensor {
public:
  explicit PbwTensor(AlgebraPtr alg) : alg_(std::move(alg)) {}
  static PbwTensor from_terms(AlgebraPtr alg, TensorTermMap terms);

  const AlgebraPtr &algebra() const { return alg_; }
  const TensorTermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const MultiIndex &l, const MultiIndex &r) const;

  PbwTensor operator+(const PbwTensor &o) const;
  PbwTensor operator-(const PbwTensor &o) const;
  PbwTensor operator*(const Scalar &c) const;
  bool operator==(const PbwTensor &o) const;
  bool operator!=(const PbwTensor &o) const { return !(*this == o); }

  std::string str() const;

private:
  AlgebraPtr alg_;
  TensorTermMap terms_;
};

/// a tensor b, expanded bilinearly on monomials.
PbwTensor tensor_of(const PbwElement &a, const PbwElement &b);

/// Coproduct: Delta(X^alpha) = sum over beta <= alpha of
/// multi_binomial(alpha, beta) X^beta tensor X^(alpha-beta), extended linearly.
PbwTensor coproduct(const PbwElement &a);

/// Swap the two tensor slots.
PbwTensor tensor_flip(const PbwTensor &t);

/// Componentwise product (A tensor B)(C tensor D) = AC tensor BD.
PbwTensor tensor_multiply(const PbwTensor &s, const PbwTensor &t);

} // namespace workbench

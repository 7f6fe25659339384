#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "workbench/bigfloat.hpp"
#include "workbench/exact_matrix.hpp"
#include "workbench/multi_index.hpp"
#include "workbench/scalar.hpp"

namespace workbench {

/// Finite-dimensional complex inner-product space carrying the conjugation
/// J x = U conj(x); U must be unitary with U conj(U) = I so that J is an
/// anti-unitary involution.
struct FSpace {
  std::size_t dim = 0;
  Matrix u;
};

FSpace make_fspace(std::size_t dim, Matrix u);
/// U = identity, so J is plain entrywise conjugation.
FSpace standard_fspace(std::size_t dim);
std::vector<Scalar> fspace_conj(const FSpace &h, const std::vector<Scalar> &x);

/// Ordered sequence of 0-based basis indices, one letter per tensor factor.
using Word = std::vector<unsigned>;

/// Degree-n tensor in word coordinates.
struct PlainTensor {
  std::size_t dim = 0;
  unsigned degree = 0;
  std::map<Word, Scalar> coeffs;
};

/// Degree-n symmetric tensor.  Keys are multisets of basis indices written
/// as multi-indexes of total degree n; the basis element for alpha is the
/// symmetrized product of the standard vectors it lists.
struct SymTensor {
  std::size_t dim = 0;
  unsigned degree = 0;
  std::map<MultiIndex, Scalar> coeffs;
};

/// Orbit average over all factor permutations, in multiset coordinates.
SymTensor symmetrize(const PlainTensor &t);
/// The symmetrized basis elements written back in word coordinates.
PlainTensor expand(const SymTensor &s);
/// Product of per-factor inner products, conjugate-linear in the first slot.
Scalar tensor_inner(const PlainTensor &s, const PlainTensor &t);
/// Induced inner product of symmetric tensors: pairs of equal multisets
/// contribute alpha!/n!.
Scalar sym_inner(const SymTensor &a, const SymTensor &b);

/// Graded element of the polynomial algebra over an FSpace-sized space;
/// finitely many nonzero homogeneous components.
class SymPolynomial {
public:
  static SymPolynomial zero(std::size_t dim);
  static SymPolynomial constant(std::size_t dim, const Scalar &c);
  /// The degree-1 basis vector e_{j+1} (0-based j).
  static SymPolynomial basis_vector(std::size_t dim, std::size_t j);
  static SymPolynomial monomial(std::size_t dim, const MultiIndex &alpha,
                                const Scalar &c);
  /// Degree-1 element with the given coordinates.
  static SymPolynomial from_vector(const std::vector<Scalar> &xi);

  std::size_t dim() const { return dim_; }
  const std::map<unsigned, SymTensor> &components() const {
    return components_;
  }
  /// The degree-n component; zero tensor when absent.
  SymTensor component(unsigned n) const;
  Scalar coeff(const MultiIndex &alpha) const;
  bool is_zero() const { return components_.empty(); }
  unsigned top_degree() const;

  SymPolynomial operator+(const SymPolynomial &o) const;
  SymPolynomial operator-(const SymPolynomial &o) const;
  SymPolynomial operator*(const Scalar &c) const;
  bool operator==(const SymPolynomial &o) const;
  bool operator!=(const SymPolynomial &o) const { return !(*this == o); }

  std::string str() const;

private:
  explicit SymPolynomial(std::size_t dim) : dim_(dim) {}
  void add_term(const MultiIndex &alpha, const Scalar &c);
  std::size_t dim_ = 0;
  std::map<unsigned, SymTensor> components_;
};

/// Graded commutative product; on multiset monomials it adds exponents.
SymPolynomial poly_multiply(const SymPolynomial &a, const SymPolynomial &b);
/// xi^n as a polynomial (the degree-n piece of the exponential vector,
/// times n!).
SymPolynomial vector_power(const std::vector<Scalar> &xi, unsigned n);

/// Weighted norm sum_n |phi_n| r^n in high precision, with the per-degree
/// squared norms exposed exactly.
struct RNorm {
  BigFloat value;
  std::vector<std::pair<unsigned, Rational>> squared;
};
RNorm r_norm(const SymPolynomial &p, const Rational &r);

/// <p, Omega_xi> = sum_n <p_n, xi^n>, conjugate-linear in p.
Scalar evaluate_poly(const SymPolynomial &p, const std::vector<Scalar> &xi);

/// Conjugate coefficients and substitute J e_j for e_j; an involutive
/// conjugate-linear algebra automorphism.
SymPolynomial poly_involution(const FSpace &h, const SymPolynomial &p);

/// Point evaluation tested as a character: multiplicativity on every pair
/// of generators and compatibility with the involution per generator.
struct CharacterPairResult {
  std::size_t i = 0, j = 0;
  bool ok = false;
};
struct CharacterReport {
  bool pass = false;
  bool point_fixed = false;
  std::vector<CharacterPairResult> products;
  std::vector<bool> reality;
};
CharacterReport character_check(const FSpace &h,
                                const std::vector<SymPolynomial> &generators,
                                const std::vector<Scalar> &xi);
/// Same checks against a supplied product table; a corrupted table fails
/// with the offending pair.
CharacterReport
character_check_table(const FSpace &h,
                      const std::vector<SymPolynomial> &generators,
                      const std::vector<std::vector<SymPolynomial>> &products,
                      const std::vector<Scalar> &xi);

/// One line per term: "deg=n multiset=i1,..,in coeff=p/q+r/si" with 1-based
/// indices in weakly increasing order; degree 0 leaves the multiset empty.
std::string sym_poly_to_text(const SymPolynomial &p);
SymPolynomial sym_poly_from_text(std::size_t dim, const std::string &text);

} // namespace workbench

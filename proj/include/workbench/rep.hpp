#pragma once

#include "workbench/dual.hpp"
#include "workbench/exact_matrix.hpp"
#include "workbench/pbw.hpp"

namespace workbench {

/// Generators realized as matrices; construction checks the commutators
/// against the structure constants exactly.  unitary_flag records whether
/// every generator is skew-Hermitian.
struct MatrixRep {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<Matrix> matrices;
  bool unitary_flag = false;
};

MatrixRep make_matrix_rep(AlgebraPtr alg, std::vector<Matrix> matrices);

/// pi(e) v, extending the generator matrices through normal-ordered powers.
std::vector<Scalar> apply_element(const MatrixRep &rep, const PbwElement &e,
                                  const std::vector<Scalar> &v);

/// pi(e) as a matrix.
Matrix rep_matrix(const MatrixRep &rep, const PbwElement &e);

/// A skew-Hermitian representation together with a conjugation J = U conj
/// commuting with every generator and a J-fixed unit cyclic vector.
/// Copies share one memo of the vectors pi(X^alpha) nu.
class CyclicData {
public:
  static CyclicData create(MatrixRep rep, Matrix u, std::vector<Scalar> nu);

  const MatrixRep &rep() const;
  const Matrix &u() const;
  const std::vector<Scalar> &cyclic() const;

  /// J x = U conj(x).
  std::vector<Scalar> conjugation(const std::vector<Scalar> &x) const;

  /// pi(X^alpha) nu, memoized.
  std::vector<Scalar> monomial_vector(const MultiIndex &alpha) const;

private:
  struct Impl;
  explicit CyclicData(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// e_xi(F) = <J xi, pi(F) nu>; fully known (unbounded order).
DualFunctional representative_functional(const CyclicData &cd,
                                         std::vector<Scalar> xi);

/// The state of the cyclic vector, e_nu.
DualFunctional state_from_rep(const CyclicData &cd);

/// act(e, e_xi) - e_{pi(e) xi}; identically zero for valid cyclic data.
DualFunctional equivariance_residual(const CyclicData &cd, const PbwElement &e,
                                     const std::vector<Scalar> &xi);

/// omega((X^alpha)^dagger) = conj(omega(X^alpha)) for every |alpha| <= order.
bool hermitian_state_check(const DualFunctional &omega, unsigned order);

/// One-variable state with coefficients i^k m_k from a real moment sequence,
/// m_0 = 1.  The Hankel form is certified positive up to floor(order/2)
/// before returning; PositivityFailure carries a concrete witness.
DualFunctional moment_state(AlgebraPtr alg, const std::vector<Rational> &moments);

/// Generating family of the orbit algebra: for each seed xi and each
/// |alpha| <= max_degree in graded-lex order, the pair
/// (e_{pi(X^alpha) xi}, its involution).
std::vector<std::pair<DualFunctional, DualFunctional>>
orbit_algebra_generators(const CyclicData &cd,
                         const std::vector<std::vector<Scalar>> &seeds,
                         unsigned max_degree);

} // namespace workbench

#pragma once

#include "workbench/dual.hpp"
#include "workbench/exact_matrix.hpp"
#include "workbench/pbw.hpp"

namespace workbench {

/// Gram matrix of the monomials {X^alpha : |alpha| <= order} under
/// <A, B> = omega(A^dagger B); verified Hermitian on construction.
struct GramData {
  unsigned order = 0;
  std::vector<MultiIndex> basis; // graded-lex
  Matrix gram;
};

GramData gram_matrix(const DualFunctional &omega, unsigned order);

/// Positivity certificate for the sesquilinear form at a given order; on
/// failure carries an element w with omega(w^dagger w) < 0.
struct StatePositivity {
  bool positive = false;
  std::size_t rank = 0;
  PbwElement witness;
  Scalar witness_value;
  StatePositivity() : witness(nullptr) {}
};

StatePositivity check_positivity(const DualFunctional &omega, unsigned order);

/// Order-N quotient by the null space of the Gram form.
struct GnsData {
  AlgebraPtr algebra;
  unsigned order = 0;
  std::vector<MultiIndex> basis;
  std::map<MultiIndex, std::size_t, GradedLexLess> basis_pos;
  Matrix gram;
  Matrix rref_gram;
  std::vector<unsigned> rank_profile;     // rank at order m, m = 0..order
  bool stabilized = false;                // rank unchanged from order-1 to order
  std::vector<std::size_t> pivot_pos;     // positions of quotient basis in basis
  std::vector<MultiIndex> quotient_basis; // classes spanning the quotient
  std::vector<PbwElement> null_basis;     // kernel of the Gram form
  Matrix quotient_gram;                   // Gram restricted to the pivots
};

/// Requires positivity at this order; throws PositivityFailure otherwise.
GnsData gns_quotient(const DualFunctional &omega, unsigned order);

/// Coordinates of the class [e] on quotient_basis; e needs degree <= order.
std::vector<Scalar> reduce(const GnsData &g, const PbwElement &e);

/// Left multiplication by every generator maps each null vector of degree
/// <= order-1 back into the null space.
bool null_ideal_closed(const GnsData &g);

/// The represented algebra action on the stabilized quotient.
struct GnsRep {
  AlgebraPtr algebra;
  bool stabilized = false;
  unsigned order = 0;
  std::vector<unsigned> rank_profile;
  std::vector<MultiIndex> quotient_basis;
  Matrix quotient_gram;
  std::vector<Matrix> matrices; // one per generator; empty when !stabilized
  /// Action restricted to classes of degree <= order-1, one rectangular
  /// matrix per generator; equals `matrices` once stabilized.
  std::vector<Matrix> truncated;
  std::vector<Scalar> cyclic;   // coordinates of [1]
};

/// Builds the quotient at this order and, when the rank has stabilized,
/// the exact matrices of the generators on it.
GnsRep generator_matrices(const DualFunctional &omega, unsigned order);

/// rho(e) as a matrix on the quotient (normal-ordered powers of the
/// generator matrices, extended linearly).
Matrix rep_element(const GnsRep &rep, const PbwElement &e);

/// omega(X^alpha) == <[1], rho(X^alpha) [1]> for every |alpha| <= max_degree.
bool state_recovered(const DualFunctional &omega, const GnsRep &rep,
                     unsigned max_degree);

} // namespace workbench

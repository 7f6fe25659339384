#include "workbench/gns.hpp"

#include "workbench/errors.hpp"

namespace workbench {

GramData gram_matrix(const DualFunctional &omega, unsigned order) {
  const AlgebraPtr &alg = omega.algebra();
  GramData g;
  g.order = order;
  g.basis = indices_up_to(alg->dim(), order);
  std::size_t m = g.basis.size();
  g.gram = Matrix(m, m);
  std::vector<PbwElement> daggers;
  daggers.reserve(m);
  for (const auto &alpha : g.basis)
    daggers.push_back(involution(PbwElement::monomial(alg, alpha)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      g.gram.at(i, j) = omega.evaluate(
          multiply(daggers[i], PbwElement::monomial(alg, g.basis[j])));
  if (!is_hermitian(g.gram))
    throw HermitianViolation("Gram matrix is not Hermitian at order " +
                             std::to_string(order));
  return g;
}

StatePositivity check_positivity(const DualFunctional &omega, unsigned order) {
  GramData g = gram_matrix(omega, order);
  PsdResult psd = check_psd(g.gram);
  StatePositivity out;
  out.positive = psd.positive;
  out.rank = psd.rank;
  if (!psd.positive) {
    TermMap terms;
    for (std::size_t j = 0; j < g.basis.size(); ++j)
      if (!psd.witness[j].is_zero()) terms.emplace(g.basis[j], psd.witness[j]);
    out.witness = PbwElement::from_terms(omega.algebra(), std::move(terms));
    out.witness_value = psd.witness_value;
    // cross-check against the functional itself
    Scalar direct =
        omega.evaluate(multiply(involution(out.witness), out.witness));
    if (direct != psd.witness_value)
      throw ContractViolation("witness value disagrees with the Gram matrix");
  }
  return out;
}

GnsData gns_quotient(const DualFunctional &omega, unsigned order) {
  StatePositivity pos = check_positivity(omega, order);
  if (!pos.positive)
    throw PositivityFailure("functional is not positive at order " +
                                std::to_string(order) + ": omega(w+ w) = " +
                                pos.witness_value.str() + " for w = " +
                                pos.witness.str(),
                            pos.witness.str());
  GnsData g;
  g.algebra = omega.algebra();
  g.order = order;
  GramData gd = gram_matrix(omega, order);
  g.basis = std::move(gd.basis);
  g.gram = std::move(gd.gram);
  for (std::size_t k = 0; k < g.basis.size(); ++k) g.basis_pos[g.basis[k]] = k;

  RrefResult rr = rref(g.gram);
  g.rref_gram = std::move(rr.rref);
  g.pivot_pos = std::move(rr.pivot_cols);
  for (std::size_t p : g.pivot_pos) g.quotient_basis.push_back(g.basis[p]);

  // rank of every leading principal block: the basis is graded-lex, so the
  // monomials of degree <= m form a prefix
  for (unsigned m = 0; m <= order; ++m) {
    std::size_t sz = indices_up_to(g.algebra->dim(), m).size();
    Matrix sub(sz, sz);
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) sub.at(i, j) = g.gram.at(i, j);
    g.rank_profile.push_back(static_cast<unsigned>(rref(sub).rank));
  }
  g.stabilized =
      order >= 1 && g.rank_profile[order] == g.rank_profile[order - 1];

  for (const auto &vec : kernel_basis(g.gram)) {
    TermMap terms;
    for (std::size_t j = 0; j < g.basis.size(); ++j)
      if (!vec[j].is_zero()) terms.emplace(g.basis[j], vec[j]);
    g.null_basis.push_back(PbwElement::from_terms(g.algebra, std::move(terms)));
  }

  std::size_t r = g.pivot_pos.size();
  g.quotient_gram = Matrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      g.quotient_gram.at(i, j) = g.gram.at(g.pivot_pos[i], g.pivot_pos[j]);
  return g;
}

std::vector<Scalar> reduce(const GnsData &g, const PbwElement &e) {
  require_same_algebra(g.algebra, e.algebra());
  std::size_t r = g.pivot_pos.size();
  std::vector<Scalar> coords(r, Scalar(0));
  for (const auto &[alpha, c] : e.terms()) {
    auto it = g.basis_pos.find(alpha);
    if (it == g.basis_pos.end())
      throw OrderExceeded(degree(alpha), std::to_string(g.order));
    for (std::size_t row = 0; row < r; ++row) {
      const Scalar &w = g.rref_gram.at(row, it->second);
      if (!w.is_zero()) coords[row] += c * w;
    }
  }
  return coords;
}

bool null_ideal_closed(const GnsData &g) {
  for (const auto &w : g.null_basis) {
    if (w.top_degree() + 1 > g.order) continue;
    for (std::size_t i = 0; i < g.algebra->dim(); ++i) {
      PbwElement moved = multiply(PbwElement::generator(g.algebra, i), w);
      for (const auto &c : reduce(g, moved))
        if (!c.is_zero()) return false;
    }
  }
  return true;
}

GnsRep generator_matrices(const DualFunctional &omega, unsigned order) {
  GnsData g = gns_quotient(omega, order);
  GnsRep rep;
  rep.algebra = g.algebra;
  rep.order = order;
  rep.stabilized = g.stabilized;
  rep.rank_profile = g.rank_profile;
  rep.quotient_basis = g.quotient_basis;
  rep.quotient_gram = g.quotient_gram;
  rep.cyclic = reduce(g, PbwElement::one(g.algebra));
  std::size_t r = rep.quotient_basis.size();
  std::vector<std::size_t> lower;
  for (std::size_t j = 0; j < r; ++j)
    if (order > 0 && degree(rep.quotient_basis[j]) <= order - 1)
      lower.push_back(j);
  for (std::size_t i = 0; i < g.algebra->dim(); ++i) {
    Matrix m(r, lower.size());
    for (std::size_t j = 0; j < lower.size(); ++j) {
      PbwElement col = multiply(
          PbwElement::generator(g.algebra, i),
          PbwElement::monomial(g.algebra, rep.quotient_basis[lower[j]]));
      std::vector<Scalar> coords = reduce(g, col);
      for (std::size_t row = 0; row < r; ++row) m.at(row, j) = coords[row];
    }
    rep.truncated.push_back(std::move(m));
  }
  if (!rep.stabilized) return rep;
  if (lower.size() != r)
    throw ContractViolation(
        "stabilized quotient contains a top-degree monomial");
  rep.matrices = rep.truncated;
  return rep;
}

Matrix rep_element(const GnsRep &rep, const PbwElement &e) {
  if (!rep.stabilized) {
    std::string profile;
    for (unsigned rk : rep.rank_profile)
      profile += (profile.empty() ? "" : ",") + std::to_string(rk);
    throw Unstabilized("no representation matrices: rank profile " + profile +
                       " has not stabilized");
  }
  require_same_algebra(rep.algebra, e.algebra());
  std::size_t r = rep.quotient_basis.size();
  Matrix out(r, r);
  for (const auto &[alpha, c] : e.terms()) {
    Matrix term = Matrix::identity(r);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (unsigned p = 0; p < alpha[i]; ++p) term = term * rep.matrices[i];
    out = out + term * c;
  }
  return out;
}

bool state_recovered(const DualFunctional &omega, const GnsRep &rep,
                     unsigned max_degree) {
  for (const auto &alpha : indices_up_to(rep.algebra->dim(), max_degree)) {
    Matrix m = rep_element(rep, PbwElement::monomial(rep.algebra, alpha));
    Scalar got = inner(rep.cyclic, mat_vec(rep.quotient_gram, mat_vec(m, rep.cyclic)));
    if (got != omega.coeff(alpha)) return false;
  }
  return true;
}

} // namespace workbench

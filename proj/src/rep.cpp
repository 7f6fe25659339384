#include "workbench/rep.hpp"

#include <mutex>

#include "workbench/errors.hpp"
#include "workbench/gns.hpp"

namespace workbench {

MatrixRep make_matrix_rep(AlgebraPtr alg, std::vector<Matrix> matrices) {
  if (matrices.size() != alg->dim())
    throw DimensionMismatch("need one matrix per generator");
  if (matrices.empty()) throw ValidationError("empty representation");
  std::size_t d = matrices[0].rows();
  for (const auto &m : matrices)
    if (m.rows() != d || m.cols() != d)
      throw DimensionMismatch("generator matrices must be square, same size");
  for (std::size_t i = 0; i < matrices.size(); ++i)
    for (std::size_t j = 0; j < matrices.size(); ++j) {
      Matrix lhs = matrices[i] * matrices[j] - matrices[j] * matrices[i];
      Matrix rhs(d, d);
      const auto &c = alg->bracket(i, j);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) rhs = rhs + matrices[k] * Scalar(c[k]);
      if (lhs != rhs)
        throw ValidationError("matrices do not satisfy the bracket of [" +
                              alg->name(i) + "," + alg->name(j) + "]");
    }
  MatrixRep rep;
  rep.algebra = std::move(alg);
  rep.dim = d;
  rep.matrices = std::move(matrices);
  rep.unitary_flag = true;
  for (const auto &m : rep.matrices)
    if (!is_skew_hermitian(m)) rep.unitary_flag = false;
  return rep;
}

std::vector<Scalar> apply_element(const MatrixRep &rep, const PbwElement &e,
                                  const std::vector<Scalar> &v) {
  require_same_algebra(rep.algebra, e.algebra());
  if (v.size() != rep.dim)
    throw DimensionMismatch("vector has wrong length for the representation");
  std::vector<Scalar> out(rep.dim, Scalar(0));
  for (const auto &[alpha, c] : e.terms()) {
    std::vector<Scalar> w = v;
    for (std::size_t i = alpha.size(); i-- > 0;)
      for (unsigned p = 0; p < alpha[i]; ++p) w = mat_vec(rep.matrices[i], w);
    for (std::size_t k = 0; k < rep.dim; ++k) out[k] += c * w[k];
  }
  return out;
}

Matrix rep_matrix(const MatrixRep &rep, const PbwElement &e) {
  require_same_algebra(rep.algebra, e.algebra());
  Matrix out(rep.dim, rep.dim);
  for (const auto &[alpha, c] : e.terms()) {
    Matrix term = Matrix::identity(rep.dim);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (unsigned p = 0; p < alpha[i]; ++p) term = term * rep.matrices[i];
    out = out + term * c;
  }
  return out;
}

struct CyclicData::Impl {
  MatrixRep rep;
  Matrix u;
  std::vector<Scalar> nu;
  mutable std::mutex mu;
  mutable std::map<MultiIndex, std::vector<Scalar>> memo;
};

CyclicData::CyclicData(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

CyclicData CyclicData::create(MatrixRep rep, Matrix u, std::vector<Scalar> nu) {
  if (!rep.unitary_flag)
    throw ValidationError("cyclic data needs skew-Hermitian generators");
  std::size_t d = rep.dim;
  if (u.rows() != d || u.cols() != d)
    throw DimensionMismatch("conjugation matrix has wrong shape");
  if (nu.size() != d)
    throw DimensionMismatch("cyclic vector has wrong length");
  if (!is_unitary(u))
    throw ValidationError("conjugation matrix is not unitary");
  if (u * u.conj() != Matrix::identity(d))
    throw ValidationError("conjugation does not square to the identity");
  for (std::size_t i = 0; i < rep.matrices.size(); ++i)
    if (u * rep.matrices[i].conj() != rep.matrices[i] * u)
      throw ValidationError("conjugation does not commute with generator " +
                            rep.algebra->name(i));
  std::vector<Scalar> jnu(d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) jnu[i] += u.at(i, j) * nu[j].conj();
  if (jnu != nu)
    throw ValidationError("cyclic vector is not fixed by the conjugation");
  if (inner(nu, nu) != Scalar(1))
    throw ValidationError("cyclic vector is not a unit vector");
  auto impl = std::make_shared<Impl>();
  impl->rep = std::move(rep);
  impl->u = std::move(u);
  impl->nu = std::move(nu);
  return CyclicData(std::move(impl));
}

const MatrixRep &CyclicData::rep() const { return impl_->rep; }
const Matrix &CyclicData::u() const { return impl_->u; }
const std::vector<Scalar> &CyclicData::cyclic() const { return impl_->nu; }

std::vector<Scalar>
CyclicData::conjugation(const std::vector<Scalar> &x) const {
  if (x.size() != impl_->rep.dim)
    throw DimensionMismatch("vector has wrong length for the conjugation");
  std::vector<Scalar> cx(x);
  for (auto &v : cx) v = v.conj();
  return mat_vec(impl_->u, cx);
}

std::vector<Scalar> CyclicData::monomial_vector(const MultiIndex &alpha) const {
  if (alpha.size() != impl_->rep.algebra->dim())
    throw DimensionMismatch("multi-index has wrong length");
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->memo.find(alpha);
    if (it != impl_->memo.end()) return it->second;
  }
  std::vector<Scalar> result;
  std::size_t first = alpha.size();
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i]) {
      first = i;
      break;
    }
  if (first == alpha.size()) {
    result = impl_->nu;
  } else {
    MultiIndex rest(alpha);
    rest[first] -= 1;
    result = mat_vec(impl_->rep.matrices[first], monomial_vector(rest));
  }
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->memo.emplace(alpha, std::move(result)).first->second;
}

DualFunctional representative_functional(const CyclicData &cd,
                                         std::vector<Scalar> xi) {
  std::vector<Scalar> jxi = cd.conjugation(xi);
  CyclicData copy = cd;
  return DualFunctional::from_function(
      cd.rep().algebra, TruncOrder::unbounded(),
      [copy, jxi](const MultiIndex &alpha) {
        return inner(jxi, copy.monomial_vector(alpha));
      });
}

DualFunctional state_from_rep(const CyclicData &cd) {
  return representative_functional(cd, cd.cyclic());
}

DualFunctional equivariance_residual(const CyclicData &cd, const PbwElement &e,
                                     const std::vector<Scalar> &xi) {
  DualFunctional lhs = act(e, representative_functional(cd, xi));
  DualFunctional rhs =
      representative_functional(cd, apply_element(cd.rep(), e, xi));
  return dual_sub(lhs, rhs);
}

bool hermitian_state_check(const DualFunctional &omega, unsigned order) {
  const AlgebraPtr &alg = omega.algebra();
  for (const auto &alpha : indices_up_to(alg->dim(), order)) {
    Scalar lhs =
        omega.evaluate(involution(PbwElement::monomial(alg, alpha)));
    if (lhs != omega.coeff(alpha).conj()) return false;
  }
  return true;
}

DualFunctional moment_state(AlgebraPtr alg,
                            const std::vector<Rational> &moments) {
  if (alg->dim() != 1 || !alg->is_abelian())
    throw ValidationError("moment states live on a one-generator abelian algebra");
  if (moments.empty()) throw ValidationError("empty moment sequence");
  if (moments[0] != 1)
    throw ValidationError("moment sequence must start with 1");
  long order = static_cast<long>(moments.size()) - 1;
  TermMap table;
  Scalar ipow(1);
  for (std::size_t k = 0; k < moments.size(); ++k) {
    MultiIndex alpha{static_cast<unsigned>(k)};
    table.emplace(alpha, ipow * Scalar(moments[k]));
    ipow *= Scalar::i();
  }
  DualFunctional omega =
      DualFunctional::from_table(alg, TruncOrder::at(order), std::move(table));
  StatePositivity pos =
      check_positivity(omega, static_cast<unsigned>(order / 2));
  if (!pos.positive)
    throw PositivityFailure(
        "moment sequence is not positive: omega(w+ w) = " +
            pos.witness_value.str() + " for w = " + pos.witness.str(),
        pos.witness.str());
  return omega;
}

std::vector<std::pair<DualFunctional, DualFunctional>>
orbit_algebra_generators(const CyclicData &cd,
                         const std::vector<std::vector<Scalar>> &seeds,
                         unsigned max_degree) {
  std::vector<std::pair<DualFunctional, DualFunctional>> out;
  const AlgebraPtr &alg = cd.rep().algebra;
  for (const auto &seed : seeds) {
    for (const auto &alpha : indices_up_to(alg->dim(), max_degree)) {
      std::vector<Scalar> moved = apply_element(
          cd.rep(), PbwElement::monomial(alg, alpha), seed);
      DualFunctional f = representative_functional(cd, moved);
      out.emplace_back(f, dual_involution(f));
    }
  }
  return out;
}

} // namespace workbench

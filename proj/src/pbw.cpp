#include "workbench/pbw.hpp"

#include <algorithm>

#include "workbench/errors.hpp"

namespace workbench {

namespace {

void add_term(TermMap &m, const MultiIndex &k, const Scalar &v) {
  if (v.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

void add_scaled(TermMap &dst, const TermMap &src, const Scalar &c) {
  if (c.is_zero()) return;
  for (const auto &[k, v] : src) add_term(dst, k, c * v);
}

std::vector<std::size_t> word_of(const MultiIndex &alpha) {
  std::vector<std::size_t> w;
  for (std::size_t k = 0; k < alpha.size(); ++k)
    w.insert(w.end(), alpha[k], k);
  return w;
}

/// Normal order X_i * X^alpha; memoized per algebra.
std::shared_ptr<const TermMap> prepend_mono(const AlgebraPtr &alg,
                                            std::size_t i,
                                            const MultiIndex &alpha) {
  if (auto hit = alg->memo_find(i, alpha)) return hit;
  std::size_t j = alpha.size();
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (alpha[k]) {
      j = k;
      break;
    }
  auto result = std::make_shared<TermMap>();
  if (j == alpha.size() || i <= j) {
    MultiIndex out(alpha);
    out[i] += 1;
    result->emplace(std::move(out), Scalar(1));
  } else {
    // X_i X_j X^rest = X_j (X_i X^rest) + [X_i, X_j] X^rest
    MultiIndex rest(alpha);
    rest[j] -= 1;
    auto inner = prepend_mono(alg, i, rest);
    for (const auto &[delta, s] : *inner)
      add_scaled(*result, *prepend_mono(alg, j, delta), s);
    const auto &cij = alg->bracket(i, j);
    for (std::size_t k = 0; k < cij.size(); ++k)
      if (cij[k] != 0)
        add_scaled(*result, *prepend_mono(alg, k, rest), Scalar(cij[k]));
  }
  alg->memo_store(i, alpha, result);
  return result;
}

std::string monomial_str(const LieAlgebra &alg, const MultiIndex &alpha) {
  std::string s;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (!alpha[k]) continue;
    if (!s.empty()) s += " ";
    s += alg.name(k);
    if (alpha[k] > 1) s += "^" + std::to_string(alpha[k]);
  }
  return s.empty() ? "1" : s;
}

void append_term(std::string &out, const Scalar &s, const std::string &mono) {
  bool first = out.empty();
  bool negated = false;
  std::string body;
  if (!s.is_real()) {
    body = "(" + s.str() + ")";
    if (mono != "1") body += " " + mono;
  } else {
    Rational r = s.re();
    if (r < 0) {
      negated = true;
      r = -r;
    }
    if (mono == "1")
      body = rational_display(r);
    else if (r == 1)
      body = mono;
    else
      body = rational_display(r) + " " + mono;
  }
  if (first)
    out += negated ? "-" : "";
  else
    out += negated ? " - " : " + ";
  out += body;
}

} // namespace

PbwElement PbwElement::one(const AlgebraPtr &alg) {
  return monomial(alg, MultiIndex(alg->dim(), 0));
}

PbwElement PbwElement::generator(const AlgebraPtr &alg, std::size_t i) {
  return monomial(alg, unit_index(alg->dim(), i));
}

PbwElement PbwElement::monomial(const AlgebraPtr &alg, const MultiIndex &alpha,
                                const Scalar &c) {
  if (alpha.size() != alg->dim())
    throw DimensionMismatch("monomial exponent has wrong length");
  PbwElement e(alg);
  if (!c.is_zero()) e.terms_.emplace(alpha, c);
  return e;
}

PbwElement PbwElement::from_terms(AlgebraPtr alg, TermMap terms) {
  PbwElement e(std::move(alg));
  for (auto &[k, v] : terms) {
    if (k.size() != e.alg_->dim())
      throw DimensionMismatch("monomial exponent has wrong length");
    if (!v.is_zero()) e.terms_.emplace(k, v);
  }
  return e;
}

unsigned PbwElement::top_degree() const {
  unsigned d = 0;
  for (const auto &[k, v] : terms_) d = std::max(d, degree(k));
  return d;
}

Scalar PbwElement::coeff(const MultiIndex &alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Scalar(0) : it->second;
}

PbwElement PbwElement::operator+(const PbwElement &o) const {
  require_same_algebra(alg_, o.alg_);
  PbwElement e(alg_);
  e.terms_ = terms_;
  for (const auto &[k, v] : o.terms_) add_term(e.terms_, k, v);
  return e;
}

PbwElement PbwElement::operator-(const PbwElement &o) const {
  require_same_algebra(alg_, o.alg_);
  PbwElement e(alg_);
  e.terms_ = terms_;
  for (const auto &[k, v] : o.terms_) add_term(e.terms_, k, -v);
  return e;
}

PbwElement PbwElement::operator-() const {
  PbwElement e(alg_);
  for (const auto &[k, v] : terms_) e.terms_.emplace(k, -v);
  return e;
}

PbwElement PbwElement::operator*(const Scalar &c) const {
  PbwElement e(alg_);
  if (c.is_zero()) return e;
  for (const auto &[k, v] : terms_) e.terms_.emplace(k, v * c);
  return e;
}

bool PbwElement::operator==(const PbwElement &o) const {
  require_same_algebra(alg_, o.alg_);
  return terms_ == o.terms_;
}

std::string PbwElement::str() const {
  std::string out;
  for (const auto &[k, v] : terms_)
    append_term(out, v, monomial_str(*alg_, k));
  return out.empty() ? "0" : out;
}

PbwElement normal_order(const AlgebraPtr &alg,
                        const std::vector<std::size_t> &word, const Scalar &c) {
  TermMap cur;
  if (!c.is_zero()) cur.emplace(MultiIndex(alg->dim(), 0), c);
  for (auto it = word.rbegin(); it != word.rend() && !cur.empty(); ++it) {
    if (*it >= alg->dim())
      throw IndexOutOfRange("generator index out of range in word");
    TermMap next;
    for (const auto &[mono, s] : cur)
      add_scaled(next, *prepend_mono(alg, *it, mono), s);
    cur = std::move(next);
  }
  return PbwElement::from_terms(alg, std::move(cur));
}

PbwElement multiply(const PbwElement &a, const PbwElement &b) {
  require_same_algebra(a.algebra(), b.algebra());
  const AlgebraPtr &alg = a.algebra();
  TermMap out;
  for (const auto &[alpha, s] : a.terms()) {
    TermMap cur;
    add_scaled(cur, b.terms(), s);
    const auto word = word_of(alpha);
    for (auto it = word.rbegin(); it != word.rend() && !cur.empty(); ++it) {
      TermMap next;
      for (const auto &[mono, t] : cur)
        add_scaled(next, *prepend_mono(alg, *it, mono), t);
      cur = std::move(next);
    }
    for (const auto &[k, v] : cur) add_term(out, k, v);
  }
  return PbwElement::from_terms(alg, std::move(out));
}

PbwElement involution(const PbwElement &a) {
  const AlgebraPtr &alg = a.algebra();
  TermMap out;
  for (const auto &[alpha, s] : a.terms()) {
    std::vector<std::size_t> word;
    for (std::size_t k = alpha.size(); k-- > 0;)
      word.insert(word.end(), alpha[k], k);
    Scalar c = s.conj();
    if (degree(alpha) % 2 == 1) c = -c;
    PbwElement straightened = normal_order(alg, word, c);
    for (const auto &[k, v] : straightened.terms()) add_term(out, k, v);
  }
  return PbwElement::from_terms(alg, std::move(out));
}

PbwElement conjugate(const PbwElement &a) {
  TermMap out;
  for (const auto &[k, v] : a.terms()) out.emplace(k, v.conj());
  return PbwElement::from_terms(a.algebra(), std::move(out));
}

namespace {

void add_tensor_term(TensorTermMap &m, const std::pair<MultiIndex, MultiIndex> &k,
                     const Scalar &v) {
  if (v.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

} // namespace

PbwTensor PbwTensor::from_terms(AlgebraPtr alg, TensorTermMap terms) {
  PbwTensor t(std::move(alg));
  for (auto &[k, v] : terms) {
    if (k.first.size() != t.alg_->dim() || k.second.size() != t.alg_->dim())
      throw DimensionMismatch("tensor exponent has wrong length");
    if (!v.is_zero()) t.terms_.emplace(k, v);
  }
  return t;
}

Scalar PbwTensor::coeff(const MultiIndex &l, const MultiIndex &r) const {
  auto it = terms_.find({l, r});
  return it == terms_.end() ? Scalar(0) : it->second;
}

PbwTensor PbwTensor::operator+(const PbwTensor &o) const {
  require_same_algebra(alg_, o.alg_);
  PbwTensor t(alg_);
  t.terms_ = terms_;
  for (const auto &[k, v] : o.terms_) add_tensor_term(t.terms_, k, v);
  return t;
}

PbwTensor PbwTensor::operator-(const PbwTensor &o) const {
  require_same_algebra(alg_, o.alg_);
  PbwTensor t(alg_);
  t.terms_ = terms_;
  for (const auto &[k, v] : o.terms_) add_tensor_term(t.terms_, k, -v);
  return t;
}

PbwTensor PbwTensor::operator*(const Scalar &c) const {
  PbwTensor t(alg_);
  if (c.is_zero()) return t;
  for (const auto &[k, v] : terms_) t.terms_.emplace(k, v * c);
  return t;
}

bool PbwTensor::operator==(const PbwTensor &o) const {
  require_same_algebra(alg_, o.alg_);
  return terms_ == o.terms_;
}

std::string PbwTensor::str() const {
  std::string out;
  for (const auto &[k, v] : terms_)
    append_term(out, v, monomial_str(*alg_, k.first) + " (x) " +
                            monomial_str(*alg_, k.second));
  return out.empty() ? "0" : out;
}

PbwTensor tensor_of(const PbwElement &a, const PbwElement &b) {
  require_same_algebra(a.algebra(), b.algebra());
  TensorTermMap out;
  for (const auto &[alpha, s] : a.terms())
    for (const auto &[beta, t] : b.terms())
      add_tensor_term(out, {alpha, beta}, s * t);
  return PbwTensor::from_terms(a.algebra(), std::move(out));
}

PbwTensor coproduct(const PbwElement &a) {
  TensorTermMap out;
  for (const auto &[alpha, s] : a.terms())
    for (const auto &beta : sub_indices(alpha)) {
      Scalar c = s * Scalar(Rational(multi_binomial(alpha, beta)));
      add_tensor_term(out, {beta, sub_index(alpha, beta)}, c);
    }
  return PbwTensor::from_terms(a.algebra(), std::move(out));
}

PbwTensor tensor_flip(const PbwTensor &t) {
  TensorTermMap out;
  for (const auto &[k, v] : t.terms()) out.emplace(std::make_pair(k.second, k.first), v);
  return PbwTensor::from_terms(t.algebra(), std::move(out));
}

PbwTensor tensor_multiply(const PbwTensor &s, const PbwTensor &t) {
  require_same_algebra(s.algebra(), t.algebra());
  const AlgebraPtr &alg = s.algebra();
  TensorTermMap out;
  for (const auto &[ks, vs] : s.terms())
    for (const auto &[kt, vt] : t.terms()) {
      auto wl = word_of(ks.first);
      auto wr = word_of(kt.first);
      wl.insert(wl.end(), wr.begin(), wr.end());
      PbwElement left = normal_order(alg, wl);
      auto ul = word_of(ks.second);
      auto ur = word_of(kt.second);
      ul.insert(ul.end(), ur.begin(), ur.end());
      PbwElement right = normal_order(alg, ul);
      Scalar c = vs * vt;
      for (const auto &[g, u] : left.terms())
        for (const auto &[d, w] : right.terms())
          add_tensor_term(out, {g, d}, c * u * w);
    }
  return PbwTensor::from_terms(alg, std::move(out));
}

} // namespace workbench

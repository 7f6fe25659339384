#include "workbench/dual.hpp"

#include <sstream>

#include "workbench/errors.hpp"

namespace workbench {

long TruncOrder::bound() const {
  if (unbounded_) throw ContractViolation("unbounded order has no bound");
  return bound_;
}

TruncOrder TruncOrder::min(const TruncOrder &o) const {
  if (unbounded_) return o;
  if (o.unbounded_) return *this;
  return at(std::min(bound_, o.bound_));
}

TruncOrder TruncOrder::minus(unsigned d) const {
  if (unbounded_) return *this;
  return at(bound_ - static_cast<long>(d));
}

std::string TruncOrder::str() const {
  return unbounded_ ? "unbounded" : std::to_string(bound_);
}

namespace {

class TableOracle : public CoeffOracle {
public:
  explicit TableOracle(TermMap table) : table_(std::move(table)) {}
  Scalar value(const MultiIndex &alpha) const override {
    auto it = table_.find(alpha);
    return it == table_.end() ? Scalar(0) : it->second;
  }

private:
  TermMap table_;
};

class LambdaOracle : public CoeffOracle {
public:
  explicit LambdaOracle(std::function<Scalar(const MultiIndex &)> f)
      : f_(std::move(f)) {}
  Scalar value(const MultiIndex &alpha) const override {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(alpha);
      if (it != memo_.end()) return it->second;
    }
    Scalar v = f_(alpha);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(alpha, std::move(v)).first->second;
  }

private:
  std::function<Scalar(const MultiIndex &)> f_;
  mutable std::mutex mu_;
  mutable std::map<MultiIndex, Scalar> memo_;
};

} // namespace

DualFunctional::DualFunctional(AlgebraPtr alg, TruncOrder order,
                               std::shared_ptr<const CoeffOracle> oracle)
    : alg_(std::move(alg)), order_(order), oracle_(std::move(oracle)) {
  if (!alg_ || !oracle_)
    throw ContractViolation("functional needs an algebra and an oracle");
}

DualFunctional DualFunctional::from_table(AlgebraPtr alg, TruncOrder order,
                                          TermMap table) {
  for (const auto &[k, v] : table)
    if (k.size() != alg->dim())
      throw DimensionMismatch("table key has wrong length");
  return DualFunctional(std::move(alg), order,
                        std::make_shared<TableOracle>(std::move(table)));
}

DualFunctional
DualFunctional::from_function(AlgebraPtr alg, TruncOrder order,
                              std::function<Scalar(const MultiIndex &)> f) {
  return DualFunctional(std::move(alg), order,
                        std::make_shared<LambdaOracle>(std::move(f)));
}

DualFunctional DualFunctional::zero(AlgebraPtr alg) {
  return from_table(std::move(alg), TruncOrder::unbounded(), TermMap{});
}

DualFunctional DualFunctional::chi0(AlgebraPtr alg) {
  MultiIndex zero(alg->dim(), 0);
  TermMap t;
  t.emplace(zero, Scalar(1));
  return from_table(std::move(alg), TruncOrder::unbounded(), std::move(t));
}

Scalar DualFunctional::coeff(const MultiIndex &alpha) const {
  if (alpha.size() != alg_->dim())
    throw DimensionMismatch("multi-index has wrong length");
  unsigned d = degree(alpha);
  if (!order_.covers(d)) throw OrderExceeded(d, order_.str());
  return oracle_->value(alpha);
}

Scalar DualFunctional::evaluate(const PbwElement &e) const {
  require_same_algebra(alg_, e.algebra());
  Scalar out(0);
  for (const auto &[alpha, c] : e.terms()) out += c * coeff(alpha);
  return out;
}

DualFunctional dual_product(const DualFunctional &a, const DualFunctional &b) {
  require_same_algebra(a.algebra(), b.algebra());
  DualFunctional ca = a, cb = b;
  return DualFunctional::from_function(
      a.algebra(), a.order().min(b.order()), [ca, cb](const MultiIndex &alpha) {
        Scalar out(0);
        for (const auto &beta : sub_indices(alpha)) {
          Scalar va = ca.coeff(beta);
          if (va.is_zero()) continue;
          out += Scalar(Rational(multi_binomial(alpha, beta))) * va *
                 cb.coeff(sub_index(alpha, beta));
        }
        return out;
      });
}

DualFunctional act(const PbwElement &e, const DualFunctional &a) {
  require_same_algebra(e.algebra(), a.algebra());
  if (e.is_zero()) return DualFunctional::zero(a.algebra());
  PbwElement mult = involution(conjugate(e));
  DualFunctional ca = a;
  return DualFunctional::from_function(
      a.algebra(), a.order().minus(e.top_degree()),
      [ca, mult](const MultiIndex &alpha) {
        return ca.evaluate(
            multiply(mult, PbwElement::monomial(ca.algebra(), alpha)));
      });
}

DualFunctional dual_involution(const DualFunctional &a) {
  DualFunctional ca = a;
  return DualFunctional::from_function(
      a.algebra(), a.order(),
      [ca](const MultiIndex &alpha) { return ca.coeff(alpha).conj(); });
}

DualFunctional dual_add(const DualFunctional &a, const DualFunctional &b) {
  require_same_algebra(a.algebra(), b.algebra());
  DualFunctional ca = a, cb = b;
  return DualFunctional::from_function(
      a.algebra(), a.order().min(b.order()),
      [ca, cb](const MultiIndex &alpha) {
        return ca.coeff(alpha) + cb.coeff(alpha);
      });
}

DualFunctional dual_sub(const DualFunctional &a, const DualFunctional &b) {
  require_same_algebra(a.algebra(), b.algebra());
  DualFunctional ca = a, cb = b;
  return DualFunctional::from_function(
      a.algebra(), a.order().min(b.order()),
      [ca, cb](const MultiIndex &alpha) {
        return ca.coeff(alpha) - cb.coeff(alpha);
      });
}

DualFunctional dual_scale(const Scalar &c, const DualFunctional &a) {
  DualFunctional ca = a;
  Scalar cc = c;
  return DualFunctional::from_function(
      a.algebra(), a.order(),
      [ca, cc](const MultiIndex &alpha) { return cc * ca.coeff(alpha); });
}

DualFunctional derivation_residual(std::size_t i, const DualFunctional &a,
                                   const DualFunctional &b) {
  const AlgebraPtr &alg = a.algebra();
  PbwElement xi = PbwElement::generator(alg, i);
  DualFunctional lhs = act(xi, dual_product(a, b));
  DualFunctional rhs = dual_add(dual_product(act(xi, a), b),
                                dual_product(a, act(xi, b)));
  return dual_sub(lhs, rhs);
}

bool vanishes_up_to(const DualFunctional &a, unsigned n) {
  for (const auto &alpha : indices_up_to(a.algebra()->dim(), n))
    if (!a.coeff(alpha).is_zero()) return false;
  return true;
}

Scalar PowerSeries::coeff(const MultiIndex &alpha) const {
  auto it = coeffs.find(alpha);
  return it == coeffs.end() ? Scalar(0) : it->second;
}

bool PowerSeries::operator==(const PowerSeries &o) const {
  return nvars == o.nvars && order == o.order && coeffs == o.coeffs;
}

PowerSeries make_power_series(
    std::size_t nvars, unsigned order,
    const std::map<MultiIndex, Scalar, GradedLexLess> &entries) {
  PowerSeries s;
  s.nvars = nvars;
  s.order = order;
  for (const auto &alpha : indices_up_to(nvars, order))
    s.coeffs.emplace(alpha, Scalar(0));
  for (const auto &[k, v] : entries) {
    if (k.size() != nvars)
      throw DimensionMismatch("series exponent has wrong length");
    if (degree(k) > order)
      throw OrderExceeded(degree(k), std::to_string(order));
    s.coeffs[k] = v;
  }
  return s;
}

PowerSeries to_power_series(const DualFunctional &a, unsigned order) {
  PowerSeries s;
  s.nvars = a.algebra()->dim();
  s.order = order;
  for (const auto &alpha : indices_up_to(s.nvars, order)) {
    Scalar c = a.coeff(alpha) / Scalar(Rational(multi_factorial(alpha)));
    s.coeffs.emplace(alpha, std::move(c));
  }
  return s;
}

PowerSeries series_product(const PowerSeries &a, const PowerSeries &b) {
  if (a.nvars != b.nvars) throw DimensionMismatch("series variable counts differ");
  PowerSeries s;
  s.nvars = a.nvars;
  s.order = std::min(a.order, b.order);
  for (const auto &alpha : indices_up_to(s.nvars, s.order))
    s.coeffs.emplace(alpha, Scalar(0));
  for (const auto &[ka, va] : a.coeffs) {
    if (va.is_zero()) continue;
    for (const auto &[kb, vb] : b.coeffs) {
      if (vb.is_zero()) continue;
      MultiIndex sum = add_index(ka, kb);
      if (degree(sum) > s.order) continue;
      s.coeffs[sum] += va * vb;
    }
  }
  return s;
}

std::string series_to_text(const PowerSeries &s) {
  std::string out;
  for (const auto &[alpha, c] : s.coeffs) {
    out += "alpha= " + index_str(alpha) + " coeff= " + c.str_spaced() + "\n";
  }
  return out;
}

PowerSeries series_from_text(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::map<MultiIndex, Scalar, GradedLexLess> entries;
  std::size_t nvars = 0;
  unsigned maxdeg = 0;
  std::size_t lineno = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    trimmed = line.substr(first);
    auto apos = trimmed.find("alpha=");
    auto cpos = trimmed.find("coeff=");
    if (apos != 0 || cpos == std::string::npos)
      throw ParseError("expected 'alpha= ... coeff= ...'", lineno, 1);
    std::string alpha_part = trimmed.substr(6, cpos - 6);
    std::string coeff_part = trimmed.substr(cpos + 6);
    MultiIndex alpha;
    Scalar c;
    try {
      alpha = parse_index(alpha_part);
      c = parse_scalar(coeff_part);
    } catch (const ParseError &e) {
      throw ParseError(e.message, lineno, 1);
    }
    if (!any) {
      nvars = alpha.size();
      any = true;
    } else if (alpha.size() != nvars) {
      throw ParseError("inconsistent number of variables", lineno, 1);
    }
    if (!entries.emplace(alpha, c).second)
      throw ParseError("duplicate exponent " + index_str(alpha), lineno, 1);
    maxdeg = std::max(maxdeg, degree(alpha));
  }
  if (!any) throw ParseError("empty series text", lineno, 1);
  auto expected = indices_up_to(nvars, maxdeg);
  if (entries.size() != expected.size())
    throw ParseError("incomplete series: expected every exponent of degree <= " +
                         std::to_string(maxdeg),
                     lineno, 1);
  PowerSeries s;
  s.nvars = nvars;
  s.order = maxdeg;
  s.coeffs = std::move(entries);
  return s;
}

RadiusEstimate radius_estimate(const PowerSeries &f,
                               const std::vector<Rational> &direction) {
  if (direction.size() != f.nvars)
    throw DimensionMismatch("direction has wrong length");
  RadiusEstimate out;
  out.precision = working_precision();
  // exact coefficients of t -> f(t * direction)
  std::vector<Scalar> c(f.order + 1, Scalar(0));
  for (const auto &[alpha, v] : f.coeffs) {
    if (v.is_zero()) continue;
    Scalar w = v;
    for (std::size_t i = 0; i < f.nvars; ++i)
      if (alpha[i]) w *= Scalar(rational_pow(direction[i], alpha[i]));
    c[degree(alpha)] += w;
  }
  std::size_t nonzero = 0;
  for (unsigned k = 1; k <= f.order; ++k)
    if (!c[k].is_zero()) ++nonzero;
  if (nonzero == 0) {
    out.estimate = BigFloat::infinity();
    return out;
  }
  if (nonzero < 4)
    throw InsufficientOrder("need at least 4 nonzero terms past the constant, have " +
                            std::to_string(nonzero));
  for (unsigned k = 1; k <= f.order; ++k) {
    if (c[k].is_zero()) continue;
    // |c_k|^(-1/k) = (1/|c_k|^2)^(1/(2k))
    Rational inv = Rational(1) / c[k].norm2();
    RadiusSample s;
    s.k = k;
    s.value = BigFloat(inv).root(2UL * k);
    out.samples.push_back(std::move(s));
  }
  bool have = false;
  BigFloat best;
  for (const auto &s : out.samples) {
    if (2UL * s.k <= f.order) continue; // keep the tail k > order/2
    if (!have || s.value < best) {
      best = s.value;
      have = true;
    }
  }
  out.estimate = have ? best : BigFloat::infinity();
  return out;
}

} // namespace workbench

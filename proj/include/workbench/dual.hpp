#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "workbench/bigfloat.hpp"
#include "workbench/pbw.hpp"

namespace workbench {

/// How far a functional's coefficients are known: all degrees, or only
/// degrees <= bound (a negative bound means nothing is known).
class TruncOrder {
public:
  static TruncOrder unbounded() { return TruncOrder(true, 0); }
  static TruncOrder at(long n) { return TruncOrder(false, n); }

  bool is_unbounded() const { return unbounded_; }
  long bound() const;
  bool covers(unsigned deg) const {
    return unbounded_ || static_cast<long>(deg) <= bound_;
  }
  TruncOrder min(const TruncOrder &o) const;
  TruncOrder minus(unsigned d) const;
  std::string str() const;

private:
  TruncOrder(bool u, long b) : unbounded_(u), bound_(b) {}
  bool unbounded_;
  long bound_;
};

/// Coefficient source for a functional on the enveloping algebra; callers
/// guarantee the requested degree is within the declared order.
class CoeffOracle {
public:
  virtual ~CoeffOracle() = default;
  virtual Scalar value(const MultiIndex &alpha) const = 0;
};

/// Linear functional on the enveloping algebra, identified with a formal
/// power series through alpha -> a(X^alpha).  Value type; cheap to copy.
class DualFunctional {
public:
  DualFunctional(AlgebraPtr alg, TruncOrder order,
                 std::shared_ptr<const CoeffOracle> oracle);

  static DualFunctional from_table(AlgebraPtr alg, TruncOrder order,
                                   TermMap table);
  static DualFunctional
  from_function(AlgebraPtr alg, TruncOrder order,
                std::function<Scalar(const MultiIndex &)> f);
  static DualFunctional zero(AlgebraPtr alg);
  /// Counit: chi0(X^alpha) = [alpha = 0]; the unit of the dual product.
  static DualFunctional chi0(AlgebraPtr alg);

  const AlgebraPtr &algebra() const { return alg_; }
  TruncOrder order() const { return order_; }

  /// a(X^alpha); throws OrderExceeded beyond the declared order.
  Scalar coeff(const MultiIndex &alpha) const;
  /// Linear extension to arbitrary elements.
  Scalar evaluate(const PbwElement &e) const;

private:
  AlgebraPtr alg_;
  TruncOrder order_;
  std::shared_ptr<const CoeffOracle> oracle_;
};

/// (ab)(X^alpha) = sum over beta <= alpha of binom(alpha, beta)
/// a(X^beta) b(X^(alpha-beta)); transpose of the coproduct.  Lazy.
DualFunctional dual_product(const DualFunctional &a, const DualFunctional &b);

/// Module action (Ea)(F) = a(conjugate(E)^dagger F).  The result knows
/// degrees up to order(a) - deg(E).  Lazy.
DualFunctional act(const PbwElement &e, const DualFunctional &a);

/// a^dagger(F) = conj(a(conjugate(F))): conjugates the coefficient table.
DualFunctional dual_involution(const DualFunctional &a);

DualFunctional dual_add(const DualFunctional &a, const DualFunctional &b);
DualFunctional dual_sub(const DualFunctional &a, const DualFunctional &b);
DualFunctional dual_scale(const Scalar &c, const DualFunctional &a);

/// Leibniz defect act(X_i, ab) - act(X_i, a) b - a act(X_i, b); identically
/// zero because the generators are primitive for the coproduct.
DualFunctional derivation_residual(std::size_t i, const DualFunctional &a,
                                   const DualFunctional &b);

/// All coefficients with |alpha| <= n vanish.
bool vanishes_up_to(const DualFunctional &a, unsigned n);

/// Truncated power series sum over alpha of c_alpha x^alpha; the coefficient
/// map is dense: every |alpha| <= order has an entry, zeros included.
struct PowerSeries {
  std::size_t nvars = 0;
  unsigned order = 0;
  std::map<MultiIndex, Scalar, GradedLexLess> coeffs;

  Scalar coeff(const MultiIndex &alpha) const;
  bool operator==(const PowerSeries &o) const;
  bool operator!=(const PowerSeries &o) const { return !(*this == o); }
};

PowerSeries make_power_series(std::size_t nvars, unsigned order,
                              const std::map<MultiIndex, Scalar, GradedLexLess> &entries);

/// Taylor realization: coefficient of x^alpha is a(X^alpha) / alpha!.
PowerSeries to_power_series(const DualFunctional &a, unsigned order);

/// Cauchy product truncated to the smaller order.
PowerSeries series_product(const PowerSeries &a, const PowerSeries &b);

/// One line per coefficient, graded-lex: "alpha= 1,0 coeff= 1/2 + 0/1 i".
std::string series_to_text(const PowerSeries &s);

/// Inverse of series_to_text; accepts lines in any order but requires every
/// |alpha| <= max-degree exactly once.  Line numbers in errors are 1-based.
PowerSeries series_from_text(const std::string &text);

struct RadiusSample {
  unsigned k = 0;
  BigFloat value; // |c_k|^(-1/k)
};

struct RadiusEstimate {
  BigFloat estimate;                 // min over the reported tail; inf if empty
  std::vector<RadiusSample> samples; // every nonzero restricted coefficient
  mpfr_prec_t precision = 0;
};

/// Root-test diagnostic for the restriction t -> f(t * direction): from the
/// exact coefficients c_k of the restricted series, report |c_k|^(-1/k) for
/// the nonzero c_k and take the minimum over the tail k > order/2.  Needs at
/// least 4 nonzero terms past the constant (InsufficientOrder otherwise);
/// an identically zero tail yields +inf.
RadiusEstimate radius_estimate(const PowerSeries &f,
                               const std::vector<Rational> &direction);

} // namespace workbench

#pragma once

#include <random>
#include <string>
#include <vector>

#include "workbench/dual.hpp"
#include "workbench/fock.hpp"
#include "workbench/pbw.hpp"

namespace workbench {

/// Deterministic sample source for the property suites; a fixed seed gives
/// a reproducible stream.
class Rng {
public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long int_in(long lo, long hi);
  /// Numerator in [-9, 9], denominator in [1, 9].
  Rational rational();
  Rational nonzero_rational();
  Scalar scalar();
  MultiIndex index(std::size_t nvars, unsigned max_degree);
  /// Sum of `terms` random monomials of degree <= max_degree.
  PbwElement element(const AlgebraPtr &alg, unsigned max_degree,
                     unsigned terms);
  /// Finite random coefficient table up to the given order.
  DualFunctional functional(const AlgebraPtr &alg, unsigned order);
  SymPolynomial poly(std::size_t dim, unsigned max_degree, unsigned terms);
  std::vector<Scalar> vec(std::size_t n);
  std::vector<Rational> rational_vec(std::size_t n);

private:
  std::mt19937 gen_;
};

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail; // failure explanation, empty on pass
};

struct SuiteResult {
  std::string suite;
  bool pass = false;
  std::vector<PropertyResult> results;
};

/// Names accepted by run_suite, "all" excluded.
std::vector<std::string> suite_names();

/// Runs one property suite ("all" chains every suite); unknown names are
/// a validation failure.
SuiteResult run_suite(const std::string &name);

/// Deterministic text: one line per property, then a summary line.
std::string suite_report(const SuiteResult &r);

} // namespace workbench

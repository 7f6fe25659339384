#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "workbench/multi_index.hpp"
#include "workbench/scalar.hpp"

namespace workbench {

/// Normal-ordered terms: monomial exponent -> coefficient.
using TermMap = std::map<MultiIndex, Scalar, GradedLexLess>;

/// Finite-dimensional real Lie algebra given by rational structure constants
/// on an ordered basis X_1,...,X_n.  Construction validates antisymmetry and
/// the Jacobi identity exactly.
class LieAlgebra {
public:
  /// brackets[i][j] holds the coefficients of [X_i, X_j] in the basis.
  static std::shared_ptr<const LieAlgebra>
  create(std::vector<std::string> names,
         std::vector<std::vector<std::vector<Rational>>> brackets);

  std::size_t dim() const { return names_.size(); }
  const std::string &name(std::size_t i) const;
  const std::vector<std::string> &names() const { return names_; }

  /// Coefficients of [X_i, X_j].
  const std::vector<Rational> &bracket(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the bracket to coefficient vectors.
  std::vector<Scalar> bracket_vec(const std::vector<Scalar> &a,
                                  const std::vector<Scalar> &b) const;

  /// [X_i, X_j] = 0 for all pairs.
  bool is_abelian() const;

  /// Format a coefficient vector as "2 X1 - 1/2 X3" using the basis names.
  std::string element_str(const std::vector<Scalar> &coeffs) const;

  // Straightening memo shared by every element over this algebra.
  std::shared_ptr<const TermMap> memo_find(std::size_t i,
                                           const MultiIndex &alpha) const;
  void memo_store(std::size_t i, const MultiIndex &alpha,
                  std::shared_ptr<const TermMap> value) const;

  /// n commuting generators X1..Xn.
  static std::shared_ptr<const LieAlgebra> abelian(std::size_t n);

  /// X, Y, Z with [X, Y] = Z central.
  static std::shared_ptr<const LieAlgebra> heisenberg();

  /// X1, X2, X3 with [X1,X2]=X3, [X2,X3]=X1, [X3,X1]=X2.
  static std::shared_ptr<const LieAlgebra> su2();

  /// Factory by name: "abelian:<n>", "heisenberg", "su2" (alias "so3").
  static std::shared_ptr<const LieAlgebra> by_name(const std::string &name);

private:
  LieAlgebra(std::vector<std::string> names,
             std::vector<std::vector<std::vector<Rational>>> brackets);
  void validate() const;

  std::vector<std::string> names_;
  std::vector<std::vector<std::vector<Rational>>> c_;

  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<std::size_t, MultiIndex>,
                   std::shared_ptr<const TermMap>>
      memo_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Throws AlgebraMismatch unless both pointers identify the same algebra.
void require_same_algebra(const AlgebraPtr &a, const AlgebraPtr &b);

} // namespace workbench

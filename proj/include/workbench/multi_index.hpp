#pragma once

#include <string>
#include <vector>

#include "workbench/scalar.hpp"

namespace workbench {

/// Exponent vector (alpha_1,...,alpha_n); the dimension is the vector length.
using MultiIndex = std::vector<unsigned>;

unsigned degree(const MultiIndex &alpha);

/// Graded lexicographic order: compare total degree first, then entries left to right.
bool graded_lex_less(const MultiIndex &a, const MultiIndex &b);

struct GradedLexLess {
  bool operator()(const MultiIndex &a, const MultiIndex &b) const {
    return graded_lex_less(a, b);
  }
};

/// e_i within dimension n (0-based i).
MultiIndex unit_index(std::size_t n, std::size_t i);

MultiIndex add_index(const MultiIndex &a, const MultiIndex &b);

/// Componentwise a - b; requires b <= a.
MultiIndex sub_index(const MultiIndex &a, const MultiIndex &b);

/// Componentwise beta <= alpha.
bool index_leq(const MultiIndex &beta, const MultiIndex &alpha);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

/// prod_i binom(alpha_i, beta_i); requires beta <= alpha componentwise.
Int multi_binomial(const MultiIndex &alpha, const MultiIndex &beta);

/// prod_i alpha_i!
Int multi_factorial(const MultiIndex &alpha);

/// All beta with beta <= alpha componentwise, odometer order (beta_n fastest).
std::vector<MultiIndex> sub_indices(const MultiIndex &alpha);

/// All alpha of dimension n with |alpha| == d, graded-lex sorted.
std::vector<MultiIndex> indices_of_degree(std::size_t n, unsigned d);

/// All alpha of dimension n with |alpha| <= N, graded-lex sorted.
std::vector<MultiIndex> indices_up_to(std::size_t n, unsigned N);

/// "a1,a2,...,an" with no spaces.
std::string index_str(const MultiIndex &alpha);

/// Parse "a1,a2,...,an"; every entry a nonnegative integer.
MultiIndex parse_index(const std::string &text);

} // namespace workbench

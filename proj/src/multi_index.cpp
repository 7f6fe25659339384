#include "workbench/multi_index.hpp"

#include <cctype>

#include "workbench/errors.hpp"

namespace workbench {

unsigned degree(const MultiIndex &alpha) {
  unsigned d = 0;
  for (unsigned a : alpha) d += a;
  return d;
}

bool graded_lex_less(const MultiIndex &a, const MultiIndex &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("multi-index dimensions differ");
  unsigned da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b; // lexicographic on entries
}

MultiIndex unit_index(std::size_t n, std::size_t i) {
  if (i >= n) throw IndexOutOfRange("generator index out of range");
  MultiIndex e(n, 0);
  e[i] = 1;
  return e;
}

MultiIndex add_index(const MultiIndex &a, const MultiIndex &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("multi-index dimensions differ");
  MultiIndex c(a);
  for (std::size_t k = 0; k < b.size(); ++k) c[k] += b[k];
  return c;
}

MultiIndex sub_index(const MultiIndex &a, const MultiIndex &b) {
  if (!index_leq(b, a))
    throw IndexOutOfRange("multi-index subtraction would go negative");
  MultiIndex c(a);
  for (std::size_t k = 0; k < b.size(); ++k) c[k] -= b[k];
  return c;
}

bool index_leq(const MultiIndex &beta, const MultiIndex &alpha) {
  if (beta.size() != alpha.size())
    throw DimensionMismatch("multi-index dimensions differ");
  for (std::size_t k = 0; k < beta.size(); ++k)
    if (beta[k] > alpha[k]) return false;
  return true;
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int multi_binomial(const MultiIndex &alpha, const MultiIndex &beta) {
  if (alpha.size() != beta.size())
    throw DimensionMismatch("multi-index dimensions differ");
  Int r = 1;
  for (std::size_t k = 0; k < alpha.size(); ++k)
    r *= binomial(alpha[k], beta[k]);
  return r;
}

Int multi_factorial(const MultiIndex &alpha) {
  Int r = 1;
  for (unsigned a : alpha) r *= factorial(a);
  return r;
}

std::vector<MultiIndex> sub_indices(const MultiIndex &alpha) {
  std::vector<MultiIndex> out;
  MultiIndex beta(alpha.size(), 0);
  for (;;) {
    out.push_back(beta);
    std::size_t k = alpha.size();
    while (k > 0) {
      --k;
      if (beta[k] < alpha[k]) {
        ++beta[k];
        for (std::size_t j = k + 1; j < alpha.size(); ++j) beta[j] = 0;
        break;
      }
      if (k == 0) return out;
    }
    if (alpha.empty()) return out;
  }
}

static void fill_degree(std::size_t n, unsigned d, std::size_t pos,
                        MultiIndex &cur, std::vector<MultiIndex> &out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned a = 0; a <= d; ++a) {
    cur[pos] = a;
    fill_degree(n, d - a, pos + 1, cur, out);
  }
}

std::vector<MultiIndex> indices_of_degree(std::size_t n, unsigned d) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (d == 0) out.push_back(MultiIndex{});
    return out;
  }
  MultiIndex cur(n, 0);
  fill_degree(n, d, 0, cur, out);
  return out;
}

std::vector<MultiIndex> indices_up_to(std::size_t n, unsigned N) {
  std::vector<MultiIndex> out;
  for (unsigned d = 0; d <= N; ++d) {
    auto layer = indices_of_degree(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string index_str(const MultiIndex &alpha) {
  std::string s;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(alpha[k]);
  }
  return s;
}

MultiIndex parse_index(const std::string &text) {
  MultiIndex out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw ParseError("empty multi-index entry", 0, 0);
    for (char c : cur)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("malformed multi-index entry '" + cur + "'", 0, 0);
    out.push_back(static_cast<unsigned>(std::stoul(cur)));
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

} // namespace workbench

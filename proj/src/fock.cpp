#include "workbench/fock.hpp"

#include <algorithm>
#include <sstream>

#include "workbench/errors.hpp"

namespace workbench {

FSpace make_fspace(std::size_t dim, Matrix u) {
  if (dim == 0) throw ValidationError("space must have positive dimension");
  if (u.rows() != dim || u.cols() != dim)
    throw DimensionMismatch("conjugation matrix has wrong shape");
  if (!is_unitary(u))
    throw ValidationError("conjugation matrix is not unitary");
  if (u * u.conj() != Matrix::identity(dim))
    throw ValidationError("conjugation does not square to the identity");
  return FSpace{dim, std::move(u)};
}

FSpace standard_fspace(std::size_t dim) {
  return make_fspace(dim, Matrix::identity(dim));
}

std::vector<Scalar> fspace_conj(const FSpace &h, const std::vector<Scalar> &x) {
  if (x.size() != h.dim)
    throw DimensionMismatch("vector has wrong length for the space");
  std::vector<Scalar> cx(x);
  for (auto &v : cx) v = v.conj();
  return mat_vec(h.u, cx);
}

static MultiIndex multiset_of(std::size_t dim, const Word &w) {
  MultiIndex alpha(dim, 0);
  for (unsigned letter : w) {
    if (letter >= dim) throw IndexOutOfRange("word letter exceeds dimension");
    alpha[letter] += 1;
  }
  return alpha;
}

SymTensor symmetrize(const PlainTensor &t) {
  SymTensor out{t.dim, t.degree, {}};
  for (const auto &[w, c] : t.coeffs) {
    if (w.size() != t.degree)
      throw DegreeMismatch("word length differs from the declared degree");
    MultiIndex alpha = multiset_of(t.dim, w);
    Scalar &slot = out.coeffs[alpha];
    slot += c;
    if (slot.is_zero()) out.coeffs.erase(alpha);
  }
  return out;
}

PlainTensor expand(const SymTensor &s) {
  PlainTensor out{s.dim, s.degree, {}};
  for (const auto &[alpha, c] : s.coeffs) {
    Rational weight(multi_factorial(alpha), factorial(s.degree));
    weight.canonicalize();
    Word w;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      w.insert(w.end(), alpha[i], static_cast<unsigned>(i));
    do {
      out.coeffs[w] += c * Scalar(weight);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return out;
}

Scalar tensor_inner(const PlainTensor &s, const PlainTensor &t) {
  if (s.dim != t.dim) throw SpaceMismatch("tensors live over different spaces");
  if (s.degree != t.degree) throw DegreeMismatch("tensors have different degrees");
  Scalar out(0);
  for (const auto &[w, c] : s.coeffs) {
    auto it = t.coeffs.find(w);
    if (it != t.coeffs.end()) out += c.conj() * it->second;
  }
  return out;
}

Scalar sym_inner(const SymTensor &a, const SymTensor &b) {
  if (a.dim != b.dim) throw SpaceMismatch("tensors live over different spaces");
  if (a.degree != b.degree)
    throw DegreeMismatch("tensors have different degrees");
  Scalar out(0);
  for (const auto &[alpha, c] : a.coeffs) {
    auto it = b.coeffs.find(alpha);
    if (it == b.coeffs.end()) continue;
    Rational weight(multi_factorial(alpha), factorial(a.degree));
    weight.canonicalize();
    out += c.conj() * it->second * Scalar(weight);
  }
  return out;
}

SymPolynomial SymPolynomial::zero(std::size_t dim) {
  if (dim == 0) throw ValidationError("space must have positive dimension");
  return SymPolynomial(dim);
}

SymPolynomial SymPolynomial::constant(std::size_t dim, const Scalar &c) {
  SymPolynomial p = zero(dim);
  p.add_term(MultiIndex(dim, 0), c);
  return p;
}

SymPolynomial SymPolynomial::basis_vector(std::size_t dim, std::size_t j) {
  if (j >= dim) throw IndexOutOfRange("basis index exceeds dimension");
  SymPolynomial p = zero(dim);
  MultiIndex alpha(dim, 0);
  alpha[j] = 1;
  p.add_term(alpha, Scalar(1));
  return p;
}

SymPolynomial SymPolynomial::monomial(std::size_t dim, const MultiIndex &alpha,
                                      const Scalar &c) {
  if (alpha.size() != dim)
    throw DimensionMismatch("multi-index has wrong length");
  SymPolynomial p = zero(dim);
  p.add_term(alpha, c);
  return p;
}

SymPolynomial SymPolynomial::from_vector(const std::vector<Scalar> &xi) {
  SymPolynomial p = zero(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    MultiIndex alpha(xi.size(), 0);
    alpha[i] = 1;
    p.add_term(alpha, xi[i]);
  }
  return p;
}

void SymPolynomial::add_term(const MultiIndex &alpha, const Scalar &c) {
  if (c.is_zero()) return;
  unsigned n = degree(alpha);
  auto it = components_.find(n);
  if (it == components_.end())
    it = components_.emplace(n, SymTensor{dim_, n, {}}).first;
  Scalar &slot = it->second.coeffs[alpha];
  slot += c;
  if (slot.is_zero()) {
    it->second.coeffs.erase(alpha);
    if (it->second.coeffs.empty()) components_.erase(it);
  }
}

SymTensor SymPolynomial::component(unsigned n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return SymTensor{dim_, n, {}};
}

Scalar SymPolynomial::coeff(const MultiIndex &alpha) const {
  if (alpha.size() != dim_)
    throw DimensionMismatch("multi-index has wrong length");
  auto it = components_.find(degree(alpha));
  if (it == components_.end()) return Scalar(0);
  auto jt = it->second.coeffs.find(alpha);
  return jt == it->second.coeffs.end() ? Scalar(0) : jt->second;
}

unsigned SymPolynomial::top_degree() const {
  return components_.empty() ? 0 : components_.rbegin()->first;
}

SymPolynomial SymPolynomial::operator+(const SymPolynomial &o) const {
  if (dim_ != o.dim_)
    throw SpaceMismatch("polynomials live over different spaces");
  SymPolynomial out(*this);
  for (const auto &[n, comp] : o.components_)
    for (const auto &[alpha, c] : comp.coeffs) out.add_term(alpha, c);
  return out;
}

SymPolynomial SymPolynomial::operator-(const SymPolynomial &o) const {
  if (dim_ != o.dim_)
    throw SpaceMismatch("polynomials live over different spaces");
  SymPolynomial out(*this);
  for (const auto &[n, comp] : o.components_)
    for (const auto &[alpha, c] : comp.coeffs) out.add_term(alpha, -c);
  return out;
}

SymPolynomial SymPolynomial::operator*(const Scalar &c) const {
  SymPolynomial out = zero(dim_);
  for (const auto &[n, comp] : components_)
    for (const auto &[alpha, v] : comp.coeffs) out.add_term(alpha, v * c);
  return out;
}

bool SymPolynomial::operator==(const SymPolynomial &o) const {
  if (dim_ != o.dim_) return false;
  if (components_.size() != o.components_.size()) return false;
  for (auto it = components_.begin(), jt = o.components_.begin();
       it != components_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (it->second.coeffs != jt->second.coeffs) return false;
  }
  return true;
}

static void append_poly_term(std::string &out, const MultiIndex &alpha,
                             const Scalar &c) {
  std::string coeff;
  bool negative = false;
  if (c.is_real()) {
    Rational r = c.re();
    negative = r < 0;
    Rational a = negative ? Rational(-r) : r;
    if (a != 1 || degree(alpha) == 0) coeff = rational_display(a);
  } else {
    coeff = "(" + c.str() + ")";
  }
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  std::string mono;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!mono.empty()) mono += " ";
    mono += "e" + std::to_string(i + 1);
    if (alpha[i] > 1) mono += "^" + std::to_string(alpha[i]);
  }
  if (coeff.empty())
    out += mono;
  else if (mono.empty())
    out += coeff;
  else
    out += coeff + " " + mono;
}

std::string SymPolynomial::str() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto &[n, comp] : components_)
    for (const auto &[alpha, c] : comp.coeffs) append_poly_term(out, alpha, c);
  return out;
}

SymPolynomial poly_multiply(const SymPolynomial &a, const SymPolynomial &b) {
  if (a.dim() != b.dim())
    throw SpaceMismatch("polynomials live over different spaces");
  SymPolynomial out = SymPolynomial::zero(a.dim());
  for (const auto &[n, ca] : a.components())
    for (const auto &[alpha, x] : ca.coeffs)
      for (const auto &[m, cb] : b.components())
        for (const auto &[beta, y] : cb.coeffs)
          out = out + SymPolynomial::monomial(a.dim(), add_index(alpha, beta),
                                              x * y);
  return out;
}

SymPolynomial vector_power(const std::vector<Scalar> &xi, unsigned n) {
  SymPolynomial out = SymPolynomial::constant(xi.size(), Scalar(1));
  SymPolynomial v = SymPolynomial::from_vector(xi);
  for (unsigned k = 0; k < n; ++k) out = poly_multiply(out, v);
  return out;
}

RNorm r_norm(const SymPolynomial &p, const Rational &r) {
  if (r <= 0) throw NonpositiveRadius("norm radius must be positive");
  RNorm out;
  for (const auto &[n, comp] : p.components()) {
    Scalar sq = sym_inner(comp, comp);
    if (!sq.is_real() || sq.re() < 0)
      throw ContractViolation("squared norm must be a nonnegative rational");
    out.squared.emplace_back(n, sq.re());
    out.value = out.value +
                BigFloat(sq.re()).sqrt() * BigFloat(rational_pow(r, n));
  }
  return out;
}

Scalar evaluate_poly(const SymPolynomial &p, const std::vector<Scalar> &xi) {
  if (xi.size() != p.dim())
    throw DimensionMismatch("point has wrong length for the space");
  Scalar out(0);
  for (const auto &[n, comp] : p.components())
    for (const auto &[alpha, c] : comp.coeffs) {
      Scalar mono(1);
      for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i]) mono *= scalar_pow(xi[i], alpha[i]);
      out += c.conj() * mono;
    }
  return out;
}

SymPolynomial poly_involution(const FSpace &h, const SymPolynomial &p) {
  if (p.dim() != h.dim)
    throw SpaceMismatch("polynomial lives over a different space");
  std::vector<SymPolynomial> columns;
  for (std::size_t j = 0; j < h.dim; ++j) {
    std::vector<Scalar> col(h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) col[i] = h.u.at(i, j);
    columns.push_back(SymPolynomial::from_vector(col));
  }
  SymPolynomial out = SymPolynomial::zero(h.dim);
  for (const auto &[n, comp] : p.components())
    for (const auto &[alpha, c] : comp.coeffs) {
      SymPolynomial term = SymPolynomial::constant(h.dim, c.conj());
      for (std::size_t j = 0; j < alpha.size(); ++j)
        for (unsigned k = 0; k < alpha[j]; ++k)
          term = poly_multiply(term, columns[j]);
      out = out + term;
    }
  return out;
}

static CharacterReport
character_report(const FSpace &h, const std::vector<SymPolynomial> &generators,
                 const std::vector<std::vector<SymPolynomial>> *table,
                 const std::vector<Scalar> &xi) {
  CharacterReport report;
  report.point_fixed = fspace_conj(h, xi) == xi;
  std::vector<Scalar> values;
  for (const auto &g : generators) values.push_back(evaluate_poly(g, xi));
  bool products_ok = true;
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const SymPolynomial &prod =
          table ? (*table)[i][j] : poly_multiply(generators[i], generators[j]);
      bool ok = evaluate_poly(prod, xi) == values[i] * values[j];
      report.products.push_back({i, j, ok});
      products_ok = products_ok && ok;
    }
  bool reality_ok = true;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool ok = evaluate_poly(poly_involution(h, generators[i]), xi) ==
              values[i].conj();
    report.reality.push_back(ok);
    reality_ok = reality_ok && ok;
  }
  report.pass = products_ok && (!report.point_fixed || reality_ok);
  return report;
}

CharacterReport character_check(const FSpace &h,
                                const std::vector<SymPolynomial> &generators,
                                const std::vector<Scalar> &xi) {
  return character_report(h, generators, nullptr, xi);
}

CharacterReport
character_check_table(const FSpace &h,
                      const std::vector<SymPolynomial> &generators,
                      const std::vector<std::vector<SymPolynomial>> &products,
                      const std::vector<Scalar> &xi) {
  if (products.size() != generators.size())
    throw DimensionMismatch("product table has wrong shape");
  for (const auto &row : products)
    if (row.size() != generators.size())
      throw DimensionMismatch("product table has wrong shape");
  return character_report(h, generators, &products, xi);
}

std::string sym_poly_to_text(const SymPolynomial &p) {
  std::string out;
  for (const auto &[n, comp] : p.components())
    for (const auto &[alpha, c] : comp.coeffs) {
      std::string list;
      for (std::size_t i = 0; i < alpha.size(); ++i)
        for (unsigned k = 0; k < alpha[i]; ++k) {
          if (!list.empty()) list += ",";
          list += std::to_string(i + 1);
        }
      out += "deg=" + std::to_string(n) + " multiset=" + list +
             " coeff=" + c.str_compact() + "\n";
    }
  return out;
}

SymPolynomial sym_poly_from_text(std::size_t dim, const std::string &text) {
  SymPolynomial p = SymPolynomial::zero(dim);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok_deg, tok_set, tok_coeff, extra;
    if (!(ls >> tok_deg)) continue;
    if (!(ls >> tok_set >> tok_coeff) || (ls >> extra))
      throw ParseError("expected 'deg=.. multiset=.. coeff=..'", lineno, 1);
    if (tok_deg.rfind("deg=", 0) != 0 || tok_set.rfind("multiset=", 0) != 0 ||
        tok_coeff.rfind("coeff=", 0) != 0)
      throw ParseError("expected 'deg=.. multiset=.. coeff=..'", lineno, 1);
    unsigned n = 0;
    try {
      n = static_cast<unsigned>(std::stoul(tok_deg.substr(4)));
    } catch (const std::exception &) {
      throw ParseError("bad degree '" + tok_deg.substr(4) + "'", lineno, 1);
    }
    MultiIndex alpha(dim, 0);
    std::string list = tok_set.substr(9);
    if (!list.empty()) {
      std::istringstream es(list);
      std::string entry;
      while (std::getline(es, entry, ',')) {
        unsigned long idx = 0;
        try {
          idx = std::stoul(entry);
        } catch (const std::exception &) {
          throw ParseError("bad multiset entry '" + entry + "'", lineno, 1);
        }
        if (idx == 0 || idx > dim)
          throw ParseError("multiset index out of range", lineno, 1);
        alpha[idx - 1] += 1;
      }
    }
    if (degree(alpha) != n)
      throw ParseError("multiset size differs from the declared degree",
                       lineno, 1);
    Scalar c;
    try {
      c = parse_scalar(tok_coeff.substr(6));
    } catch (const ParseError &e) {
      throw ParseError(e.message, lineno, 1);
    }
    if (!p.coeff(alpha).is_zero())
      throw ParseError("duplicate term", lineno, 1);
    p = p + SymPolynomial::monomial(dim, alpha, c);
  }
  return p;
}

} // namespace workbench

#include "workbench/lie_algebra.hpp"

#include <cctype>
#include <set>

#include "workbench/errors.hpp"

namespace workbench {

LieAlgebra::LieAlgebra(std::vector<std::string> names,
                       std::vector<std::vector<std::vector<Rational>>> brackets)
    : names_(std::move(names)), c_(std::move(brackets)) {}

std::shared_ptr<const LieAlgebra>
LieAlgebra::create(std::vector<std::string> names,
                   std::vector<std::vector<std::vector<Rational>>> brackets) {
  std::shared_ptr<const LieAlgebra> alg(
      new LieAlgebra(std::move(names), std::move(brackets)));
  alg->validate();
  return alg;
}

void LieAlgebra::validate() const {
  std::size_t n = names_.size();
  if (n == 0) throw ValidationError("algebra needs at least one generator");
  std::set<std::string> seen;
  for (const auto &nm : names_) {
    if (nm.empty()) throw ValidationError("empty generator name");
    if (!seen.insert(nm).second)
      throw ValidationError("duplicate generator name '" + nm + "'");
  }
  if (c_.size() != n) throw DimensionMismatch("bracket table has wrong shape");
  for (const auto &row : c_) {
    if (row.size() != n) throw DimensionMismatch("bracket table has wrong shape");
    for (const auto &entry : row)
      if (entry.size() != n)
        throw DimensionMismatch("bracket table has wrong shape");
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c_[i][j][k] != -c_[j][i][k])
          throw ValidationError("bracket table is not antisymmetric at [" +
                                names_[i] + "," + names_[j] + "]");

  // [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj] = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<Scalar> r(n, Scalar(0));
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t l = 0; l < n; ++l) {
            Rational acc = c_[i][j][m] * c_[m][k][l];
            acc += c_[j][k][m] * c_[m][i][l];
            acc += c_[k][i][m] * c_[m][j][l];
            r[l] += Scalar(acc);
          }
        bool zero = true;
        for (const auto &s : r)
          if (!s.is_zero()) zero = false;
        if (!zero)
          throw JacobiViolation(i + 1, j + 1, k + 1, element_str(r));
      }
}

const std::string &LieAlgebra::name(std::size_t i) const {
  if (i >= names_.size()) throw IndexOutOfRange("generator index out of range");
  return names_[i];
}

const std::vector<Rational> &LieAlgebra::bracket(std::size_t i,
                                                 std::size_t j) const {
  if (i >= dim() || j >= dim())
    throw IndexOutOfRange("generator index out of range");
  return c_[i][j];
}

std::vector<Scalar> LieAlgebra::bracket_vec(const std::vector<Scalar> &a,
                                            const std::vector<Scalar> &b) const {
  std::size_t n = dim();
  if (a.size() != n || b.size() != n)
    throw DimensionMismatch("coefficient vector has wrong length");
  std::vector<Scalar> out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar w = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (c_[i][j][k] != 0) out[k] += w * Scalar(c_[i][j][k]);
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto &row : c_)
    for (const auto &entry : row)
      for (const auto &x : entry)
        if (x != 0) return false;
  return true;
}

std::string LieAlgebra::element_str(const std::vector<Scalar> &coeffs) const {
  if (coeffs.size() != dim())
    throw DimensionMismatch("coefficient vector has wrong length");
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Scalar &s = coeffs[k];
    if (s.is_zero()) continue;
    std::string cs;
    bool negated = false;
    if (s == Scalar(1)) {
      cs = "";
    } else if (s == Scalar(-1)) {
      cs = "";
      negated = true;
    } else if (s.is_real() && s.re() < 0) {
      cs = rational_display(Rational(-s.re())) + " ";
      negated = true;
    } else if (s.is_real()) {
      cs = rational_display(s.re()) + " ";
    } else {
      cs = "(" + s.str() + ") ";
    }
    if (out.empty())
      out += negated ? "-" : "";
    else
      out += negated ? " - " : " + ";
    out += cs + names_[k];
  }
  if (out.empty()) out = "0";
  return out;
}

std::shared_ptr<const TermMap>
LieAlgebra::memo_find(std::size_t i, const MultiIndex &alpha) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto it = memo_.find({i, alpha});
  if (it == memo_.end()) return nullptr;
  return it->second;
}

void LieAlgebra::memo_store(std::size_t i, const MultiIndex &alpha,
                            std::shared_ptr<const TermMap> value) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(std::make_pair(i, alpha), std::move(value));
}

static std::vector<std::vector<std::vector<Rational>>>
zero_table(std::size_t n) {
  return std::vector<std::vector<std::vector<Rational>>>(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0)));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k) names.push_back("X" + std::to_string(k));
  return create(std::move(names), zero_table(n));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::heisenberg() {
  auto c = zero_table(3);
  c[0][1][2] = 1;
  c[1][0][2] = -1;
  return create({"X", "Y", "Z"}, std::move(c));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::su2() {
  auto c = zero_table(3);
  c[0][1][2] = 1;
  c[1][0][2] = -1;
  c[1][2][0] = 1;
  c[2][1][0] = -1;
  c[2][0][1] = 1;
  c[0][2][1] = -1;
  return create({"X1", "X2", "X3"}, std::move(c));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::by_name(const std::string &name) {
  if (name == "heisenberg") return heisenberg();
  if (name == "su2" || name == "so3") return su2();
  const std::string prefix = "abelian:";
  if (name.rfind(prefix, 0) == 0) {
    std::string rest = name.substr(prefix.size());
    if (rest.empty()) throw ValidationError("missing dimension in '" + name + "'");
    for (char ch : rest)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ValidationError("malformed dimension in '" + name + "'");
    std::size_t n = std::stoul(rest);
    if (n == 0) throw ValidationError("abelian dimension must be positive");
    return abelian(n);
  }
  throw ValidationError("unknown algebra '" + name + "'");
}

void require_same_algebra(const AlgebraPtr &a, const AlgebraPtr &b) {
  if (a.get() != b.get())
    throw AlgebraMismatch("operands belong to different algebras");
}

} // namespace workbench

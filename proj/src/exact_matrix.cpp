#include "workbench/exact_matrix.hpp"

#include <algorithm>

#include "workbench/errors.hpp"

namespace workbench {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>> &rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw DimensionMismatch("ragged rows in matrix literal");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Scalar &Matrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index out of range");
  return data_[i * cols_ + j];
}

const Scalar &Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index out of range");
  return data_[i * cols_ + j];
}

Matrix Matrix::operator+(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix shapes differ");
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix shapes differ");
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
  return m;
}

Matrix Matrix::operator*(const Matrix &o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix shapes do not chain");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar &a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator*(const Scalar &c) const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * c;
  return m;
}

bool Matrix::operator==(const Matrix &o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::dagger() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::conj() const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].conj();
  return m;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
  Scalar t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::string Matrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

std::vector<Scalar> mat_vec(const Matrix &m, const std::vector<Scalar> &v) {
  if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector shapes differ");
  std::vector<Scalar> out(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out[i] += m.at(i, j) * v[j];
  return out;
}

Scalar inner(const std::vector<Scalar> &a, const std::vector<Scalar> &b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Scalar s(0);
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k].conj() * b[k];
  return s;
}

std::vector<Scalar> scale_vec(const Scalar &c, const std::vector<Scalar> &v) {
  std::vector<Scalar> out(v);
  for (auto &x : out) x *= c;
  return out;
}

std::vector<Scalar> add_vec(const std::vector<Scalar> &a,
                            const std::vector<Scalar> &b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  std::vector<Scalar> out(a);
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

std::string vector_str(const std::vector<Scalar> &v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += v[k].str();
  }
  return s + ")";
}

bool is_hermitian(const Matrix &m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m.at(i, j) != m.at(j, i).conj()) return false;
  return true;
}

bool is_skew_hermitian(const Matrix &m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m.at(i, j) != -m.at(j, i).conj()) return false;
  return true;
}

bool is_unitary(const Matrix &m) {
  if (m.rows() != m.cols()) return false;
  return m.dagger() * m == Matrix::identity(m.rows());
}

RrefResult rref(const Matrix &m) {
  RrefResult res;
  res.rref = m;
  Matrix &a = res.rref;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a.at(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(p, j), a.at(row, j));
    Scalar inv = Scalar(1) / a.at(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(row, j);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix &m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(m.cols(), Scalar(0));
    x[f] = Scalar(1);
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
      x[r.pivot_cols[k]] = -r.rref.at(k, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

PsdResult check_psd(const Matrix &a) {
  if (!is_hermitian(a))
    throw HermitianViolation("matrix is not Hermitian");
  std::size_t n = a.rows();
  Matrix m = a;
  std::vector<std::vector<Scalar>> vecs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> e(n, Scalar(0));
    e[i] = Scalar(1);
    vecs.push_back(std::move(e));
  }
  std::vector<bool> done(n, false);

  auto verify = [&](PsdResult res) {
    if (!res.positive) {
      Scalar q = inner(res.witness, mat_vec(a, res.witness));
      if (!q.is_real() || !(q.re() < 0))
        throw ContractViolation("negativity witness failed verification");
      res.witness_value = q;
    }
    return res;
  };

  PsdResult res;
  for (;;) {
    // pick a remaining index with nonzero diagonal
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && !m.at(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p == n) {
      // all remaining diagonals vanish; any off-diagonal entry kills positivity
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (done[j] || j == i || m.at(i, j).is_zero()) continue;
          Scalar z = m.at(i, j);
          // w = -z v_i + v_j has <w, A w> = -2|z|^2
          res.positive = false;
          res.witness = add_vec(scale_vec(-z, vecs[i]), vecs[j]);
          return verify(res);
        }
      }
      res.positive = true;
      return res;
    }
    Scalar d = m.at(p, p);
    if (!d.is_real())
      throw HermitianViolation("diagonal entry is not real");
    if (d.re() < 0) {
      res.positive = false;
      res.witness = vecs[p];
      return verify(res);
    }
    // positive pivot: clear row/column p by congruence
    std::vector<Scalar> coef(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && i != p) coef[i] = m.at(p, i) / d;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || coef[i].is_zero()) continue;
      vecs[i] = add_vec(vecs[i], scale_vec(-coef[i], vecs[p]));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j] || j == p) continue;
        m.at(i, j) -= m.at(i, p) * m.at(p, j) / d;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p) continue;
      m.at(p, i) = Scalar(0);
      m.at(i, p) = Scalar(0);
    }
    done[p] = true;
    res.rank += 1;
  }
}

std::vector<Scalar> charpoly(const Matrix &a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("charpoly of non-square matrix");
  std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = Scalar(1);
  Matrix mk = a;
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar ck = -(mk.trace() / Scalar(Rational(static_cast<long>(k))));
    c[n - k] = ck;
    if (k < n) {
      Matrix shifted = mk;
      for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += ck;
      mk = a * shifted;
    }
  }
  return c;
}

std::string poly_str(const std::vector<Scalar> &coeffs, const std::string &var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Scalar &s = coeffs[k];
    if (s.is_zero()) continue;
    std::string mono;
    if (k == 0)
      mono = "1";
    else if (k == 1)
      mono = var;
    else
      mono = var + "^" + std::to_string(k);
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
  return out.empty() ? "0" : out;
}

} // namespace workbench

#pragma once

#include <string>
#include <vector>

#include "workbench/scalar.hpp"

namespace workbench {

/// Dense matrix over the Gaussian rationals.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t r, std::size_t c)
      : rows_(r), cols_(c), data_(r * c, Scalar(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar &at(std::size_t i, std::size_t j);
  const Scalar &at(std::size_t i, std::size_t j) const;

  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  Matrix operator*(const Matrix &o) const;
  Matrix operator*(const Scalar &c) const;
  bool operator==(const Matrix &o) const;
  bool operator!=(const Matrix &o) const { return !(*this == o); }

  /// Conjugate transpose.
  Matrix dagger() const;
  Matrix transpose() const;
  /// Elementwise conjugate.
  Matrix conj() const;
  Scalar trace() const;

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Matrix times column vector.
std::vector<Scalar> mat_vec(const Matrix &m, const std::vector<Scalar> &v);

/// Standard inner product, conjugate-linear in the first slot.
Scalar inner(const std::vector<Scalar> &a, const std::vector<Scalar> &b);

std::vector<Scalar> scale_vec(const Scalar &c, const std::vector<Scalar> &v);
std::vector<Scalar> add_vec(const std::vector<Scalar> &a,
                            const std::vector<Scalar> &b);
std::string vector_str(const std::vector<Scalar> &v);

bool is_hermitian(const Matrix &m);
bool is_skew_hermitian(const Matrix &m);
bool is_unitary(const Matrix &m);

struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Exact reduced row echelon form (Gauss-Jordan over the field).
RrefResult rref(const Matrix &m);

/// Basis of the right kernel {x : Mx = 0}, one vector per free column in
/// ascending column order; the free coordinate is set to 1.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix &m);

struct PsdResult {
  bool positive = false;
  std::size_t rank = 0;              // number of positive pivots when positive
  std::vector<Scalar> witness;       // nonempty iff !positive
  Scalar witness_value;              // <w, A w>, real and negative
};

/// Exact positive-semidefiniteness certificate for a Hermitian matrix via
/// congruence pivoting; on failure returns a concrete vector with
/// <w, A w> < 0.  Throws HermitianViolation if the input is not Hermitian.
PsdResult check_psd(const Matrix &a);

/// Coefficients c[0..n] of det(lambda I - A) = sum_k c[k] lambda^k (monic),
/// by the trace recursion.
std::vector<Scalar> charpoly(const Matrix &a);

/// "lambda^2 + 1" style display, highest power first.
std::string poly_str(const std::vector<Scalar> &coeffs, const std::string &var);

} // namespace workbench

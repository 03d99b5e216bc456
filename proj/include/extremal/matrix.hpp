#pragma once

// Dense exact linear algebra. Per-weight spaces in this library never exceed
// a few dozen dimensions, so dense Gauss-Jordan elimination is enough.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extremal/error.hpp"
#include "extremal/field.hpp"

namespace extremal {

template <Scalar K>
using Vec = std::vector<K>;

template <Scalar K>
Vec<K> zeros(const FieldSpec& f, std::size_t n) {
  return Vec<K>(n, from_int<K>(f, 0));
}

template <Scalar K>
Vec<K> unit(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec<K> v = zeros<K>(f, n);
  v.at(i) = from_int<K>(f, 1);
  return v;
}

template <Scalar K>
bool is_zero(std::span<const K> v) {
  for (const K& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// y += a * x
template <Scalar K>
void axpy(Vec<K>& y, const K& a, std::span<const K> x) {
  if (y.size() != x.size()) throw Error(ErrorKind::DimensionMismatch, "axpy length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

template <Scalar K>
class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, from_int<K>(field, 0)) {}

  static Matrix identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = from_int<K>(field, 1);
    return m;
  }

  /// Builds a matrix whose rows are the given vectors.
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vec<K>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<K> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const K> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vec<K> row_vec(std::size_t i) const { return Vec<K>(row(i).begin(), row(i).end()); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    if (!(a.field_ == b.field_)) throw Error(ErrorKind::MixedFields, "matrix product over different fields");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Throws MixedFields if any entry belongs to a different field than the
  /// matrix was declared over.
  void check_fields() const {
    for (const K& x : data_)
      if (!(x.field() == field_)) throw Error(ErrorKind::MixedFields, "matrix entries disagree on field");
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<K> data_;
};

template <Scalar K>
struct RrefResult {
  Matrix<K> reduced;
  std::vector<std::size_t> pivot_columns;
  Matrix<K> transform;  // transform * input == reduced
};

template <Scalar K>
RrefResult<K> rref(const Matrix<K>& m) {
  m.check_fields();
  const FieldSpec& f = m.field();
  Matrix<K> a = m;
  Matrix<K> t = Matrix<K>::identity(f, m.rows());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    if (piv != r)
      for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t(piv, j), t(r, j));
    K inv = a(r, c).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t j = 0; j < t.cols(); ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      K factor = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
      for (std::size_t j = 0; j < t.cols(); ++j)
        if (!t(r, j).is_zero()) t(i, j) -= factor * t(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots), std::move(t)};
}

template <Scalar K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivot_columns.size();
}

/// Basis of the right null space {v : m v = 0}, one vector per free column.
template <Scalar K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m) {
  auto res = rref(m);
  const FieldSpec& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivot_columns) is_pivot[c] = true;
  std::vector<Vec<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<K> v = unit<K>(f, m.cols(), free);
    for (std::size_t i = 0; i < res.pivot_columns.size(); ++i) v[res.pivot_columns[i]] = -res.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coefficients c with sum c_i * vectors[i] == target, or nullopt when the
/// target is outside the span. Unique when the vectors are independent.
template <Scalar K>
std::optional<Vec<K>> solve_in_span(const FieldSpec& f, const std::vector<Vec<K>>& vectors, const Vec<K>& target) {
  const std::size_t n = target.size();
  for (const auto& v : vectors)
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "vectors of different lengths");
  // Columns are the vectors; augment with the target.
  Matrix<K> m(f, n, vectors.size() + 1);
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vectors[j][i];
  for (std::size_t i = 0; i < n; ++i) m(i, vectors.size()) = target[i];
  auto res = rref(m);
  Vec<K> coeffs = zeros<K>(f, vectors.size());
  for (std::size_t i = 0; i < res.pivot_columns.size(); ++i) {
    std::size_t c = res.pivot_columns[i];
    if (c == vectors.size()) return std::nullopt;
    coeffs[c] = res.reduced(i, vectors.size());
  }
  return coeffs;
}

/// Incrementally maintained row echelon form; used wherever a span grows one
/// vector at a time (subalgebra closure, relation selection).
template <Scalar K>
class EchelonBasis {
 public:
  EchelonBasis(const FieldSpec& f, std::size_t dim) : field_(f), dim_(dim) {}

  /// Reduces v against the stored rows; returns true and stores it if it is
  /// independent of them.
  bool insert(Vec<K> v) {
    reduce(v);
    std::size_t lead = leading(v);
    if (lead == dim_) return false;
    K inv = v[lead].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      K c = rows_[r][lead];
      if (!c.is_zero()) axpy(rows_[r], -c, std::span<const K>(v));
    }
    auto pos = std::lower_bound(leads_.begin(), leads_.end(), lead) - leads_.begin();
    leads_.insert(leads_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool contains(Vec<K> v) const {
    reduce(v);
    return leading(v) == dim_;
  }

  void reduce(Vec<K>& v) const {
    if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "echelon vector length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      K c = v[leads_[r]];
      if (!c.is_zero()) axpy(v, -c, std::span<const K>(rows_[r]));
    }
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vec<K>>& rows() const { return rows_; }
  const std::vector<std::size_t>& leads() const { return leads_; }

 private:
  std::size_t leading(const Vec<K>& v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return i;
    return dim_;
  }

  FieldSpec field_;
  std::size_t dim_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> leads_;
};

}  // namespace extremal

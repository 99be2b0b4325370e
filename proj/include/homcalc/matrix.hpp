#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "homcalc/errors.hpp"
#include "homcalc/scalar.hpp"

namespace homcalc {

template <field_scalar K>
using Vec = std::vector<K>;

/// Dense matrix over an exact field. Row-major storage; 0 x n and n x 0
/// shapes are legal and show up routinely (zero modules, empty hom spaces).
template <field_scalar K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<K>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ValidationError("ragged matrix literal");
      for (const auto& x : r) a_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const K& s, Matrix m) {
    for (auto& x : m.a_) x = s * x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  Vec<K> apply(const Vec<K>& v) const {
    if (v.size() != cols_) throw ValidationError("matrix-vector shape mismatch");
    Vec<K> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<K> row(std::size_t r) const {
    Vec<K> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
    return v;
  }
  Vec<K> col(std::size_t c) const {
    Vec<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }
  void set_row(std::size_t r, const Vec<K>& v) {
    if (v.size() != cols_) throw ValidationError("set_row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = v[j];
  }
  void set_col(std::size_t c, const Vec<K>& v) {
    if (v.size() != rows_) throw ValidationError("set_col length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Stacks rows of `o` below this matrix.
  void append_rows(const Matrix& o) {
    if (rows_ == 0 && cols_ == 0) cols_ = o.cols_;
    if (o.cols_ != cols_) throw ValidationError("append_rows width mismatch");
    a_.insert(a_.end(), o.a_.begin(), o.a_.end());
    rows_ += o.rows_;
  }
  void append_row(const Vec<K>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw ValidationError("append_row width mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

template <field_scalar K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

/// Tensor of two coordinate vectors, index (i, j) -> i * dim(w) + j.
template <field_scalar K>
Vec<K> tensor_vec(const Vec<K>& v, const Vec<K>& w) {
  Vec<K> r(v.size() * w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (!w[j].is_zero()) r[i * w.size() + j] = v[i] * w[j];
  }
  return r;
}

template <field_scalar K>
Vec<K> unit_vec(std::size_t dim, std::size_t i) {
  Vec<K> v(dim);
  v[i] = K(1);
  return v;
}

template <field_scalar K>
bool is_zero_vec(const Vec<K>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <field_scalar K>
Vec<K> add_vec(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) throw ValidationError("vector sum length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <field_scalar K>
Vec<K> sub_vec(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) throw ValidationError("vector difference length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <field_scalar K>
Vec<K> scale_vec(const K& s, Vec<K> v) {
  for (auto& x : v) x = s * x;
  return v;
}

/// Row-major flattening of a matrix, entry (r, c) -> r * cols + c. All hom
/// spaces use this layout for their coordinate vectors.
template <field_scalar K>
Vec<K> flatten(const Matrix<K>& m) {
  Vec<K> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

template <field_scalar K>
Matrix<K> unflatten(const Vec<K>& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw ValidationError("unflatten size mismatch");
  Matrix<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

}  // namespace homcalc

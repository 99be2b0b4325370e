#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "homcalc/matrix.hpp"

namespace homcalc {

/// In-place Gauss-Jordan to reduced row echelon form. Pivots are chosen
/// lexicographically (first usable column, first nonzero row), which makes
/// the result bit-exact reproducible. Returns the pivot columns.
template <field_scalar K>
std::vector<std::size_t> rref(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank) m.swap_rows(piv, rank);
    const K inv = K(1) / m(rank, col);
    if (!inv.is_one()) {
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(rank, c).is_zero()) m(rank, c) = inv * m(rank, c);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      const K f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(rank, c).is_zero()) m(r, c) -= f * m(rank, c);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

template <field_scalar K>
std::size_t rank(Matrix<K> m) {
  return rref(m).size();
}

/// A linear subspace of K^n held by its unique RREF basis. Equality of
/// subspaces is literal equality of the stored bases.
template <field_scalar K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Canonicalizes an arbitrary spanning set (rows of `span`).
  static Subspace from_span(std::size_t ambient, Matrix<K> span) {
    if (span.cols() != ambient) throw ValidationError("span width differs from ambient dimension");
    Subspace s(ambient);
    s.pivots_ = rref(span);
    s.basis_ = Matrix<K>(s.pivots_.size(), ambient);
    for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.set_row(i, span.row(i));
    return s;
  }

  static Subspace full(std::size_t ambient) {
    return from_span(ambient, Matrix<K>::identity(ambient));
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  Vec<K> basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Matrix whose columns are the basis vectors (the inclusion into K^n).
  Matrix<K> inclusion() const { return basis_.transpose(); }

  /// Coordinates of `v` in the RREF basis; read off at the pivot positions.
  /// Fails unless `v` actually lies in the subspace.
  Vec<K> coordinates(const Vec<K>& v) const {
    auto c = try_coordinates(v);
    if (!c) throw InternalError("vector lies outside the subspace");
    return std::move(*c);
  }

  std::optional<Vec<K>> try_coordinates(const Vec<K>& v) const {
    if (v.size() != ambient_) throw ValidationError("coordinates: ambient mismatch");
    Vec<K> c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    // residual must vanish exactly
    Vec<K> res = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!basis_(i, j).is_zero()) res[j] -= c[i] * basis_(i, j);
    }
    if (!is_zero_vec(res)) return std::nullopt;
    return c;
  }

  bool contains(const Vec<K>& v) const { return try_coordinates(v).has_value(); }
  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  Matrix<K> basis_;  // dim x ambient, RREF
  std::vector<std::size_t> pivots_;
};

/// Exact kernel of a matrix, canonicalized to RREF.
template <field_scalar K>
Subspace<K> kernel(Matrix<K> m) {
  const std::size_t n = m.cols();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<K> span(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(n);
    v[f] = K(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
    span.append_row(v);
  }
  return Subspace<K>::from_span(n, std::move(span));
}

/// Column span of a matrix, canonicalized.
template <field_scalar K>
Subspace<K> column_space(const Matrix<K>& m) {
  return Subspace<K>::from_span(m.rows(), m.transpose());
}

/// Solution set of a consistent or inconsistent linear system A x = b:
/// either empty, or particular + homogeneous with the particular solution
/// pinned down by zeroing all free variables.
template <field_scalar K>
struct AffineSolutionSet {
  bool solvable = false;
  Vec<K> particular;        // present iff solvable
  Subspace<K> homogeneous;  // kernel of the constraint matrix, RREF

  bool contains(const Vec<K>& v) const {
    return solvable && homogeneous.contains(sub_vec(v, particular));
  }
};

template <field_scalar K>
AffineSolutionSet<K> solve_affine(const Matrix<K>& constraints, const Vec<K>& rhs) {
  if (rhs.size() != constraints.rows())
    throw ValidationError("solve_affine: rhs length differs from constraint rows");
  const std::size_t n = constraints.cols();
  Matrix<K> aug(constraints.rows(), n + 1);
  for (std::size_t i = 0; i < constraints.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = constraints(i, j);
    aug(i, n) = rhs[i];
  }
  auto pivots = rref(aug);
  AffineSolutionSet<K> sol;
  sol.homogeneous = kernel(constraints);
  if (!pivots.empty() && pivots.back() == n) return sol;  // inconsistent
  sol.solvable = true;
  sol.particular.assign(n, K(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, n);
  return sol;
}

/// Projection/section pair for K^ambient / sub. The projection kills the
/// subspace; the section picks the standard basis vectors at the non-pivot
/// columns, so projection * section = identity.
template <field_scalar K>
struct QuotientMaps {
  std::size_t dim = 0;
  Matrix<K> projection;  // dim x ambient
  Matrix<K> section;     // ambient x dim
};

template <field_scalar K>
QuotientMaps<K> quotient(std::size_t ambient, const Subspace<K>& sub) {
  if (sub.ambient() != ambient) throw ValidationError("quotient: ambient mismatch");
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : sub.pivots()) is_pivot[p] = true;
  QuotientMaps<K> q;
  q.dim = ambient - sub.dim();
  q.projection = Matrix<K>(q.dim, ambient);
  q.section = Matrix<K>(ambient, q.dim);
  std::size_t r = 0;
  for (std::size_t f = 0; f < ambient; ++f) {
    if (is_pivot[f]) continue;
    // reduce e_f modulo sub: e_f itself has zero pivot coordinates,
    // so the row of the projection at a general vector v is
    // v[f] - sum_i v[pivot_i] * basis_i[f].
    q.projection(r, f) = K(1);
    for (std::size_t i = 0; i < sub.dim(); ++i) {
      const K& bif = sub.basis()(i, f);
      if (!bif.is_zero()) q.projection(r, sub.pivots()[i]) -= bif;
    }
    q.section(f, r) = K(1);
    ++r;
  }
  return q;
}

/// num / den as explicit data: dimension, chosen representatives, and the
/// class map. Requires den to be contained in num.
template <field_scalar K>
struct Subquotient {
  Subspace<K> num;
  QuotientMaps<K> maps;  // quotient of K^{num.dim} by den-in-num coordinates
  Matrix<K> representatives;  // rows, in ambient coordinates

  std::size_t dim() const { return maps.dim; }

  /// Class coordinates of an ambient vector that lies in num.
  Vec<K> class_of(const Vec<K>& v) const { return maps.projection.apply(num.coordinates(v)); }
};

template <field_scalar K>
Subquotient<K> subquotient(Subspace<K> num, const Subspace<K>& den) {
  if (!num.contains(den)) throw ValidationError("subquotient: denominator not inside numerator");
  Matrix<K> den_in_num(0, num.dim());
  for (std::size_t i = 0; i < den.dim(); ++i)
    den_in_num.append_row(num.coordinates(den.basis_vector(i)));
  Subquotient<K> sq;
  sq.maps = quotient(num.dim(), Subspace<K>::from_span(num.dim(), std::move(den_in_num)));
  sq.representatives = Matrix<K>(sq.maps.dim, num.ambient());
  for (std::size_t i = 0; i < sq.maps.dim; ++i) {
    Vec<K> rep(num.ambient());
    for (std::size_t j = 0; j < num.dim(); ++j) {
      const K& c = sq.maps.section(j, i);
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < num.ambient(); ++k)
        if (!num.basis()(j, k).is_zero()) rep[k] += c * num.basis()(j, k);
    }
    sq.representatives.set_row(i, rep);
  }
  sq.num = std::move(num);
  return sq;
}

/// Exact inverse of a square matrix; throws if singular.
template <field_scalar K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw ValidationError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || (n && pivots.back() != n - 1))
    throw ValidationError("matrix is singular");
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace homcalc

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homcalc/linalg.hpp"
#include "homcalc/matrix.hpp"
#include "homcalc/report.hpp"

namespace homcalc {

/// Finite-dimensional associative unital algebra given by structure
/// constants: e_i e_j = sum_k c[i][j][k] e_k. Stored as the family of
/// left-multiplication matrices L_i with L_i(k, j) = c[i][j][k].
template <field_scalar K>
struct FinAlgebra {
  std::size_t dim = 0;
  std::vector<Matrix<K>> left_mult;  // one dim x dim matrix per basis index
  Vec<K> unit;

  const K& c(std::size_t i, std::size_t j, std::size_t k) const { return left_mult[i](k, j); }

  Vec<K> basis_vec(std::size_t i) const { return unit_vec<K>(dim, i); }

  Vec<K> mul(const Vec<K>& a, const Vec<K>& b) const {
    Vec<K> r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      Vec<K> t = left_mult[i].apply(b);
      for (std::size_t k = 0; k < dim; ++k) r[k] += a[i] * t[k];
    }
    return r;
  }

  /// Matrix of x |-> a x.
  Matrix<K> left_mult_matrix(const Vec<K>& a) const {
    Matrix<K> m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      if (!a[i].is_zero()) m += a[i] * left_mult[i];
    return m;
  }

  /// Matrix of x |-> x b.
  Matrix<K> right_mult_matrix(const Vec<K>& b) const {
    Matrix<K> m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.set_col(i, mul(basis_vec(i), b));
    return m;
  }

  /// The multiplication map A (x) A -> A on tensor coordinates
  /// (i, j) -> i * dim + j.
  Matrix<K> mult_map() const {
    Matrix<K> mu(dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) mu.set_col(i * dim + j, mul(basis_vec(i), basis_vec(j)));
    return mu;
  }
};

template <field_scalar K>
Report validate_algebra(const FinAlgebra<K>& A) {
  Report rep;
  const std::size_t n = A.dim;
  if (A.left_mult.size() != n) {
    rep.add("mult tensor has " + std::to_string(A.left_mult.size()) + " slices, expected " +
            std::to_string(n));
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (A.left_mult[i].rows() != n || A.left_mult[i].cols() != n) {
      rep.add("mult slice " + std::to_string(i) + " has wrong shape");
      return rep;
    }
  if (A.unit.size() != n) {
    rep.add("unit vector has wrong length");
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (A.mul(A.unit, A.basis_vec(i)) != A.basis_vec(i))
      rep.add("unit law fails: 1*e" + std::to_string(i));
    if (A.mul(A.basis_vec(i), A.unit) != A.basis_vec(i))
      rep.add("unit law fails: e" + std::to_string(i) + "*1");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<K> eij = A.mul(A.basis_vec(i), A.basis_vec(j));
      for (std::size_t l = 0; l < n; ++l) {
        if (A.mul(eij, A.basis_vec(l)) != A.mul(A.basis_vec(i), A.mul(A.basis_vec(j), A.basis_vec(l))))
          rep.add("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                  std::to_string(l) + ")");
      }
    }
  return rep;
}

}  // namespace homcalc

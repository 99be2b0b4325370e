#pragma once

#include <cstddef>

#include "homcalc/coring.hpp"

namespace homcalc {

/// k^m with componentwise multiplication (m orthogonal idempotents).
template <field_scalar K>
FinAlgebra<K> product_field(std::size_t m) {
  if (m == 0) throw ValidationError("product-field needs m >= 1");
  FinAlgebra<K> A;
  A.dim = m;
  A.unit.assign(m, K(1));
  for (std::size_t i = 0; i < m; ++i) {
    Matrix<K> l(m, m);
    l(i, i) = K(1);
    A.left_mult.push_back(std::move(l));
  }
  return A;
}

/// The ground field as a one-dimensional algebra.
template <field_scalar K>
FinAlgebra<K> ground_field() {
  return product_field<K>(1);
}

/// Full matrix algebra M_n(k); basis e_{ij} sits at index i * n + j.
template <field_scalar K>
FinAlgebra<K> matrix_algebra(std::size_t n) {
  if (n == 0) throw ValidationError("matrix-algebra needs n >= 1");
  FinAlgebra<K> A;
  A.dim = n * n;
  A.unit.assign(n * n, K(0));
  for (std::size_t i = 0; i < n; ++i) A.unit[i * n + i] = K(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // e_{ij} e_{kl} = [j == k] e_{il}
      Matrix<K> l(n * n, n * n);
      for (std::size_t ll = 0; ll < n; ++ll) l(i * n + ll, j * n + ll) = K(1);
      A.left_mult.push_back(std::move(l));
    }
  return A;
}

/// Group algebra k[Z/n], basis 1, g, ..., g^{n-1}.
template <field_scalar K>
FinAlgebra<K> group_algebra_cyclic(std::size_t n) {
  if (n == 0) throw ValidationError("group-algebra needs n >= 1");
  FinAlgebra<K> A;
  A.dim = n;
  A.unit = unit_vec<K>(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<K> l(n, n);
    for (std::size_t j = 0; j < n; ++j) l((i + j) % n, j) = K(1);
    A.left_mult.push_back(std::move(l));
  }
  return A;
}

/// Dual numbers k[t]/(t^2), basis 1, t. Not separable over any field.
template <field_scalar K>
FinAlgebra<K> dual_numbers() {
  FinAlgebra<K> A;
  A.dim = 2;
  A.unit = unit_vec<K>(2, 0);
  A.left_mult.push_back(Matrix<K>::identity(2));
  Matrix<K> t(2, 2);
  t(1, 0) = K(1);
  A.left_mult.push_back(std::move(t));
  return A;
}

/// A coring over k with m group-like basis elements g_i (Delta g_i =
/// g_i (x) g_i, eps g_i = 1), group-like chosen as g_0. For m >= 2 its
/// calculus is a nonzero semi-free DGA over the ground field with inner
/// forms g_i - g_0 whose inner hom-connections are flat.
template <field_scalar K>
Coring<K> grouplike_coring(std::size_t m) {
  if (m == 0) throw ValidationError("grouplike coring needs m >= 1");
  Coring<K> cor;
  cor.A = ground_field<K>();
  cor.C.dim = m;
  cor.C.left_action.push_back(Matrix<K>::identity(m));
  cor.C.right_action.push_back(Matrix<K>::identity(m));
  const auto cc = cor.tensor_square();
  cor.coproduct = Matrix<K>(cc.dim, m);
  for (std::size_t i = 0; i < m; ++i)
    cor.coproduct.set_col(i, cc.project(unit_vec<K>(m, i), unit_vec<K>(m, i)));
  cor.counit = Matrix<K>(1, m);
  for (std::size_t i = 0; i < m; ++i) cor.counit(0, i) = K(1);
  cor.grouplike = unit_vec<K>(m, 0);
  return cor;
}

}  // namespace homcalc

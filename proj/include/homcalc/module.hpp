#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homcalc/algebra.hpp"

namespace homcalc {

/// Right module over a FinAlgebra: action[s] is the matrix of m |-> m e_s.
/// Because the matrices act from the left on coordinates, the module law
/// m(ab) = (ma)b reads action(ab) = action(b) action(a).
template <field_scalar K>
struct RightModule {
  std::size_t dim = 0;
  std::vector<Matrix<K>> action;

  Vec<K> act(const Vec<K>& m, const Vec<K>& a) const {
    Vec<K> r(dim);
    for (std::size_t s = 0; s < action.size(); ++s) {
      if (a[s].is_zero()) continue;
      Vec<K> t = action[s].apply(m);
      for (std::size_t k = 0; k < dim; ++k) r[k] += a[s] * t[k];
    }
    return r;
  }

  Matrix<K> action_matrix(const Vec<K>& a) const {
    Matrix<K> m(dim, dim);
    for (std::size_t s = 0; s < action.size(); ++s)
      if (!a[s].is_zero()) m += a[s] * action[s];
    return m;
  }
};

/// Bimodule: commuting left and right actions, possibly over two different
/// algebras (left_action indexed by the left algebra's basis, right_action
/// by the right one's).
template <field_scalar K>
struct Bimodule {
  std::size_t dim = 0;
  std::vector<Matrix<K>> left_action;
  std::vector<Matrix<K>> right_action;

  RightModule<K> as_right_module() const { return {dim, right_action}; }

  Vec<K> left(const Vec<K>& a, const Vec<K>& m) const {
    Vec<K> r(dim);
    for (std::size_t s = 0; s < left_action.size(); ++s) {
      if (a[s].is_zero()) continue;
      Vec<K> t = left_action[s].apply(m);
      for (std::size_t k = 0; k < dim; ++k) r[k] += a[s] * t[k];
    }
    return r;
  }
  Vec<K> right(const Vec<K>& m, const Vec<K>& a) const {
    Vec<K> r(dim);
    for (std::size_t s = 0; s < right_action.size(); ++s) {
      if (a[s].is_zero()) continue;
      Vec<K> t = right_action[s].apply(m);
      for (std::size_t k = 0; k < dim; ++k) r[k] += a[s] * t[k];
    }
    return r;
  }
  Matrix<K> left_matrix(const Vec<K>& a) const {
    Matrix<K> m(dim, dim);
    for (std::size_t s = 0; s < left_action.size(); ++s)
      if (!a[s].is_zero()) m += a[s] * left_action[s];
    return m;
  }
  Matrix<K> right_matrix(const Vec<K>& a) const {
    Matrix<K> m(dim, dim);
    for (std::size_t s = 0; s < right_action.size(); ++s)
      if (!a[s].is_zero()) m += a[s] * right_action[s];
    return m;
  }
};

template <field_scalar K>
RightModule<K> zero_module() {
  return {0, {}};
}

template <field_scalar K>
Bimodule<K> zero_bimodule(std::size_t left_alg_dim, std::size_t right_alg_dim) {
  Bimodule<K> b;
  b.dim = 0;
  b.left_action.assign(left_alg_dim, Matrix<K>(0, 0));
  b.right_action.assign(right_alg_dim, Matrix<K>(0, 0));
  return b;
}

/// A as a right module over itself.
template <field_scalar K>
RightModule<K> regular_right_module(const FinAlgebra<K>& A) {
  RightModule<K> m{A.dim, {}};
  m.action.reserve(A.dim);
  for (std::size_t s = 0; s < A.dim; ++s) m.action.push_back(A.right_mult_matrix(A.basis_vec(s)));
  return m;
}

/// A as a bimodule over itself.
template <field_scalar K>
Bimodule<K> regular_bimodule(const FinAlgebra<K>& A) {
  Bimodule<K> b;
  b.dim = A.dim;
  b.left_action = A.left_mult;
  b.right_action = regular_right_module(A).action;
  return b;
}

template <field_scalar K>
Report validate_right_module(const FinAlgebra<K>& A, const RightModule<K>& M) {
  Report rep;
  if (M.action.size() != A.dim) {
    rep.add("module action has wrong number of matrices");
    return rep;
  }
  for (const auto& a : M.action)
    if (a.rows() != M.dim || a.cols() != M.dim) {
      rep.add("module action matrix has wrong shape");
      return rep;
    }
  if (M.action_matrix(A.unit) != Matrix<K>::identity(M.dim)) rep.add("unit does not act as identity");
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j) {
      // m(e_i e_j) = (m e_i) e_j
      if (M.action_matrix(A.mul(A.basis_vec(i), A.basis_vec(j))) != M.action[j] * M.action[i])
        rep.add("right action incompatible with multiplication at (" + std::to_string(i) + "," +
                std::to_string(j) + ")");
    }
  return rep;
}

template <field_scalar K>
Report validate_bimodule(const FinAlgebra<K>& left_alg, const FinAlgebra<K>& right_alg,
                         const Bimodule<K>& E) {
  Report rep;
  if (E.left_action.size() != left_alg.dim || E.right_action.size() != right_alg.dim) {
    rep.add("bimodule action count mismatch");
    return rep;
  }
  rep.merge(validate_right_module(right_alg, E.as_right_module()), "right action");
  // left action is a homomorphism acting from the left
  for (const auto& a : E.left_action)
    if (a.rows() != E.dim || a.cols() != E.dim) {
      rep.add("left action matrix has wrong shape");
      return rep;
    }
  if (E.left_matrix(left_alg.unit) != Matrix<K>::identity(E.dim))
    rep.add("left unit does not act as identity");
  for (std::size_t i = 0; i < left_alg.dim; ++i)
    for (std::size_t j = 0; j < left_alg.dim; ++j)
      if (E.left_matrix(left_alg.mul(left_alg.basis_vec(i), left_alg.basis_vec(j))) !=
          E.left_action[i] * E.left_action[j])
        rep.add("left action incompatible with multiplication at (" + std::to_string(i) + "," +
                std::to_string(j) + ")");
  for (std::size_t i = 0; i < left_alg.dim; ++i)
    for (std::size_t j = 0; j < right_alg.dim; ++j)
      if (E.left_action[i] * E.right_action[j] != E.right_action[j] * E.left_action[i])
        rep.add("left and right actions do not commute at (" + std::to_string(i) + "," +
                std::to_string(j) + ")");
  return rep;
}

}  // namespace homcalc

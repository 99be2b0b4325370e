#pragma once

#include <cstddef>
#include <vector>

#include "homcalc/linalg.hpp"
#include "homcalc/module.hpp"

namespace homcalc {

/// V (x)_A W presented as a quotient of the plain tensor product: the
/// factor map (projection) kills the balancing relations
/// (v a) (x) w - v (x) (a w), and the section chooses representatives.
/// Plain tensor coordinates follow tensor_vec: (i, j) -> i * dim W + j.
template <field_scalar K>
struct TensorOverAlgebra {
  std::size_t dim = 0;
  Matrix<K> factor;   // dim x (dim V * dim W)
  Matrix<K> section;  // (dim V * dim W) x dim
  Subspace<K> relations;

  Vec<K> project(const Vec<K>& plain) const { return factor.apply(plain); }
  Vec<K> project(const Vec<K>& v, const Vec<K>& w) const { return factor.apply(tensor_vec(v, w)); }
};

template <field_scalar K>
TensorOverAlgebra<K> tensor_over_algebra(std::size_t dim_v,
                                         const std::vector<Matrix<K>>& right_action_v,
                                         std::size_t dim_w,
                                         const std::vector<Matrix<K>>& left_action_w) {
  if (right_action_v.size() != left_action_w.size())
    throw ValidationError("tensor_over_algebra: the two modules are over different algebras");
  const std::size_t n_a = right_action_v.size();
  const std::size_t full = dim_v * dim_w;
  Matrix<K> span(0, full);
  for (std::size_t s = 0; s < n_a; ++s)
    for (std::size_t i = 0; i < dim_v; ++i) {
      const Vec<K> va = right_action_v[s].col(i);
      for (std::size_t j = 0; j < dim_w; ++j) {
        const Vec<K> aw = left_action_w[s].col(j);
        Vec<K> rel(full);
        for (std::size_t r = 0; r < dim_v; ++r)
          if (!va[r].is_zero()) rel[r * dim_w + j] += va[r];
        for (std::size_t r = 0; r < dim_w; ++r)
          if (!aw[r].is_zero()) rel[i * dim_w + r] -= aw[r];
        if (!is_zero_vec(rel)) span.append_row(rel);
      }
    }
  TensorOverAlgebra<K> t;
  t.relations = Subspace<K>::from_span(full, std::move(span));
  auto q = quotient(full, t.relations);
  t.dim = q.dim;
  t.factor = std::move(q.projection);
  t.section = std::move(q.section);
  return t;
}

template <field_scalar K>
TensorOverAlgebra<K> tensor_over_algebra(const RightModule<K>& v, const std::vector<Matrix<K>>& left_action_w,
                                         std::size_t dim_w) {
  return tensor_over_algebra(v.dim, v.action, dim_w, left_action_w);
}

}  // namespace homcalc

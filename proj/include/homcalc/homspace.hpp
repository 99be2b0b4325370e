#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homcalc/linalg.hpp"
#include "homcalc/module.hpp"

namespace homcalc {

/// The space of right-A-linear maps V -> M, with its canonical RREF basis.
/// A map is stored as a target_dim x source_dim matrix; coordinate vectors
/// flatten such matrices row-major. When V carries a left action of some
/// algebra B, the hom space is a right B-module by (f b)(v) = f(b v) and
/// right_action holds the matrices of that action on hom coordinates.
template <field_scalar K>
struct HomSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Subspace<K> space;              // subspace of K^{target_dim * source_dim}
  std::vector<Matrix<K>> basis;   // unflattened basis maps
  std::vector<Matrix<K>> right_action;  // per left-algebra basis index; may be empty

  std::size_t dim() const { return space.dim(); }

  Vec<K> coords(const Matrix<K>& f) const { return space.coordinates(flatten(f)); }
  std::optional<Vec<K>> try_coords(const Matrix<K>& f) const {
    return space.try_coordinates(flatten(f));
  }
  Matrix<K> materialize(const Vec<K>& c) const {
    Vec<K> flat(space.ambient());
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (c[t].is_zero()) continue;
      for (std::size_t j = 0; j < space.ambient(); ++j)
        if (!space.basis()(t, j).is_zero()) flat[j] += c[t] * space.basis()(t, j);
    }
    return unflatten(flat, target_dim, source_dim);
  }
};

/// Computes Hom_A(V, M) as the kernel of the linearity constraints
/// L ra_s = ma_s L over all s. The optional left action on V induces the
/// right action on the hom space.
template <field_scalar K>
HomSpace<K> hom_space(std::size_t dim_v, const std::vector<Matrix<K>>& right_action_v,
                      const RightModule<K>& M,
                      const std::vector<Matrix<K>>* left_action_v = nullptr) {
  if (right_action_v.size() != M.action.size())
    throw ValidationError("hom_space: source and target are over different algebras");
  const std::size_t dm = M.dim, dv = dim_v, n_a = right_action_v.size();
  const std::size_t unknowns = dm * dv;
  Matrix<K> constraints(n_a * dm * dv, unknowns);
  std::size_t row = 0;
  for (std::size_t s = 0; s < n_a; ++s) {
    const Matrix<K>& rv = right_action_v[s];
    const Matrix<K>& rm = M.action[s];
    for (std::size_t r = 0; r < dm; ++r)
      for (std::size_t j = 0; j < dv; ++j) {
        // (L rv - rm L)(r, j) = 0
        for (std::size_t c = 0; c < dv; ++c)
          if (!rv(c, j).is_zero()) constraints(row, r * dv + c) += rv(c, j);
        for (std::size_t u = 0; u < dm; ++u)
          if (!rm(r, u).is_zero()) constraints(row, u * dv + j) -= rm(r, u);
        ++row;
      }
  }
  HomSpace<K> h;
  h.source_dim = dv;
  h.target_dim = dm;
  h.space = kernel(std::move(constraints));
  h.basis.reserve(h.space.dim());
  for (std::size_t t = 0; t < h.space.dim(); ++t)
    h.basis.push_back(unflatten(h.space.basis_vector(t), dm, dv));
  if (left_action_v) {
    h.right_action.reserve(left_action_v->size());
    for (const auto& la : *left_action_v) {
      Matrix<K> act(h.dim(), h.dim());
      for (std::size_t t = 0; t < h.dim(); ++t) act.set_col(t, h.coords(h.basis[t] * la));
      h.right_action.push_back(std::move(act));
    }
  }
  return h;
}

template <field_scalar K>
HomSpace<K> hom_space(const Bimodule<K>& V, const RightModule<K>& M) {
  return hom_space(V.dim, V.right_action, M, &V.left_action);
}

/// Hom_A(V, A) as an A-bimodule with (a xi b)(w) = a xi(b w): the basis is
/// the canonical hom-space basis, the right action comes from the left
/// action on V, the left action postcomposes with multiplication in A.
template <field_scalar K>
struct DualModule {
  HomSpace<K> hom;
  Bimodule<K> bimodule;

  /// Element of the dual from coordinates, as a matrix V -> A.
  Matrix<K> materialize(const Vec<K>& c) const { return hom.materialize(c); }
};

template <field_scalar K>
DualModule<K> dual_module(const FinAlgebra<K>& A, const Bimodule<K>& V) {
  DualModule<K> d;
  d.hom = hom_space(V, regular_right_module(A));
  d.bimodule.dim = d.hom.dim();
  d.bimodule.right_action = d.hom.right_action;
  d.bimodule.left_action.reserve(A.dim);
  for (std::size_t s = 0; s < A.dim; ++s) {
    const Matrix<K> lm = A.left_mult_matrix(A.basis_vec(s));
    Matrix<K> act(d.hom.dim(), d.hom.dim());
    for (std::size_t t = 0; t < d.hom.dim(); ++t) act.set_col(t, d.hom.coords(lm * d.hom.basis[t]));
    d.bimodule.left_action.push_back(std::move(act));
  }
  return d;
}

}  // namespace homcalc

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcalc/homspace.hpp"
#include "homcalc/module.hpp"
#include "homcalc/tensor.hpp"

namespace homcalc {

/// Differential graded algebra over A, stored up to a truncation degree D:
/// bimodules Omega^1..Omega^D, the products Omega^m x Omega^n -> Omega^{m+n}
/// for m, n >= 1 with m + n <= D (degree-0 factors act through the bimodule
/// structure), and the differentials d_n: Omega^n -> Omega^{n+1} for n < D.
///
/// A product is stored as one matrix per basis element of the first factor:
/// products[{m,n}][i] maps Omega^n coordinates to Omega^{m+n} coordinates
/// and implements y |-> e_i^(m) * y.
template <field_scalar K>
struct GradedCalculus {
  FinAlgebra<K> A;
  std::size_t truncation = 1;  // D
  std::vector<Bimodule<K>> components;  // components[n-1] = Omega^n
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Matrix<K>>> products;
  std::vector<Matrix<K>> d;  // d[n]: Omega^n -> Omega^{n+1}, n = 0..D-1

  std::size_t dim(std::size_t degree) const {
    if (degree == 0) return A.dim;
    if (degree > truncation) throw MathRefusal("degree beyond truncation");
    return components[degree - 1].dim;
  }
  const Bimodule<K>& component(std::size_t degree) const {
    if (degree == 0 || degree > truncation) throw MathRefusal("degree beyond truncation");
    return components[degree - 1];
  }
  const Matrix<K>& differential(std::size_t degree) const {
    if (degree >= d.size()) throw MathRefusal("differential beyond truncation");
    return d[degree];
  }

  /// Product of elements of any degrees with m + n <= D.
  Vec<K> mul(std::size_t m, std::size_t n, const Vec<K>& x, const Vec<K>& y) const {
    if (m == 0 && n == 0) return A.mul(x, y);
    if (m == 0) return component(n).left(x, y);
    if (n == 0) return component(m).right(x, y);
    const auto& slices = products.at({m, n});
    Vec<K> r(dim(m + n));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      Vec<K> t = slices[i].apply(y);
      for (std::size_t k = 0; k < r.size(); ++k) r[k] += x[i] * t[k];
    }
    return r;
  }

  /// Matrix of y |-> x y for fixed x of degree m, acting on degree n.
  Matrix<K> left_mul_matrix(std::size_t m, const Vec<K>& x, std::size_t n) const {
    if (m == 0) return n == 0 ? A.left_mult_matrix(x) : component(n).left_matrix(x);
    if (n == 0) {
      Matrix<K> r(dim(m), A.dim);
      for (std::size_t j = 0; j < A.dim; ++j) r.set_col(j, component(m).right(x, A.basis_vec(j)));
      return r;
    }
    const auto& slices = products.at({m, n});
    Matrix<K> r(dim(m + n), dim(n));
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) r += x[i] * slices[i];
    return r;
  }

  /// Matrix of x |-> x y for fixed y of degree n, acting on degree m.
  Matrix<K> right_mul_matrix(std::size_t n, const Vec<K>& y, std::size_t m) const {
    Matrix<K> r(dim(m + n), dim(m));
    for (std::size_t i = 0; i < dim(m); ++i)
      r.set_col(i, mul(m, n, unit_vec<K>(dim(m), i), y));
    return r;
  }
};

/// The calculus with Omega^n = 0 for all n >= 1.
template <field_scalar K>
GradedCalculus<K> zero_calculus(const FinAlgebra<K>& A, std::size_t truncation = 1) {
  GradedCalculus<K> O;
  O.A = A;
  O.truncation = truncation;
  O.components.assign(truncation, zero_bimodule<K>(A.dim, A.dim));
  for (std::size_t m = 1; m < truncation; ++m)
    for (std::size_t n = 1; m + n <= truncation; ++n)
      O.products[{m, n}] = {};
  O.d.push_back(Matrix<K>(0, A.dim));
  for (std::size_t n = 1; n < truncation; ++n) O.d.push_back(Matrix<K>(0, 0));
  return O;
}

template <field_scalar K>
Report validate_calculus(const GradedCalculus<K>& O) {
  Report rep;
  const std::size_t D = O.truncation;
  if (D < 1) { rep.add("truncation must be >= 1"); return rep; }
  if (O.components.size() != D) { rep.add("component count differs from truncation"); return rep; }
  rep.merge(validate_algebra(O.A), "algebra");
  for (std::size_t n = 1; n <= D; ++n)
    rep.merge(validate_bimodule(O.A, O.A, O.component(n)), "Omega^" + std::to_string(n));
  if (!rep.ok()) return rep;

  if (O.d.size() != D) { rep.add("differential count differs from truncation"); return rep; }
  for (std::size_t n = 0; n < D; ++n)
    if (O.d[n].rows() != O.dim(n + 1) || O.d[n].cols() != O.dim(n)) {
      rep.add("d_" + std::to_string(n) + " has wrong shape");
      return rep;
    }
  for (std::size_t m = 1; m < D; ++m)
    for (std::size_t n = 1; m + n <= D; ++n) {
      auto it = O.products.find({m, n});
      if (it == O.products.end() || it->second.size() != O.dim(m)) {
        rep.add("product (" + std::to_string(m) + "," + std::to_string(n) + ") missing");
        return rep;
      }
      for (const auto& s : it->second)
        if (s.rows() != O.dim(m + n) || s.cols() != O.dim(n)) {
          rep.add("product (" + std::to_string(m) + "," + std::to_string(n) + ") has wrong shape");
          return rep;
        }
    }

  // d after d vanishes
  for (std::size_t n = 0; n + 2 <= D; ++n)
    if (!(O.d[n + 1] * O.d[n]).is_zero()) rep.add("d_" + std::to_string(n + 1) + " d_" +
                                                  std::to_string(n) + " != 0");

  // graded Leibniz on basis pairs, d(xy) = (dx)y + (-1)^m x(dy)
  for (std::size_t m = 0; m + 1 <= D; ++m)
    for (std::size_t n = 0; m + n + 1 <= D; ++n)
      for (std::size_t i = 0; i < O.dim(m); ++i)
        for (std::size_t j = 0; j < O.dim(n); ++j) {
          const Vec<K> x = unit_vec<K>(O.dim(m), i), y = unit_vec<K>(O.dim(n), j);
          Vec<K> lhs = O.d[m + n].apply(O.mul(m, n, x, y));
          Vec<K> rhs = O.mul(m + 1, n, O.d[m].apply(x), y);
          Vec<K> t = O.mul(m, n + 1, x, O.d[n].apply(y));
          rhs = (m % 2 == 0) ? add_vec(rhs, t) : sub_vec(rhs, t);
          if (lhs != rhs)
            rep.add("Leibniz fails at degrees (" + std::to_string(m) + "," + std::to_string(n) +
                    "), basis (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }

  // associativity across all stored degree triples (degree-0 slots cover
  // A-bilinearity of the products)
  for (std::size_t m = 0; m <= D; ++m)
    for (std::size_t n = 0; m + n <= D; ++n)
      for (std::size_t p = 0; m + n + p <= D; ++p) {
        if (m + n + p == 0) continue;  // plain algebra associativity, checked above
        for (std::size_t i = 0; i < O.dim(m); ++i)
          for (std::size_t j = 0; j < O.dim(n); ++j)
            for (std::size_t l = 0; l < O.dim(p); ++l) {
              const Vec<K> x = unit_vec<K>(O.dim(m), i), y = unit_vec<K>(O.dim(n), j),
                           z = unit_vec<K>(O.dim(p), l);
              if (O.mul(m + n, p, O.mul(m, n, x, y), z) != O.mul(m, n + p, x, O.mul(n, p, y, z)))
                rep.add("associativity fails at degrees (" + std::to_string(m) + "," +
                        std::to_string(n) + "," + std::to_string(p) + "), basis (" +
                        std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")");
            }
      }
  return rep;
}

/// A one-form making the first-order calculus inner: d a = a Xi - Xi a.
template <field_scalar K>
struct InnerForm {
  Vec<K> xi;  // Omega^1 coordinates
};

template <field_scalar K>
Report check_inner_form(const GradedCalculus<K>& O, const InnerForm<K>& form) {
  Report rep;
  const auto& W = O.component(1);
  for (std::size_t s = 0; s < O.A.dim; ++s) {
    const Vec<K> a = O.A.basis_vec(s);
    if (O.d[0].apply(a) != sub_vec(W.left(a, form.xi), W.right(form.xi, a)))
      rep.add("d e_" + std::to_string(s) + " != e_" + std::to_string(s) + " Xi - Xi e_" +
              std::to_string(s));
  }
  return rep;
}

/// Solves a Xi - Xi a = d a for Xi in Omega^1; returns the canonical
/// solution of the affine system, or nothing if the calculus is not inner.
template <field_scalar K>
std::optional<InnerForm<K>> find_inner_form(const GradedCalculus<K>& O) {
  const auto& W = O.component(1);
  const std::size_t w = W.dim, n = O.A.dim;
  Matrix<K> constraints(n * w, w);
  Vec<K> rhs(n * w);
  for (std::size_t s = 0; s < n; ++s) {
    const Matrix<K> lhs = W.left_action[s] - W.right_action[s];
    const Vec<K> da = O.d[0].col(s);
    for (std::size_t r = 0; r < w; ++r) {
      for (std::size_t c = 0; c < w; ++c) constraints(s * w + r, c) = lhs(r, c);
      rhs[s * w + r] = da[r];
    }
  }
  auto sol = solve_affine(constraints, rhs);
  if (!sol.solvable) return std::nullopt;
  return InnerForm<K>{std::move(sol.particular)};
}

/// A separability element iota in A (x) A: a iota = iota a and mu(iota) = 1.
template <field_scalar K>
struct SeparabilityElement {
  Vec<K> iota;  // A (x) A coordinates, (i, j) -> i * dim A + j
};

template <field_scalar K>
Report check_separability(const FinAlgebra<K>& A, const SeparabilityElement<K>& e) {
  Report rep;
  const std::size_t n = A.dim;
  const Matrix<K> id = Matrix<K>::identity(n);
  for (std::size_t s = 0; s < n; ++s) {
    const Matrix<K> left = kron(A.left_mult_matrix(A.basis_vec(s)), id);
    const Matrix<K> right = kron(id, A.right_mult_matrix(A.basis_vec(s)));
    if (left.apply(e.iota) != right.apply(e.iota))
      rep.add("iota does not commute with e_" + std::to_string(s));
  }
  if (A.mult_map().apply(e.iota) != A.unit) rep.add("mu(iota) != 1");
  return rep;
}

template <field_scalar K>
std::optional<SeparabilityElement<K>> find_separability(const FinAlgebra<K>& A) {
  const std::size_t n = A.dim, full = n * n;
  const Matrix<K> id = Matrix<K>::identity(n);
  Matrix<K> constraints(n * full + n, full);
  Vec<K> rhs(n * full + n);
  std::size_t row = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const Matrix<K> diff =
        kron(A.left_mult_matrix(A.basis_vec(s)), id) - kron(id, A.right_mult_matrix(A.basis_vec(s)));
    for (std::size_t r = 0; r < full; ++r, ++row)
      for (std::size_t c = 0; c < full; ++c) constraints(row, c) = diff(r, c);
  }
  const Matrix<K> mu = A.mult_map();
  for (std::size_t r = 0; r < n; ++r, ++row) {
    for (std::size_t c = 0; c < full; ++c) constraints(row, c) = mu(r, c);
    rhs[row] = A.unit[r];
  }
  auto sol = solve_affine(constraints, rhs);
  if (!sol.solvable) return std::nullopt;
  return SeparabilityElement<K>{std::move(sol.particular)};
}

/// H^n(A) = ker d_n / im d_{n-1}, with H^0 = ker d_0.
template <field_scalar K>
Subquotient<K> cohomology(const GradedCalculus<K>& O, std::size_t n) {
  if (n == 0) return subquotient(kernel(O.d[0]), Subspace<K>(O.A.dim));
  if (n + 1 > O.truncation) throw MathRefusal("cohomology degree beyond truncation");
  return subquotient(kernel(O.d[n]), column_space(O.d[n - 1]));
}

}  // namespace homcalc

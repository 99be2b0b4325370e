#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "homcalc/calculus.hpp"
#include "homcalc/homspace.hpp"

namespace homcalc {

/// The tower Hom_A(Omega^n, M) for n = 1..D, each with the right A-action
/// (f a)(w) = f(a w). Hom_A(A, M) is identified with M throughout (the
/// identification is evaluation at 1) and never materialized.
template <field_scalar K>
std::vector<HomSpace<K>> hom_tower(const GradedCalculus<K>& O, const RightModule<K>& M) {
  std::vector<HomSpace<K>> tower;
  tower.reserve(O.truncation);
  for (std::size_t n = 1; n <= O.truncation; ++n) tower.push_back(hom_space(O.component(n), M));
  return tower;
}

/// (f w)(w') := f(w w') for f: Omega^{n+m} -> M, w in Omega^n; the result
/// maps Omega^m -> M.
template <field_scalar K>
Matrix<K> form_times(const GradedCalculus<K>& O, const Matrix<K>& f, std::size_t n,
                     const Vec<K>& w, std::size_t m) {
  return f * O.left_mul_matrix(n, w, m);
}

/// A hom-connection (M, nabla0): nabla0 maps Hom_A(Omega^1, M) -> M and
/// satisfies nabla0(f a) = nabla0(f) a + f(d a).
template <field_scalar K>
struct HomConnection {
  GradedCalculus<K> calculus;
  RightModule<K> module;
  std::vector<HomSpace<K>> hom;  // hom[n-1] = Hom_A(Omega^n, M)
  Matrix<K> nabla0;

  const HomSpace<K>& hom_at(std::size_t degree) const {
    if (degree < 1 || degree > hom.size()) throw MathRefusal("hom space degree beyond truncation");
    return hom[degree - 1];
  }
};

/// The defining Leibniz constraint, checked on every (hom basis, algebra
/// basis) pair.
template <field_scalar K>
Report check_hom_connection(const HomConnection<K>& conn) {
  Report rep;
  const auto& O = conn.calculus;
  const auto& H1 = conn.hom_at(1);
  if (conn.nabla0.rows() != conn.module.dim || conn.nabla0.cols() != H1.dim()) {
    rep.add("nabla0 has wrong shape");
    return rep;
  }
  for (std::size_t s = 0; s < O.A.dim; ++s) {
    const Vec<K> da = O.d[0].col(s);
    for (std::size_t t = 0; t < H1.dim(); ++t) {
      const Vec<K> lhs = conn.nabla0.apply(H1.right_action[s].col(t));
      Vec<K> rhs = conn.module.action[s].apply(conn.nabla0.col(t));
      rhs = add_vec(rhs, H1.basis[t].apply(da));
      if (lhs != rhs)
        rep.add("Leibniz fails at hom basis " + std::to_string(t) + ", algebra basis " +
                std::to_string(s));
    }
  }
  return rep;
}

/// The full affine space of hom-connections on (O, M): unknowns are the
/// entries of nabla0 (row-major), the homogeneous part is the space of
/// right-A-linear maps Hom_A(Omega^1, M) -> M.
template <field_scalar K>
struct HomConnectionSpace {
  GradedCalculus<K> calculus;
  RightModule<K> module;
  std::vector<HomSpace<K>> hom;
  AffineSolutionSet<K> solutions;

  bool solvable() const { return solutions.solvable; }

  HomConnection<K> canonical() const {
    if (!solvable()) throw MathRefusal("no hom-connection exists for this module");
    return {calculus, module,  hom,
            unflatten(solutions.particular, module.dim, hom.empty() ? 0 : hom[0].dim())};
  }

  HomConnection<K> at(Matrix<K> nabla0) const {
    HomConnection<K> conn{calculus, module, hom, std::move(nabla0)};
    Report rep = check_hom_connection(conn);
    if (!rep.ok()) throw ValidationError("not a hom-connection: " + rep.violations.front());
    return conn;
  }

  bool contains(const Matrix<K>& nabla0) const { return solutions.contains(flatten(nabla0)); }
};

template <field_scalar K>
HomConnectionSpace<K> solve_homconnections(const GradedCalculus<K>& O, const RightModule<K>& M) {
  HomConnectionSpace<K> space{O, M, hom_tower(O, M), {}};
  const auto& H1 = space.hom[0];
  const std::size_t h1 = H1.dim(), dm = M.dim, n = O.A.dim;
  const std::size_t unknowns = dm * h1;
  Matrix<K> constraints(n * h1 * dm, unknowns);
  Vec<K> rhs(n * h1 * dm);
  std::size_t row = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const Vec<K> da = O.d[0].col(s);
    for (std::size_t t = 0; t < h1; ++t) {
      const Vec<K> fa = H1.right_action[s].col(t);  // coordinates of f_t e_s
      const Vec<K> fda = H1.basis[t].apply(da);
      for (std::size_t r = 0; r < dm; ++r, ++row) {
        // N(f_t e_s)[r] - (N(f_t) e_s)[r] = f_t(d e_s)[r]
        for (std::size_t c = 0; c < h1; ++c)
          if (!fa[c].is_zero()) constraints(row, r * h1 + c) += fa[c];
        for (std::size_t u = 0; u < dm; ++u)
          if (!M.action[s](r, u).is_zero()) constraints(row, u * h1 + t) -= M.action[s](r, u);
        rhs[row] = fda[r];
      }
    }
  }
  space.solutions = solve_affine(constraints, rhs);
  return space;
}

/// Hom-connection f |-> f(Xi) attached to an inner first-order calculus.
template <field_scalar K>
HomConnection<K> inner_homconnection(const GradedCalculus<K>& O, const RightModule<K>& M,
                                     const InnerForm<K>& form) {
  {
    Report rep = check_inner_form(O, form);
    if (!rep.ok()) throw ValidationError("not an inner form: " + rep.violations.front());
  }
  HomConnection<K> conn{O, M, hom_tower(O, M), {}};
  const auto& H1 = conn.hom_at(1);
  conn.nabla0 = Matrix<K>(M.dim, H1.dim());
  for (std::size_t t = 0; t < H1.dim(); ++t) conn.nabla0.set_col(t, H1.basis[t].apply(form.xi));
  return conn;
}

/// Matrix of nabla_n: Hom_A(Omega^{n+1}, M) -> Hom_A(Omega^n, M),
/// nabla_n(f)(w) = nabla0(f w) + (-1)^{n+1} f(d w). Degree 0 returns nabla0
/// itself under the Hom_A(A, M) = M identification.
template <field_scalar K>
Matrix<K> extend(const HomConnection<K>& conn, std::size_t n) {
  if (n == 0) return conn.nabla0;
  const auto& O = conn.calculus;
  if (n + 1 > O.truncation) throw MathRefusal("extend degree beyond truncation");
  const auto& Hhi = conn.hom_at(n + 1);
  const auto& H1 = conn.hom_at(1);
  const std::size_t dm = conn.module.dim, dn = O.dim(n);
  Matrix<K> out(conn.hom_at(n).dim(), Hhi.dim());
  const bool plus = (n + 1) % 2 == 0;
  for (std::size_t u = 0; u < Hhi.dim(); ++u) {
    Matrix<K> value(dm, dn);
    for (std::size_t i = 0; i < dn; ++i) {
      const Matrix<K> fw = form_times(O, Hhi.basis[u], n, unit_vec<K>(dn, i), 1);
      Vec<K> v = conn.nabla0.apply(H1.coords(fw));
      const Vec<K> fdw = Hhi.basis[u].apply(O.d[n].col(i));
      v = plus ? add_vec(v, fdw) : sub_vec(v, fdw);
      value.set_col(i, v);
    }
    out.set_col(u, conn.hom_at(n).coords(value));
  }
  return out;
}

/// Curvature F = nabla0 . nabla1: Hom_A(Omega^2, M) -> M. Right A-linearity
/// of the result is verified.
template <field_scalar K>
struct Curvature {
  Matrix<K> F;  // module.dim x dim Hom_A(Omega^2, M)
  bool flat() const { return F.is_zero(); }
};

template <field_scalar K>
Curvature<K> curvature(const HomConnection<K>& conn) {
  if (conn.calculus.truncation < 2) throw MathRefusal("curvature needs truncation >= 2");
  Curvature<K> cur{conn.nabla0 * extend(conn, 1)};
  const auto& H2 = conn.hom_at(2);
  for (std::size_t s = 0; s < conn.calculus.A.dim; ++s)
    internal_check(cur.F * H2.right_action[s] == conn.module.action[s] * cur.F,
                   "curvature is not right A-linear");
  return cur;
}

/// Checks nabla_{n-1} . nabla_n = Hom_A(Omega^{n-1}, F) . Theta_n where
/// Theta_n(f)(w1)(w2) = f(w1 w2).
template <field_scalar K>
Report theta_factorization_check(const HomConnection<K>& conn, std::size_t n) {
  if (n < 1 || n + 1 > conn.calculus.truncation)
    throw MathRefusal("theta factorization degree out of range");
  Report rep;
  const auto& O = conn.calculus;
  const Curvature<K> cur = curvature(conn);
  const Matrix<K> lhs = extend(conn, n - 1) * extend(conn, n);
  const auto& Hhi = conn.hom_at(n + 1);
  const std::size_t dlow = O.dim(n - 1);
  Matrix<K> rhs(lhs.rows(), lhs.cols());
  for (std::size_t u = 0; u < Hhi.dim(); ++u) {
    Matrix<K> value(conn.module.dim, dlow);
    for (std::size_t i = 0; i < dlow; ++i) {
      const Matrix<K> curried = form_times(O, Hhi.basis[u], n - 1, unit_vec<K>(dlow, i), 2);
      value.set_col(i, cur.F.apply(conn.hom_at(2).coords(curried)));
    }
    rhs.set_col(u, n == 1 ? value.apply(O.A.unit) : conn.hom_at(n - 1).coords(value));
  }
  if (lhs != rhs) rep.add("factorization through the curvature fails at degree " + std::to_string(n));
  return rep;
}

/// Leibniz law for the extended maps (checked-as-stated):
/// nabla_n(f w) = nabla_{m+n}(f) w + (-1)^{m+n} f dw for w in Omega^m.
template <field_scalar K>
Report lemma_leibniz_check(const HomConnection<K>& conn, std::size_t m, std::size_t n) {
  if (m < 1 || m + n + 1 > conn.calculus.truncation)
    throw MathRefusal("leibniz check degrees out of range");
  Report rep;
  const auto& O = conn.calculus;
  const auto& Hhi = conn.hom_at(m + n + 1);
  const Matrix<K> lo = extend(conn, n), hi = extend(conn, m + n);
  const bool plus = (m + n) % 2 == 0;
  for (std::size_t u = 0; u < Hhi.dim(); ++u)
    for (std::size_t i = 0; i < O.dim(m); ++i) {
      const Vec<K> w = unit_vec<K>(O.dim(m), i);
      // lhs: nabla_n applied to f w (a vector in M when n = 0, hom
      // coordinates otherwise)
      const Matrix<K> fw = form_times(O, Hhi.basis[u], m, w, n + 1);
      const Vec<K> lhs = lo.apply(conn.hom_at(n + 1).coords(fw));
      // rhs: nabla_{m+n}(f) w + sign f dw
      const Matrix<K> hi_mat = conn.hom_at(m + n).materialize(hi.col(u));
      const Matrix<K> term1 = form_times(O, hi_mat, m, w, n);
      const Matrix<K> fdw = form_times(O, Hhi.basis[u], m + 1, O.d[m].apply(w), n);
      const Matrix<K> rhs_mat = plus ? term1 + fdw : term1 - fdw;
      const Vec<K> rhs = n == 0 ? rhs_mat.apply(O.A.unit) : conn.hom_at(n).coords(rhs_mat);
      if (lhs != rhs)
        rep.add("extended Leibniz fails at (m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                "), basis " + std::to_string(u) + ", form " + std::to_string(i));
    }
  return rep;
}

/// Homology of the chain complex ... -> Hom(Omega^2,M) -> Hom(Omega^1,M) -> M
/// of a flat hom-connection. H_0 = M / im nabla0; H_n = ker nabla_{n-1} / im nabla_n.
template <field_scalar K>
Subquotient<K> homology(const HomConnection<K>& conn, std::size_t n) {
  // flatness is vacuous at truncation 1, where only nabla0 is stored
  if (conn.calculus.truncation >= 2 && !curvature(conn).flat())
    throw MathRefusal("connection is not flat; the boundary maps do not form a complex");
  if (n == 0)
    return subquotient(Subspace<K>::full(conn.module.dim), column_space(conn.nabla0));
  if (n + 1 > conn.calculus.truncation) throw MathRefusal("homology degree beyond truncation");
  const Matrix<K> out = extend(conn, n - 1), in = extend(conn, n);
  internal_check((out * in).is_zero(), "flat connection with non-vanishing composite");
  return subquotient(kernel(out), column_space(in));
}

/// Class of [f . w] in H_{n-m} for a d-closed w in Omega^m and a cycle f of
/// degree n; this is the action of H^m(A) on the connection's homology.
template <field_scalar K>
struct HomologyClass {
  std::size_t degree = 0;
  Vec<K> coords;  // class coordinates in homology(conn, degree)
};

template <field_scalar K>
HomologyClass<K> cohomology_action(const HomConnection<K>& conn, std::size_t m, const Vec<K>& omega,
                                   std::size_t n, const Vec<K>& cycle) {
  const auto& O = conn.calculus;
  if (m > n) throw MathRefusal("cocycle degree exceeds cycle degree");
  if (m >= O.d.size() || omega.size() != O.dim(m) || !is_zero_vec(O.d[m].apply(omega)))
    throw MathRefusal("the form argument is not a d-cocycle");
  if (n >= 1 && !is_zero_vec(extend(conn, n - 1).apply(cycle)))
    throw MathRefusal("the hom argument is not a cycle");
  const std::size_t k = n - m;
  Vec<K> target;  // ambient coordinates for homology degree k: hom
                  // coordinates when k >= 1, a module vector when k = 0
  if (n == 0) {
    target = conn.module.act(cycle, omega);  // module action of a d-constant
  } else {
    const Matrix<K> f_mat = conn.hom_at(n).materialize(cycle);
    if (k == 0)
      target = f_mat.apply(omega);
    else
      target = conn.hom_at(k).coords(form_times(O, f_mat, m, omega, k));
  }
  return HomologyClass<K>{k, homology(conn, k).class_of(target)};
}

/// nabla0^xi : M -> M, m |-> nabla0(w |-> m xi(w)), for xi in the dual
/// bimodule Omega^1* (coordinates in the canonical dual basis).
template <field_scalar K>
Matrix<K> xi_family(const HomConnection<K>& conn, const DualModule<K>& dual, const Vec<K>& xi) {
  const Matrix<K> xi_mat = dual.materialize(xi);  // Omega^1 -> A
  const auto& H1 = conn.hom_at(1);
  const std::size_t dm = conn.module.dim, w = conn.calculus.dim(1);
  Matrix<K> out(dm, dm);
  for (std::size_t j = 0; j < dm; ++j) {
    Matrix<K> map(dm, w);
    for (std::size_t t = 0; t < w; ++t)
      map.set_col(t, conn.module.act(unit_vec<K>(dm, j), xi_mat.col(t)));
    auto coords = H1.try_coords(map);
    if (!coords) throw ValidationError("xi_family: m xi(-) is not right A-linear");
    out.set_col(j, conn.nabla0.apply(*coords));
  }
  return out;
}

/// The two compatibility identities of the xi-family picture:
/// nabla0^{a xi} = nabla0^xi . (right action of a) and
/// nabla0^{xi a} = (action of a) . nabla0^xi + (m |-> m xi(da)).
template <field_scalar K>
Report xi_family_identity_check(const HomConnection<K>& conn, const DualModule<K>& dual) {
  Report rep;
  const auto& O = conn.calculus;
  for (std::size_t t = 0; t < dual.hom.dim(); ++t) {
    const Vec<K> xi = unit_vec<K>(dual.hom.dim(), t);
    const Matrix<K> base = xi_family(conn, dual, xi);
    const Matrix<K> xi_mat = dual.materialize(xi);
    for (std::size_t s = 0; s < O.A.dim; ++s) {
      const Matrix<K> left = xi_family(conn, dual, dual.bimodule.left_action[s].apply(xi));
      if (left != base * conn.module.action[s])
        rep.add("a xi identity fails at xi_" + std::to_string(t) + ", e_" + std::to_string(s));
      const Matrix<K> right = xi_family(conn, dual, dual.bimodule.right_action[s].apply(xi));
      const Vec<K> xi_da = xi_mat.apply(O.d[0].col(s));
      if (right != conn.module.action[s] * base + conn.module.action_matrix(xi_da))
        rep.add("xi a identity fails at xi_" + std::to_string(t) + ", e_" + std::to_string(s));
    }
  }
  return rep;
}

}  // namespace homcalc

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "homcalc/connection.hpp"

namespace homcalc {

/// Map of differential graded algebras theta: Omega A -> Omega B, one
/// matrix per degree up to the common truncation; degree 0 is an algebra
/// map A -> B.
template <field_scalar K>
struct DGAMap {
  GradedCalculus<K> source;  // Omega A
  GradedCalculus<K> target;  // Omega B
  std::vector<Matrix<K>> theta;

  std::size_t degrees() const { return theta.empty() ? 0 : theta.size() - 1; }
};

template <field_scalar K>
DGAMap<K> identity_dga_map(const GradedCalculus<K>& O) {
  DGAMap<K> th{O, O, {}};
  th.theta.push_back(Matrix<K>::identity(O.A.dim));
  for (std::size_t n = 1; n <= O.truncation; ++n) th.theta.push_back(Matrix<K>::identity(O.dim(n)));
  return th;
}

template <field_scalar K>
Report validate_dga_map(const DGAMap<K>& th) {
  Report rep;
  const auto& OA = th.source;
  const auto& OB = th.target;
  const std::size_t top = std::min(OA.truncation, OB.truncation);
  if (th.theta.size() != top + 1) {
    rep.add("theta must have one matrix per degree 0.." + std::to_string(top));
    return rep;
  }
  for (std::size_t n = 0; n <= top; ++n)
    if (th.theta[n].rows() != OB.dim(n) || th.theta[n].cols() != OA.dim(n)) {
      rep.add("theta_" + std::to_string(n) + " has wrong shape");
      return rep;
    }
  if (th.theta[0].apply(OA.A.unit) != OB.A.unit) rep.add("theta_0 does not preserve the unit");
  for (std::size_t m = 0; m <= top; ++m)
    for (std::size_t n = 0; m + n <= top; ++n)
      for (std::size_t i = 0; i < OA.dim(m); ++i)
        for (std::size_t j = 0; j < OA.dim(n); ++j) {
          const Vec<K> lhs = th.theta[m + n].apply(
              OA.mul(m, n, unit_vec<K>(OA.dim(m), i), unit_vec<K>(OA.dim(n), j)));
          const Vec<K> rhs = OB.mul(m, n, th.theta[m].apply(unit_vec<K>(OA.dim(m), i)),
                                    th.theta[n].apply(unit_vec<K>(OA.dim(n), j)));
          if (lhs != rhs)
            rep.add("theta is not multiplicative at degrees (" + std::to_string(m) + "," +
                    std::to_string(n) + ")");
        }
  for (std::size_t n = 0; n + 1 <= top; ++n)
    if (th.theta[n + 1] * OA.d[n] != OB.d[n] * th.theta[n])
      rep.add("theta does not commute with d at degree " + std::to_string(n));
  return rep;
}

/// Hom-connection on Hom_A(B, M) over Omega B induced along a DGA map:
/// nabla0(f)(b) = nabla0(f . l_b . theta) - f(d b). The module_space field
/// keeps the canonical basis of Hom_A(B, M) used for the coordinates.
template <field_scalar K>
struct InducedConnection {
  HomSpace<K> module_space;
  HomConnection<K> connection;
};

template <field_scalar K>
InducedConnection<K> induce_via_dga_map(const DGAMap<K>& th, const HomConnection<K>& conn) {
  {
    Report rep = validate_dga_map(th);
    if (!rep.ok()) throw ValidationError("invalid DGA map: " + rep.violations.front());
  }
  if (th.degrees() < 1) throw MathRefusal("induction needs theta at least in degree 1");
  const auto& OA = th.source;
  const auto& OB = th.target;
  const auto& M = conn.module;
  const FinAlgebra<K>& B = OB.A;

  // B as a right A-module through theta_0, with its left regular action
  std::vector<Matrix<K>> b_right_a;
  b_right_a.reserve(OA.A.dim);
  for (std::size_t s = 0; s < OA.A.dim; ++s)
    b_right_a.push_back(B.right_mult_matrix(th.theta[0].col(s)));
  InducedConnection<K> out;
  out.module_space = hom_space(B.dim, b_right_a, M, &B.left_mult);
  RightModule<K> mprime{out.module_space.dim(), out.module_space.right_action};

  HomConnection<K> induced{OB, mprime, hom_tower(OB, mprime), {}};
  const auto& H1B = induced.hom_at(1);
  const auto& H1A = conn.hom_at(1);
  induced.nabla0 = Matrix<K>(mprime.dim, H1B.dim());
  const auto& omega1b = OB.component(1);
  for (std::size_t u = 0; u < H1B.dim(); ++u) {
    // f(w) = F(w)(1_B), a right-A-linear map Omega^1 B -> M
    Matrix<K> f(M.dim, omega1b.dim);
    for (std::size_t i = 0; i < omega1b.dim; ++i)
      f.set_col(i, out.module_space.materialize(H1B.basis[u].col(i)).apply(B.unit));
    Matrix<K> value(M.dim, B.dim);
    for (std::size_t r = 0; r < B.dim; ++r) {
      const Matrix<K> flbtheta = f * omega1b.left_action[r] * th.theta[1];
      Vec<K> v = conn.nabla0.apply(H1A.coords(flbtheta));
      value.set_col(r, sub_vec(v, f.apply(OB.d[0].col(r))));
    }
    induced.nabla0.set_col(u, out.module_space.coords(value));
  }
  out.connection = std::move(induced);
  return out;
}

/// A (B, A)-bimodule E with a left connection E -> Omega^1 B (x)_B E and a
/// twist sigma: E (x)_A Omega^1 A -> Omega^1 B (x)_B E. The target tensor
/// product uses the canonical quotient coordinates of
/// tensor_over_algebra(Omega^1 B, E); sigma is stored on plain-tensor
/// coordinates of E (x) Omega^1 A and must kill the (x)_A relations.
template <field_scalar K>
struct DifferentiableBimodule {
  GradedCalculus<K> forms;  // Omega B: where the induced connection lives
  GradedCalculus<K> base;   // Omega A: where the input hom-connection lives
  Bimodule<K> E;            // left action over forms.A, right action over base.A
  Matrix<K> nabla_up;       // dim T x dim E
  Matrix<K> sigma;          // dim T x (dim E * dim Omega^1 A)

  TensorOverAlgebra<K> target_tensor() const {
    return tensor_over_algebra(forms.component(1).dim, forms.component(1).right_action, E.dim,
                               E.left_action);
  }
};

template <field_scalar K>
Report validate_differentiable_bimodule(const DifferentiableBimodule<K>& d) {
  Report rep;
  rep.merge(validate_bimodule(d.forms.A, d.base.A, d.E), "bimodule");
  if (!rep.ok()) return rep;
  const auto t = d.target_tensor();
  const std::size_t de = d.E.dim, w_a = d.base.dim(1), w_b = d.forms.dim(1);
  if (d.nabla_up.rows() != t.dim || d.nabla_up.cols() != de) {
    rep.add("nabla_up has wrong shape");
    return rep;
  }
  if (d.sigma.rows() != t.dim || d.sigma.cols() != de * w_a) {
    rep.add("sigma has wrong shape");
    return rep;
  }

  // sigma factors through E (x)_A Omega^1 A
  for (std::size_t s = 0; s < d.base.A.dim; ++s)
    for (std::size_t i = 0; i < de; ++i)
      for (std::size_t j = 0; j < w_a; ++j) {
        const Vec<K> lhs = d.sigma.apply(
            tensor_vec(d.E.right_action[s].col(i), unit_vec<K>(w_a, j)));
        const Vec<K> rhs = d.sigma.apply(
            tensor_vec(unit_vec<K>(de, i), d.base.component(1).left_action[s].col(j)));
        if (lhs != rhs) rep.add("sigma is not balanced over A");
      }

  // sigma is a (B, A)-bimodule map
  for (std::size_t i = 0; i < de; ++i)
    for (std::size_t j = 0; j < w_a; ++j) {
      const Vec<K> base_val = d.sigma.apply(tensor_vec(unit_vec<K>(de, i), unit_vec<K>(w_a, j)));
      for (std::size_t s = 0; s < d.forms.A.dim; ++s) {
        const Vec<K> lhs = d.sigma.apply(
            tensor_vec(d.E.left_action[s].col(i), unit_vec<K>(w_a, j)));
        const Vec<K> rhs =
            detail::quotient_action_first(t, d.forms.component(1).left_action[s], de)
                .apply(base_val);
        if (lhs != rhs) rep.add("sigma is not left B-linear");
      }
      for (std::size_t s = 0; s < d.base.A.dim; ++s) {
        const Vec<K> lhs = d.sigma.apply(
            tensor_vec(unit_vec<K>(de, i), d.base.component(1).right_action[s].col(j)));
        const Vec<K> rhs = detail::quotient_action_second(t, w_b, d.E.right_action[s]).apply(base_val);
        if (lhs != rhs) rep.add("sigma is not right A-linear");
      }
    }

  // left Leibniz rule: nabla(b e) = d b (x) e + b nabla(e)
  for (std::size_t s = 0; s < d.forms.A.dim; ++s)
    for (std::size_t i = 0; i < de; ++i) {
      const Vec<K> lhs = d.nabla_up.apply(d.E.left_action[s].col(i));
      Vec<K> rhs = t.project(d.forms.d[0].col(s), unit_vec<K>(de, i));
      rhs = add_vec(rhs, detail::quotient_action_first(t, d.forms.component(1).left_action[s], de)
                             .apply(d.nabla_up.col(i)));
      if (lhs != rhs) rep.add("left Leibniz rule fails at (" + std::to_string(s) + "," +
                              std::to_string(i) + ")");
    }

  // compatibility: nabla(e a) = nabla(e) a + sigma(e (x) d a)
  for (std::size_t s = 0; s < d.base.A.dim; ++s)
    for (std::size_t i = 0; i < de; ++i) {
      const Vec<K> lhs = d.nabla_up.apply(d.E.right_action[s].col(i));
      Vec<K> rhs = detail::quotient_action_second(t, w_b, d.E.right_action[s]).apply(d.nabla_up.col(i));
      rhs = add_vec(rhs, d.sigma.apply(tensor_vec(unit_vec<K>(de, i), d.base.d[0].col(s))));
      if (lhs != rhs) rep.add("compatibility with sigma fails at (" + std::to_string(s) + "," +
                              std::to_string(i) + ")");
    }
  return rep;
}

/// Induction along a differentiable bimodule:
/// nabla0^E(f)(e) = nabla0(f . sigma_e) - f(nabla(e)) on Hom_A(E, M).
template <field_scalar K>
InducedConnection<K> induce_via_bimodule(const DifferentiableBimodule<K>& d,
                                         const HomConnection<K>& conn) {
  {
    Report rep = validate_differentiable_bimodule(d);
    if (!rep.ok()) throw ValidationError("invalid differentiable bimodule: " + rep.violations.front());
  }
  const auto& M = conn.module;
  const auto t = d.target_tensor();
  const std::size_t de = d.E.dim, w_a = d.base.dim(1), w_b = d.forms.dim(1);

  InducedConnection<K> out;
  out.module_space = hom_space(de, d.E.right_action, M, &d.E.left_action);
  RightModule<K> mpp{out.module_space.dim(), out.module_space.right_action};
  HomConnection<K> induced{d.forms, mpp, hom_tower(d.forms, mpp), {}};
  const auto& H1B = induced.hom_at(1);
  const auto& H1A = conn.hom_at(1);
  induced.nabla0 = Matrix<K>(mpp.dim, H1B.dim());
  for (std::size_t u = 0; u < H1B.dim(); ++u) {
    // uncurry F into ft: T -> M, w (x) e |-> F(w)(e)
    std::vector<Matrix<K>> leg(w_b);
    for (std::size_t i = 0; i < w_b; ++i) leg[i] = out.module_space.materialize(H1B.basis[u].col(i));
    Matrix<K> ft(M.dim, t.dim);
    for (std::size_t r = 0; r < t.dim; ++r) {
      const Vec<K> rep = t.section.col(r);
      Vec<K> v(M.dim);
      for (std::size_t i = 0; i < w_b; ++i)
        for (std::size_t j = 0; j < de; ++j) {
          const K& z = rep[i * de + j];
          if (!z.is_zero()) v = add_vec(v, scale_vec(z, leg[i].col(j)));
        }
      ft.set_col(r, v);
    }
    Matrix<K> value(M.dim, de);
    for (std::size_t e = 0; e < de; ++e) {
      // sigma_e as a matrix Omega^1 A -> T
      Matrix<K> sigma_e(t.dim, w_a);
      for (std::size_t j = 0; j < w_a; ++j)
        sigma_e.set_col(j, d.sigma.apply(tensor_vec(unit_vec<K>(de, e), unit_vec<K>(w_a, j))));
      const Matrix<K> fse = ft * sigma_e;  // right-A-linear Omega^1 A -> M
      Vec<K> v = conn.nabla0.apply(H1A.coords(fse));
      value.set_col(e, sub_vec(v, ft.apply(d.nabla_up.col(e))));
    }
    induced.nabla0.set_col(u, out.module_space.coords(value));
  }
  out.connection = std::move(induced);
  return out;
}

/// Left connection on an (A, B)-bimodule: nabla: M0 -> Omega^1 A (x)_A M0
/// with nabla(a m) = d a (x) m + a nabla(m) and right B-linearity.
template <field_scalar K>
struct LeftConnection {
  GradedCalculus<K> calculus;  // Omega A
  FinAlgebra<K> B;
  Bimodule<K> M0;      // left action over calculus.A, right action over B
  Matrix<K> nabla_up;  // dim U x dim M0, U = Omega^1 A (x)_A M0

  TensorOverAlgebra<K> tensor_with(std::size_t degree) const {
    return tensor_over_algebra(calculus.component(degree).dim,
                               calculus.component(degree).right_action, M0.dim, M0.left_action);
  }
};

template <field_scalar K>
Report validate_left_connection(const LeftConnection<K>& l) {
  Report rep;
  rep.merge(validate_bimodule(l.calculus.A, l.B, l.M0), "bimodule");
  if (!rep.ok()) return rep;
  const auto u = l.tensor_with(1);
  if (l.nabla_up.rows() != u.dim || l.nabla_up.cols() != l.M0.dim) {
    rep.add("nabla_up has wrong shape");
    return rep;
  }
  for (std::size_t s = 0; s < l.calculus.A.dim; ++s)
    for (std::size_t j = 0; j < l.M0.dim; ++j) {
      const Vec<K> lhs = l.nabla_up.apply(l.M0.left_action[s].col(j));
      Vec<K> rhs = u.project(l.calculus.d[0].col(s), unit_vec<K>(l.M0.dim, j));
      rhs = add_vec(rhs,
                    detail::quotient_action_first(u, l.calculus.component(1).left_action[s], l.M0.dim)
                        .apply(l.nabla_up.col(j)));
      if (lhs != rhs) rep.add("left Leibniz rule fails");
    }
  for (std::size_t s = 0; s < l.B.dim; ++s)
    if (l.nabla_up * l.M0.right_action[s] !=
        detail::quotient_action_second(u, l.calculus.dim(1), l.M0.right_action[s]) * l.nabla_up)
      rep.add("nabla_up is not right B-linear");
  return rep;
}

/// The graded-Leibniz extension nabla^n: Omega^n (x)_A M0 -> Omega^{n+1} (x)_A M0,
/// w (x) m |-> d w (x) m + (-1)^n w nabla(m).
template <field_scalar K>
Matrix<K> left_connection_higher(const LeftConnection<K>& l, std::size_t n) {
  if (n == 0) return l.nabla_up;
  const auto& O = l.calculus;
  if (n + 1 > O.truncation) throw MathRefusal("left connection degree beyond truncation");
  const auto un = l.tensor_with(n), u1 = l.tensor_with(1), up = l.tensor_with(n + 1);
  const std::size_t dm = l.M0.dim, dn = O.dim(n);
  Matrix<K> out(up.dim, un.dim);
  const bool plus = n % 2 == 0;
  for (std::size_t tcol = 0; tcol < un.dim; ++tcol) {
    const Vec<K> rep = un.section.col(tcol);
    Vec<K> acc(up.dim);
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) {
        const K& z = rep[i * dm + j];
        if (z.is_zero()) continue;
        Vec<K> term = up.project(O.d[n].col(i), unit_vec<K>(dm, j));
        // w nabla(m): lift nabla(m) to plain tensors and multiply the forms
        const Vec<K> lifted = u1.section.apply(l.nabla_up.col(j));
        Vec<K> term2(up.dim);
        for (std::size_t k = 0; k < O.dim(1); ++k)
          for (std::size_t lidx = 0; lidx < dm; ++lidx) {
            const K& c = lifted[k * dm + lidx];
            if (!c.is_zero())
              term2 = add_vec(term2, scale_vec(c, up.project(O.mul(n, 1, unit_vec<K>(dn, i),
                                                                   unit_vec<K>(O.dim(1), k)),
                                                             unit_vec<K>(dm, lidx))));
          }
        term = plus ? add_vec(term, term2) : sub_vec(term, term2);
        acc = add_vec(acc, scale_vec(z, term));
      }
    out.set_col(tcol, acc);
  }
  return out;
}

/// Dualization of a left connection: nabla0 = -Hom_B(nabla, N) on Hom_B(M0, N),
/// a hom-connection over Omega A.
template <field_scalar K>
InducedConnection<K> dualize_left_connection(const LeftConnection<K>& l, const RightModule<K>& N) {
  {
    Report rep = validate_left_connection(l);
    if (!rep.ok()) throw ValidationError("invalid left connection: " + rep.violations.front());
  }
  const auto u = l.tensor_with(1);
  InducedConnection<K> out;
  out.module_space = hom_space(l.M0.dim, l.M0.right_action, N, &l.M0.left_action);
  RightModule<K> mttt{out.module_space.dim(), out.module_space.right_action};
  HomConnection<K> induced{l.calculus, mttt, hom_tower(l.calculus, mttt), {}};
  const auto& H1 = induced.hom_at(1);
  induced.nabla0 = Matrix<K>(mttt.dim, H1.dim());
  const std::size_t w = l.calculus.dim(1), dm = l.M0.dim;
  for (std::size_t t = 0; t < H1.dim(); ++t) {
    // uncurry F into U -> N and precompose with nabla_up, then negate
    std::vector<Matrix<K>> leg(w);
    for (std::size_t i = 0; i < w; ++i) leg[i] = out.module_space.materialize(H1.basis[t].col(i));
    Matrix<K> ft(N.dim, u.dim);
    for (std::size_t r = 0; r < u.dim; ++r) {
      const Vec<K> rep = u.section.col(r);
      Vec<K> v(N.dim);
      for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < dm; ++j) {
          const K& z = rep[i * dm + j];
          if (!z.is_zero()) v = add_vec(v, scale_vec(z, leg[i].col(j)));
        }
      ft.set_col(r, v);
    }
    induced.nabla0.set_col(t, out.module_space.coords(-(ft * l.nabla_up)));
  }
  out.connection = std::move(induced);
  return out;
}

/// Identities tying the dualized hom-connection to the left connection:
/// nabla_n = (-1)^{n+1} Hom_B(nabla^n, N) for every stored degree, the two
/// curvatures satisfy F = -Hom_B(Fbar, N), and flatness transfers.
template <field_scalar K>
Report left_connection_curvature(const LeftConnection<K>& l, const RightModule<K>& N) {
  Report rep;
  auto dual = dualize_left_connection(l, N);
  const auto& conn = dual.connection;
  const auto& O = l.calculus;
  if (O.truncation < 2) throw MathRefusal("curvature transport needs truncation >= 2");

  // hom spaces Hom_B(Omega^n (x) M0, N) and the uncurrying identifications
  std::vector<TensorOverAlgebra<K>> u(O.truncation + 1);
  std::vector<HomSpace<K>> w(O.truncation + 1);
  std::vector<Matrix<K>> phi(O.truncation + 1);  // Hom_A(Omega^n, Hom_B(M0,N)) -> W_n
  for (std::size_t n = 1; n <= O.truncation; ++n) {
    u[n] = l.tensor_with(n);
    std::vector<Matrix<K>> right_b;
    right_b.reserve(l.B.dim);
    for (std::size_t s = 0; s < l.B.dim; ++s)
      right_b.push_back(detail::quotient_action_second(u[n], O.dim(n), l.M0.right_action[s]));
    w[n] = hom_space(u[n].dim, right_b, N);
    const auto& Hn = conn.hom_at(n);
    phi[n] = Matrix<K>(w[n].dim(), Hn.dim());
    for (std::size_t t = 0; t < Hn.dim(); ++t) {
      Matrix<K> ft(N.dim, u[n].dim);
      for (std::size_t r = 0; r < u[n].dim; ++r) {
        const Vec<K> lift = u[n].section.col(r);
        Vec<K> v(N.dim);
        for (std::size_t i = 0; i < O.dim(n); ++i)
          for (std::size_t j = 0; j < l.M0.dim; ++j) {
            const K& z = lift[i * l.M0.dim + j];
            if (!z.is_zero())
              v = add_vec(v, scale_vec(z, dual.module_space.materialize(Hn.basis[t].col(i)).col(j)));
          }
        ft.set_col(r, v);
      }
      phi[n].set_col(t, w[n].coords(ft));
    }
    internal_check(w[n].dim() == Hn.dim(), "hom-tensor identification dimension mismatch");
  }

  // nabla_n = (-1)^{n+1} Hom_B(nabla^n, N) as matrices W_{n+1} -> W_n
  for (std::size_t n = 1; n + 1 <= O.truncation; ++n) {
    const Matrix<K> up = left_connection_higher(l, n);  // U_n -> U_{n+1}
    Matrix<K> transport(w[n].dim(), w[n + 1].dim());
    for (std::size_t t = 0; t < w[n + 1].dim(); ++t)
      transport.set_col(t, w[n].coords(w[n + 1].basis[t] * up));
    const Matrix<K> lhs = phi[n] * extend(conn, n);
    Matrix<K> rhs = transport * phi[n + 1];
    if (n % 2 == 0) rhs = -rhs;  // (-1)^{n+1}
    if (lhs != rhs) rep.add("transport identity fails at degree " + std::to_string(n));
  }

  // F = -Hom_B(Fbar, N)
  const Matrix<K> fbar = left_connection_higher(l, 1) * l.nabla_up;  // M0 -> U_2
  const Curvature<K> cur = curvature(conn);
  for (std::size_t t = 0; t < conn.hom_at(2).dim(); ++t) {
    const Matrix<K> lhs = dual.module_space.materialize(cur.F.col(t));
    const Matrix<K> rhs = -(w[2].materialize(phi[2].col(t)) * fbar);
    if (lhs != rhs) rep.add("curvature transport fails at hom basis " + std::to_string(t));
  }
  if (fbar.is_zero() && !cur.flat()) rep.add("flat left connection produced a non-flat dual");
  return rep;
}

/// Quotient of a calculus by the differential graded ideal generated by a
/// sub-bimodule of Omega^1, together with the projection DGA map.
template <field_scalar K>
struct QuotientCalculus {
  GradedCalculus<K> calculus;
  DGAMap<K> map;
};

template <field_scalar K>
QuotientCalculus<K> quotient_calculus(const GradedCalculus<K>& O, const Subspace<K>& sub) {
  if (sub.ambient() != O.dim(1)) throw ValidationError("quotient_calculus: subspace not in Omega^1");
  const std::size_t D = O.truncation, n_a = O.A.dim;

  // bimodule closure of a span
  auto closure = [&](std::size_t degree, Subspace<K> s) {
    for (;;) {
      Matrix<K> span = s.basis();
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t a = 0; a < n_a; ++a) {
          span.append_row(O.component(degree).left_action[a].apply(s.basis_vector(i)));
          span.append_row(O.component(degree).right_action[a].apply(s.basis_vector(i)));
        }
      Subspace<K> bigger = Subspace<K>::from_span(s.ambient(), std::move(span));
      if (bigger.dim() == s.dim()) return s;
      s = std::move(bigger);
    }
  };

  std::vector<Subspace<K>> ideal(D + 1);
  ideal[1] = closure(1, sub);
  for (std::size_t n = 2; n <= D; ++n) {
    Matrix<K> span(0, O.dim(n));
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t j = n - i;
      for (std::size_t t = 0; t < ideal[i].dim(); ++t)
        for (std::size_t b = 0; b < O.dim(j); ++b) {
          span.append_row(O.mul(i, j, ideal[i].basis_vector(t), unit_vec<K>(O.dim(j), b)));
          span.append_row(O.mul(j, i, unit_vec<K>(O.dim(j), b), ideal[i].basis_vector(t)));
        }
    }
    for (std::size_t t = 0; t < ideal[n - 1].dim(); ++t)
      span.append_row(O.d[n - 1].apply(ideal[n - 1].basis_vector(t)));
    ideal[n] = closure(n, Subspace<K>::from_span(O.dim(n), std::move(span)));
  }

  std::vector<QuotientMaps<K>> q(D + 1);
  for (std::size_t n = 1; n <= D; ++n) q[n] = quotient(O.dim(n), ideal[n]);

  QuotientCalculus<K> out;
  out.calculus.A = O.A;
  out.calculus.truncation = D;
  for (std::size_t n = 1; n <= D; ++n) {
    Bimodule<K> comp;
    comp.dim = q[n].dim;
    for (std::size_t s = 0; s < n_a; ++s) {
      comp.left_action.push_back(q[n].projection * O.component(n).left_action[s] * q[n].section);
      comp.right_action.push_back(q[n].projection * O.component(n).right_action[s] * q[n].section);
    }
    out.calculus.components.push_back(std::move(comp));
  }
  for (std::size_t m = 1; m < D; ++m)
    for (std::size_t n = 1; m + n <= D; ++n) {
      std::vector<Matrix<K>> slices;
      slices.reserve(q[m].dim);
      for (std::size_t i = 0; i < q[m].dim; ++i)
        slices.push_back(q[m + n].projection * O.left_mul_matrix(m, q[m].section.col(i), n) *
                         q[n].section);
      out.calculus.products[{m, n}] = std::move(slices);
    }
  out.calculus.d.push_back(q[1].projection * O.d[0]);
  for (std::size_t n = 1; n < D; ++n)
    out.calculus.d.push_back(q[n + 1].projection * O.d[n] * q[n].section);

  {
    Report rep = validate_calculus(out.calculus);
    if (!rep.ok())
      throw InternalError("quotient by a differential ideal failed validation: " +
                          rep.violations.front());
  }

  out.map.source = O;
  out.map.target = out.calculus;
  out.map.theta.push_back(Matrix<K>::identity(n_a));
  for (std::size_t n = 1; n <= D; ++n) out.map.theta.push_back(q[n].projection);
  {
    Report rep = validate_dga_map(out.map);
    internal_check(rep.ok(), "quotient projection is not a DGA map");
  }
  return out;
}

/// All the curvature-transfer identities along a DGA map: the displayed
/// action formula for nabla1 of the induced connection, compatibility with
/// theta, and F^theta(f)(b) = F(f b . theta); flat input forces flat output.
template <field_scalar K>
Report curvature_transfer_check(const DGAMap<K>& th, const HomConnection<K>& conn) {
  Report rep;
  const auto& OA = th.source;
  const auto& OB = th.target;
  if (OA.truncation < 2 || OB.truncation < 2 || th.degrees() < 2)
    throw MathRefusal("curvature transfer needs both calculi and theta up to degree 2");
  const auto& M = conn.module;
  auto induced = induce_via_dga_map(th, conn);
  const auto& mspace = induced.module_space;
  const FinAlgebra<K>& B = OB.A;

  // Hom_A(Omega^n B, M) with the A-action through theta_0, plus the
  // curried identification Psi_n into Hom_B(Omega^n B, Hom_A(B, M)).
  auto a_linear_forms = [&](std::size_t n) {
    std::vector<Matrix<K>> right_a;
    right_a.reserve(OA.A.dim);
    for (std::size_t s = 0; s < OA.A.dim; ++s)
      right_a.push_back(OB.component(n).right_matrix(th.theta[0].col(s)));
    return hom_space(OB.dim(n), right_a, M);
  };
  auto curry = [&](std::size_t n, const Matrix<K>& g) {
    const auto& comp = OB.component(n);
    Matrix<K> out(mspace.dim(), comp.dim);
    for (std::size_t i = 0; i < comp.dim; ++i) {
      Matrix<K> val(M.dim, B.dim);
      for (std::size_t r = 0; r < B.dim; ++r)
        val.set_col(r, g.apply(comp.right_action[r].col(i)));
      out.set_col(i, mspace.coords(val));
    }
    return out;
  };
  auto uncurry = [&](std::size_t n, const Matrix<K>& f) {
    // evaluate at 1_B: Hom_B(Omega^n B, Hom_A(B, M)) -> Hom_A(Omega^n B, M)
    const auto& comp = OB.component(n);
    Matrix<K> out(M.dim, comp.dim);
    for (std::size_t i = 0; i < comp.dim; ++i)
      out.set_col(i, mspace.materialize(f.col(i)).apply(B.unit));
    return out;
  };

  const auto g2 = a_linear_forms(2);
  const auto& H1A = conn.hom_at(1);
  const auto& H2A = conn.hom_at(2);
  const Curvature<K> f_orig = curvature(conn);
  const Curvature<K> f_ind = curvature(induced.connection);
  const Matrix<K> nabla1_ind = extend(induced.connection, 1);
  const Matrix<K> nabla1_orig = extend(conn, 1);

  for (std::size_t t = 0; t < g2.dim(); ++t) {
    const Matrix<K>& g = g2.basis[t];
    const Vec<K> curried = induced.connection.hom_at(2).coords(curry(2, g));
    // the induced nabla1, pulled back to Hom_A(Omega^1 B, M)
    const Matrix<K> n1f = uncurry(1, induced.connection.hom_at(1).materialize(
                                         nabla1_ind.apply(curried)));

    // (eq one) nabla1^theta(f)(w) = nabla0(f w . theta) + f(d w)
    for (std::size_t i = 0; i < OB.dim(1); ++i) {
      const Matrix<K> fw_theta = g * OB.left_mul_matrix(1, unit_vec<K>(OB.dim(1), i), 1) * th.theta[1];
      Vec<K> rhs = conn.nabla0.apply(H1A.coords(fw_theta));
      rhs = add_vec(rhs, g.apply(OB.d[1].col(i)));
      if (n1f.col(i) != rhs)
        rep.add("nabla1 action formula fails at form basis " + std::to_string(t) +
                ", one-form " + std::to_string(i));
    }

    // (eq two) nabla1^theta(f) . theta = nabla1(f . theta)
    const Matrix<K> lhs2 = n1f * th.theta[1];
    const Matrix<K> rhs2 =
        H1A.materialize(nabla1_orig.apply(H2A.coords(g * th.theta[2])));
    if (lhs2 != rhs2) rep.add("compatibility with theta fails at form basis " + std::to_string(t));

    // F^theta(f)(b) = F(f b . theta)
    const Vec<K> ftheta_val = f_ind.F.apply(curried);  // in Hom_A(B, M) coordinates
    const Matrix<K> ftheta_mat = mspace.materialize(ftheta_val);
    for (std::size_t r = 0; r < B.dim; ++r) {
      const Matrix<K> fb_theta = g * OB.component(2).left_action[r] * th.theta[2];
      const Vec<K> rhs = f_orig.F.apply(H2A.coords(fb_theta));
      if (ftheta_mat.col(r) != rhs)
        rep.add("curvature transfer fails at form basis " + std::to_string(t) + ", algebra basis " +
                std::to_string(r));
    }
  }
  if (f_orig.flat() && !f_ind.flat()) rep.add("flat input induced a non-flat connection");
  return rep;
}

}  // namespace homcalc

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "homcalc/connection.hpp"
#include "homcalc/coring.hpp"

namespace homcalc {

/// Coalgebra over k: coproduct into plain tensor coordinates
/// (i, j) -> i * dim + j, counit as a row.
template <field_scalar K>
struct Coalgebra {
  std::size_t dim = 0;
  Matrix<K> coproduct;  // dim^2 x dim
  Matrix<K> counit;     // 1 x dim
};

template <field_scalar K>
Report validate_coalgebra(const Coalgebra<K>& C) {
  Report rep;
  const std::size_t n = C.dim;
  if (C.coproduct.rows() != n * n || C.coproduct.cols() != n || C.counit.rows() != 1 ||
      C.counit.cols() != n) {
    rep.add("coalgebra maps have wrong shape");
    return rep;
  }
  const Matrix<K> id = Matrix<K>::identity(n);
  if (kron(C.coproduct, id) * C.coproduct != kron(id, C.coproduct) * C.coproduct)
    rep.add("coproduct is not coassociative");
  if (kron(C.counit, id) * C.coproduct != id) rep.add("left counit law fails");
  if (kron(id, C.counit) * C.coproduct != id) rep.add("right counit law fails");
  return rep;
}

/// The dual coalgebra C = A^*: coproduct transposes multiplication,
/// counit transposes the unit.
template <field_scalar K>
Coalgebra<K> dual_coalgebra(const FinAlgebra<K>& A) {
  Coalgebra<K> C;
  C.dim = A.dim;
  C.coproduct = A.mult_map().transpose();
  C.counit = Matrix<K>(1, A.dim);
  for (std::size_t s = 0; s < A.dim; ++s) C.counit(0, s) = A.unit[s];
  return C;
}

/// Everything the comodule picture needs: L = (Omega^1)^* as an A-bimodule
/// and C-bicomodule, the coderivation lambda = d^T, the coaction on M, the
/// cotensor product L box_C M, and the evaluation isomorphism Upsilon onto
/// Hom_A(Omega^1, M).
///
/// Coordinate conventions: C (x) L index (s, i) -> s * w + i; L (x) C index
/// (i, s) -> i * n + s; L (x) M index (i, j) -> i * dM + j.
template <field_scalar K>
struct DualityData {
  Coalgebra<K> C;
  Bimodule<K> L;
  Matrix<K> left_coaction;   // (n w) x w
  Matrix<K> right_coaction;  // (w n) x w
  Matrix<K> lambda;          // n x w
  Matrix<K> m_coaction;      // (n dM) x dM
  Subspace<K> cotensor;      // subspace of K^{w dM}
  HomSpace<K> h1;            // Hom_A(Omega^1, M)
  Matrix<K> upsilon;         // h1 coordinates x cotensor coordinates

  /// The raw evaluation map on all of L (x) M, as a matrix Omega^1 -> M.
  Matrix<K> upsilon_raw(const Vec<K>& z) const {
    const std::size_t w = L.dim, dm = m_coaction.cols();
    Matrix<K> u(dm, w);
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < dm; ++j) u(j, i) = z[i * dm + j];
    return u;
  }
};

template <field_scalar K>
DualityData<K> build_duality_data(const GradedCalculus<K>& O, const RightModule<K>& M) {
  const auto& omega1 = O.component(1);
  const std::size_t w = omega1.dim, n = O.A.dim, dm = M.dim;
  DualityData<K> data;
  data.C = dual_coalgebra(O.A);

  // (a l b)(v) = l(b v a)
  data.L.dim = w;
  for (std::size_t s = 0; s < n; ++s) {
    data.L.left_action.push_back(omega1.right_action[s].transpose());
    data.L.right_action.push_back(omega1.left_action[s].transpose());
  }

  data.left_coaction = Matrix<K>(n * w, w);
  data.right_coaction = Matrix<K>(w * n, w);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j) {
        data.left_coaction(s * w + i, j) = data.L.right_action[s](i, j);
        data.right_coaction(i * n + s, j) = data.L.left_action[s](i, j);
      }

  data.lambda = O.d[0].transpose();

  data.m_coaction = Matrix<K>(n * dm, dm);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t r = 0; r < dm; ++r)
      for (std::size_t j = 0; j < dm; ++j) data.m_coaction(s * dm + r, j) = M.action[s](r, j);

  // cotensor: equalize the two maps L (x) M -> L (x) C (x) M
  const Matrix<K> map1 = kron(data.right_coaction, Matrix<K>::identity(dm));
  const Matrix<K> map2 = kron(Matrix<K>::identity(w), data.m_coaction);
  data.cotensor = kernel(map1 - map2);

  data.h1 = hom_space(omega1, M);
  data.upsilon = Matrix<K>(data.h1.dim(), data.cotensor.dim());
  for (std::size_t t = 0; t < data.cotensor.dim(); ++t)
    data.upsilon.set_col(t, data.h1.coords(data.upsilon_raw(data.cotensor.basis_vector(t))));
  internal_check(data.upsilon.rows() == data.upsilon.cols(),
                 "cotensor and hom space have different dimensions");
  internal_check(rank(data.upsilon) == data.upsilon.rows(), "Upsilon is not bijective");
  return data;
}

/// Coaction laws for L and the compatibility Upsilon(z) a = Upsilon(z a),
/// checked exactly.
template <field_scalar K>
Report duality_data_check(const DualityData<K>& data, const GradedCalculus<K>& O) {
  Report rep;
  const std::size_t w = data.L.dim, n = data.C.dim;
  rep.merge(validate_coalgebra(data.C), "dual coalgebra");

  // counitality of the two coactions
  Matrix<K> left_sum(w, w), right_sum(w, w);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j) {
        left_sum(i, j) += data.C.counit(0, s) * data.left_coaction(s * w + i, j);
        right_sum(i, j) += data.C.counit(0, s) * data.right_coaction(i * n + s, j);
      }
  if (left_sum != Matrix<K>::identity(w)) rep.add("left coaction counit law fails");
  if (right_sum != Matrix<K>::identity(w)) rep.add("right coaction counit law fails");

  // coassociativity and the bicomodule compatibility
  const Matrix<K> id_w = Matrix<K>::identity(w), id_n = Matrix<K>::identity(n);
  if (kron(data.C.coproduct, id_w) * data.left_coaction !=
      kron(id_n, data.left_coaction) * data.left_coaction)
    rep.add("left coaction is not coassociative");
  if (kron(data.right_coaction, id_n) * data.right_coaction !=
      kron(id_w, data.C.coproduct) * data.right_coaction)
    rep.add("right coaction is not coassociative");
  if (kron(id_n, data.right_coaction) * data.left_coaction !=
      kron(data.left_coaction, id_n) * data.right_coaction)
    rep.add("the two coactions do not commute");

  // (triangle) as raw matrices Omega^1 -> M
  const std::size_t dm = data.m_coaction.cols();
  for (std::size_t t = 0; t < data.cotensor.dim(); ++t) {
    const Vec<K> z = data.cotensor.basis_vector(t);
    for (std::size_t s = 0; s < n; ++s) {
      const Matrix<K> lhs = data.upsilon_raw(z) * O.component(1).left_action[s];
      const Matrix<K> rhs =
          data.upsilon_raw(kron(data.L.right_action[s], Matrix<K>::identity(dm)).apply(z));
      if (lhs != rhs)
        rep.add("triangle identity fails at basis " + std::to_string(t) + ", e_" +
                std::to_string(s));
    }
  }
  return rep;
}

/// The defining identity of a connection in the comodule picture,
/// evaluated at every a in the basis of A:
/// nbar(z) a = nbar(z a) + sum_i l_i(d a) m_i.
template <field_scalar K>
Report comodule_connection_check(const DualityData<K>& data, const GradedCalculus<K>& O,
                                 const RightModule<K>& M, const Matrix<K>& nbar) {
  Report rep;
  if (nbar.rows() != M.dim || nbar.cols() != data.cotensor.dim()) {
    rep.add("comodule connection has wrong shape");
    return rep;
  }
  for (std::size_t t = 0; t < data.cotensor.dim(); ++t) {
    const Vec<K> z = data.cotensor.basis_vector(t);
    for (std::size_t s = 0; s < O.A.dim; ++s) {
      const Vec<K> lhs = M.action[s].apply(nbar.col(t));
      const Vec<K> za = kron(data.L.right_action[s], Matrix<K>::identity(M.dim)).apply(z);
      Vec<K> rhs = nbar.apply(data.cotensor.coordinates(za));
      rhs = add_vec(rhs, data.upsilon_raw(z).apply(O.d[0].col(s)));
      if (lhs != rhs)
        rep.add("comodule connection identity fails at basis " + std::to_string(t) + ", e_" +
                std::to_string(s));
    }
  }
  return rep;
}

/// nabla0 |-> -nabla0 . Upsilon; the result satisfies the comodule
/// connection identity.
template <field_scalar K>
Matrix<K> homconn_to_comodule_connection(const DualityData<K>& data, const HomConnection<K>& conn) {
  Matrix<K> nbar = -(conn.nabla0 * data.upsilon);
  Report rep = comodule_connection_check(data, conn.calculus, conn.module, nbar);
  internal_check(rep.ok(), "translated connection fails the comodule identity");
  return nbar;
}

/// Inverse direction: nabla0 = -nbar . Upsilon^{-1}. (The two assignments
/// use the same sign so that the round trip is the identity.)
template <field_scalar K>
HomConnection<K> comodule_connection_to_homconn(const DualityData<K>& data,
                                                const GradedCalculus<K>& O, const RightModule<K>& M,
                                                const Matrix<K>& nbar) {
  {
    Report rep = comodule_connection_check(data, O, M, nbar);
    if (!rep.ok())
      throw ValidationError("not a comodule connection: " + rep.violations.front());
  }
  HomConnection<K> conn{O, M, hom_tower(O, M), -(nbar * inverse(data.upsilon))};
  Report rep = check_hom_connection(conn);
  internal_check(rep.ok(), "translated comodule connection fails the Leibniz constraint");
  return conn;
}

/// Contramodule (M, phi): phi maps Hom_A(C, M) -> M, right A-linearly,
/// compatibly with the counit, and (for the flat correspondence) with the
/// coproduct.
template <field_scalar K>
struct Contramodule {
  RightModule<K> M;
  HomSpace<K> hom_cm;  // Hom_A(C, M) with the action (f a)(c) = f(a c)
  Matrix<K> phi;       // dim M x dim hom_cm
};

template <field_scalar K>
Report contramodule_check(const Coring<K>& cor, const Contramodule<K>& cm, bool pentagon) {
  Report rep;
  const auto& M = cm.M;
  const std::size_t dc = cor.C.dim;
  if (cm.phi.rows() != M.dim || cm.phi.cols() != cm.hom_cm.dim()) {
    rep.add("phi has wrong shape");
    return rep;
  }
  for (std::size_t s = 0; s < cor.A.dim; ++s)
    if (cm.phi * cm.hom_cm.right_action[s] != M.action[s] * cm.phi)
      rep.add("phi is not right A-linear at e_" + std::to_string(s));

  // counit triangle: phi(m eps(-)) = m
  for (std::size_t j = 0; j < M.dim; ++j) {
    Matrix<K> f(M.dim, dc);
    for (std::size_t i = 0; i < dc; ++i) f.set_col(i, M.act(unit_vec<K>(M.dim, j), cor.counit.col(i)));
    if (cm.phi.apply(cm.hom_cm.coords(f)) != unit_vec<K>(M.dim, j))
      rep.add("counit triangle fails at module basis " + std::to_string(j));
  }

  if (pentagon) {
    const auto cc = cor.tensor_square();
    std::vector<Matrix<K>> cc_right;
    cc_right.reserve(cor.A.dim);
    for (std::size_t s = 0; s < cor.A.dim; ++s)
      cc_right.push_back(detail::quotient_action_second(cc, dc, cor.C.right_action[s]));
    const auto hcc = hom_space(cc.dim, cc_right, M);
    for (std::size_t t = 0; t < hcc.dim(); ++t) {
      const Matrix<K>& h = hcc.basis[t];
      // route one: phi(h . Delta)
      const Vec<K> route1 = cm.phi.apply(cm.hom_cm.coords(h * cor.coproduct));
      // route two: phi(c |-> phi(h(c (x) -)))
      Matrix<K> inner(M.dim, dc);
      for (std::size_t i = 0; i < dc; ++i) {
        Matrix<K> hc(M.dim, dc);
        for (std::size_t j = 0; j < dc; ++j)
          hc.set_col(j, h.apply(cc.project(unit_vec<K>(dc, i), unit_vec<K>(dc, j))));
        inner.set_col(i, cm.phi.apply(cm.hom_cm.coords(hc)));
      }
      const Vec<K> route2 = cm.phi.apply(cm.hom_cm.coords(inner));
      if (route1 != route2) rep.add("pentagon fails at basis " + std::to_string(t));
    }
  }
  return rep;
}

namespace detail {

/// Insists that the calculus is the one generated by the coring: Omega^1 is
/// ker eps with its canonical basis and d matches the group-like formulas.
template <field_scalar K>
void require_coring_calculus(const Coring<K>& cor, const GradedCalculus<K>& O) {
  if (!cor.grouplike) throw ValidationError("coring has no group-like element");
  const Subspace<K> W = kernel(cor.counit);
  if (O.dim(1) != W.dim()) throw ValidationError("calculus was not generated by this coring");
  const Vec<K>& x = *cor.grouplike;
  for (std::size_t s = 0; s < cor.A.dim; ++s) {
    const Vec<K> da = sub_vec(cor.C.right(x, cor.A.basis_vec(s)),
                              cor.C.left(cor.A.basis_vec(s), x));
    if (O.d[0].col(s) != W.coordinates(da))
      throw ValidationError("calculus differential does not match the coring");
  }
}

}  // namespace detail

/// phi(f) = nabla0(f . j) + f(x) for the calculus generated by the coring.
template <field_scalar K>
Contramodule<K> homconn_to_contramodule(const Coring<K>& cor, const HomConnection<K>& conn) {
  detail::require_coring_calculus(cor, conn.calculus);
  const Subspace<K> W = kernel(cor.counit);
  const Matrix<K> inc = W.inclusion();
  Contramodule<K> cm{conn.module, hom_space(cor.C, conn.module), {}};
  cm.phi = Matrix<K>(conn.module.dim, cm.hom_cm.dim());
  const auto& H1 = conn.hom_at(1);
  const Vec<K>& x = *cor.grouplike;
  for (std::size_t t = 0; t < cm.hom_cm.dim(); ++t) {
    const Matrix<K>& f = cm.hom_cm.basis[t];
    Vec<K> v = conn.nabla0.apply(H1.coords(f * inc));
    cm.phi.set_col(t, add_vec(v, f.apply(x)));
  }
  return cm;
}

/// Inverse direction: nabla0(g) = phi(g . (id - x eps)) for g in
/// Hom_A(Omega^1, M); requires the counit triangle and A-linearity of phi.
template <field_scalar K>
HomConnection<K> contramodule_to_homconn(const Coring<K>& cor, const Contramodule<K>& cm,
                                         const GradedCalculus<K>& O) {
  detail::require_coring_calculus(cor, O);
  {
    Report rep = contramodule_check(cor, cm, /*pentagon=*/false);
    if (!rep.ok()) throw ValidationError("not a contramodule: " + rep.violations.front());
  }
  const Subspace<K> W = kernel(cor.counit);
  const std::size_t dc = cor.C.dim;
  const Vec<K>& x = *cor.grouplike;
  // P: C -> ker eps, c |-> c - x eps(c), written in W coordinates
  Matrix<K> pw(W.dim(), dc);
  for (std::size_t j = 0; j < dc; ++j) {
    Vec<K> col = sub_vec(unit_vec<K>(dc, j), cor.C.right(x, cor.counit.col(j)));
    pw.set_col(j, W.coordinates(col));
  }
  HomConnection<K> conn{O, cm.M, hom_tower(O, cm.M), {}};
  const auto& H1 = conn.hom_at(1);
  conn.nabla0 = Matrix<K>(cm.M.dim, H1.dim());
  for (std::size_t t = 0; t < H1.dim(); ++t)
    conn.nabla0.set_col(t, cm.phi.apply(cm.hom_cm.coords(H1.basis[t] * pw)));
  Report rep = check_hom_connection(conn);
  internal_check(rep.ok(), "contramodule produced a non-connection");
  return conn;
}

}  // namespace homcalc

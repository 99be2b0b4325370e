#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcalc/calculus.hpp"

namespace homcalc {

/// A-coring: an A-bimodule C with a coproduct C -> C (x)_A C, a counit
/// C -> A and (optionally) a group-like element. The coproduct matrix is
/// written in the canonical quotient coordinates produced by
/// tensor_over_algebra(C, C); call tensor_square() to reproduce them.
template <field_scalar K>
struct Coring {
  FinAlgebra<K> A;
  Bimodule<K> C;
  Matrix<K> coproduct;  // dim C(x)_A C  x  dim C
  Matrix<K> counit;     // dim A x dim C
  std::optional<Vec<K>> grouplike;

  TensorOverAlgebra<K> tensor_square() const {
    return tensor_over_algebra(C.dim, C.right_action, C.dim, C.left_action);
  }
};

namespace detail {

template <field_scalar K>
Matrix<K> column_matrix(const Vec<K>& v) {
  Matrix<K> m(v.size(), 1);
  m.set_col(0, v);
  return m;
}

/// Conjugates a first-leg action through a tensor quotient.
template <field_scalar K>
Matrix<K> quotient_action_first(const TensorOverAlgebra<K>& t, const Matrix<K>& act,
                                std::size_t dim_second) {
  return t.factor * kron(act, Matrix<K>::identity(dim_second)) * t.section;
}

template <field_scalar K>
Matrix<K> quotient_action_second(const TensorOverAlgebra<K>& t, std::size_t dim_first,
                                 const Matrix<K>& act) {
  return t.factor * kron(Matrix<K>::identity(dim_first), act) * t.section;
}

/// Right A-actions on X (x)_A Y through the Y leg, in quotient coordinates.
template <field_scalar K>
std::vector<Matrix<K>> make_right_actions(const TensorOverAlgebra<K>& t, const Bimodule<K>& second) {
  std::vector<Matrix<K>> acts;
  acts.reserve(second.right_action.size());
  for (const auto& ra : second.right_action)
    acts.push_back(quotient_action_second(t, t.section.rows() / second.dim, ra));
  return acts;
}

}  // namespace detail

template <field_scalar K>
Report validate_coring(const Coring<K>& cor) {
  Report rep;
  rep.merge(validate_algebra(cor.A), "algebra");
  rep.merge(validate_bimodule(cor.A, cor.A, cor.C), "bimodule");
  if (!rep.ok()) return rep;
  const std::size_t dc = cor.C.dim, n = cor.A.dim;
  if (cor.counit.rows() != n || cor.counit.cols() != dc) {
    rep.add("counit has wrong shape");
    return rep;
  }
  const auto cc = cor.tensor_square();
  if (cor.coproduct.rows() != cc.dim || cor.coproduct.cols() != dc) {
    rep.add("coproduct has wrong shape");
    return rep;
  }

  // coproduct and counit are A-bimodule maps
  for (std::size_t s = 0; s < n; ++s) {
    const auto left_cc = detail::quotient_action_first(cc, cor.C.left_action[s], dc);
    const auto right_cc = detail::quotient_action_second(cc, dc, cor.C.right_action[s]);
    if (cor.coproduct * cor.C.left_action[s] != left_cc * cor.coproduct)
      rep.add("coproduct is not left A-linear at e_" + std::to_string(s));
    if (cor.coproduct * cor.C.right_action[s] != right_cc * cor.coproduct)
      rep.add("coproduct is not right A-linear at e_" + std::to_string(s));
    if (cor.counit * cor.C.left_action[s] != cor.A.left_mult_matrix(cor.A.basis_vec(s)) * cor.counit)
      rep.add("counit is not left A-linear at e_" + std::to_string(s));
    if (cor.counit * cor.C.right_action[s] !=
        cor.A.right_mult_matrix(cor.A.basis_vec(s)) * cor.counit)
      rep.add("counit is not right A-linear at e_" + std::to_string(s));
  }

  // counit laws through representatives: sum eps(c1) c2 = c = sum c1 eps(c2)
  for (std::size_t t = 0; t < dc; ++t) {
    const Vec<K> rep_t = cc.section.apply(cor.coproduct.col(t));
    Vec<K> left_law(dc), right_law(dc);
    for (std::size_t i = 0; i < dc; ++i)
      for (std::size_t j = 0; j < dc; ++j) {
        const K& z = rep_t[i * dc + j];
        if (z.is_zero()) continue;
        left_law = add_vec(left_law,
                           scale_vec(z, cor.C.left(cor.counit.col(i), unit_vec<K>(dc, j))));
        right_law = add_vec(right_law,
                            scale_vec(z, cor.C.right(unit_vec<K>(dc, i), cor.counit.col(j))));
      }
    if (left_law != unit_vec<K>(dc, t)) rep.add("left counit law fails at basis " + std::to_string(t));
    if (right_law != unit_vec<K>(dc, t))
      rep.add("right counit law fails at basis " + std::to_string(t));
  }

  // coassociativity inside C (x)_A C (x)_A C
  {
    const auto c3 = tensor_over_algebra(cc.dim, detail::make_right_actions(cc, cor.C),
                                        dc, cor.C.left_action);
    const Matrix<K> pi3 = c3.factor * kron(cc.factor, Matrix<K>::identity(dc));
    const Matrix<K> lift_cop = cc.section * cor.coproduct;  // C -> C (x) C representatives
    const Matrix<K> route1 = pi3 * kron(lift_cop, Matrix<K>::identity(dc)) * lift_cop;
    const Matrix<K> route2 = pi3 * kron(Matrix<K>::identity(dc), lift_cop) * lift_cop;
    if (route1 != route2) rep.add("coproduct is not coassociative");
  }

  if (cor.grouplike) {
    const Vec<K>& x = *cor.grouplike;
    if (x.size() != dc) rep.add("group-like element has wrong length");
    else {
      if (cor.coproduct.apply(x) != cc.project(x, x)) rep.add("group-like fails Delta(x) = x (x) x");
      if (cor.counit.apply(x) != cor.A.unit) rep.add("group-like fails eps(x) = 1");
    }
  }
  return rep;
}

/// Semi-free differential graded algebra of a coring with group-like x:
/// Omega^1 = ker eps, Omega^{n+1} = Omega^n (x)_A Omega^1, d a = x a - a x,
/// d c = x (x) c - Delta(c) + c (x) x on degree one, then extended by the
/// graded Leibniz rule. The result is validated before it is returned.
template <field_scalar K>
GradedCalculus<K> coring_to_dga(const Coring<K>& cor, std::size_t truncation) {
  if (!cor.grouplike) throw ValidationError("coring_to_dga needs a group-like element");
  if (truncation < 1) throw ValidationError("truncation must be >= 1");
  {
    Report rep = validate_coring(cor);
    if (!rep.ok()) throw ValidationError("invalid coring: " + rep.violations.front());
  }
  const std::size_t n = cor.A.dim, D = truncation;
  const Vec<K>& x = *cor.grouplike;

  GradedCalculus<K> O;
  O.A = cor.A;
  O.truncation = D;

  // Omega^1 = ker eps with the restricted bimodule structure
  const Subspace<K> W = kernel(cor.counit);
  const std::size_t w = W.dim();
  const Matrix<K> inc = W.inclusion();
  Bimodule<K> omega1;
  omega1.dim = w;
  for (std::size_t s = 0; s < n; ++s) {
    Matrix<K> la(w, w), ra(w, w);
    for (std::size_t t = 0; t < w; ++t) {
      la.set_col(t, W.coordinates(cor.C.left_action[s].apply(inc.col(t))));
      ra.set_col(t, W.coordinates(cor.C.right_action[s].apply(inc.col(t))));
    }
    omega1.left_action.push_back(std::move(la));
    omega1.right_action.push_back(std::move(ra));
  }
  O.components.push_back(omega1);

  // higher components with full projections/sections from (Omega^1)^{(x) k}
  std::vector<TensorOverAlgebra<K>> pair;  // pair[n] glues Omega^n (x) Omega^1 -> Omega^{n+1}
  std::vector<Matrix<K>> Pi{Matrix<K>::identity(w)}, Sec{Matrix<K>::identity(w)};
  for (std::size_t deg = 2; deg <= D; ++deg) {
    const Bimodule<K>& prev = O.components[deg - 2];
    auto t = tensor_over_algebra(prev.dim, prev.right_action, w, omega1.left_action);
    Bimodule<K> comp;
    comp.dim = t.dim;
    for (std::size_t s = 0; s < n; ++s) {
      comp.left_action.push_back(detail::quotient_action_first(t, prev.left_action[s], w));
      comp.right_action.push_back(detail::quotient_action_second(t, prev.dim, omega1.right_action[s]));
    }
    Pi.push_back(t.factor * kron(Pi.back(), Matrix<K>::identity(w)));
    Sec.push_back(kron(Sec.back(), Matrix<K>::identity(w)) * t.section);
    O.components.push_back(std::move(comp));
    pair.push_back(std::move(t));
  }

  // concatenation products
  for (std::size_t m = 1; m < D; ++m)
    for (std::size_t nn = 1; m + nn <= D; ++nn) {
      std::vector<Matrix<K>> slices;
      slices.reserve(O.dim(m));
      for (std::size_t i = 0; i < O.dim(m); ++i)
        slices.push_back(Pi[m + nn - 1] *
                         kron(detail::column_matrix(Sec[m - 1].col(i)), Sec[nn - 1]));
      O.products[{m, nn}] = std::move(slices);
    }

  // d_0: a |-> x a - a x, landing in ker eps
  Matrix<K> d0(w, n);
  for (std::size_t s = 0; s < n; ++s)
    d0.set_col(s, W.coordinates(sub_vec(cor.C.right(x, cor.A.basis_vec(s)),
                                        cor.C.left(cor.A.basis_vec(s), x))));
  O.d.push_back(std::move(d0));

  if (D >= 2) {
    // d_1 through the embedding Omega^2 = W (x)_A W -> C (x)_A C
    const auto cc = cor.tensor_square();
    const Matrix<K> embed = cc.factor * kron(inc, inc) * Sec[1];
    Matrix<K> d1(O.dim(2), w);
    for (std::size_t t = 0; t < w; ++t) {
      const Vec<K> c = inc.col(t);
      Vec<K> u = sub_vec(add_vec(cc.project(x, c), cc.project(c, x)), cor.coproduct.apply(c));
      auto sol = solve_affine(embed, u);
      internal_check(sol.solvable && sol.homogeneous.dim() == 0,
                     "coring differential does not land in Omega^2");
      d1.set_col(t, sol.particular);
    }
    O.d.push_back(std::move(d1));
  }

  // d_n by the graded Leibniz rule, d(u (x) v) = (d u) v + (-1)^{n-1} u (d v)
  for (std::size_t deg = 2; deg < D; ++deg) {
    Matrix<K> dn(O.dim(deg + 1), O.dim(deg));
    for (std::size_t t = 0; t < O.dim(deg); ++t) {
      const Vec<K> rep = pair[deg - 2].section.col(t);
      Vec<K> out(O.dim(deg + 1));
      for (std::size_t u = 0; u < O.dim(deg - 1); ++u)
        for (std::size_t v = 0; v < w; ++v) {
          const K& z = rep[u * w + v];
          if (z.is_zero()) continue;
          Vec<K> term = O.mul(deg, 1, O.d[deg - 1].apply(unit_vec<K>(O.dim(deg - 1), u)),
                              unit_vec<K>(w, v));
          Vec<K> term2 = O.mul(deg - 1, 2, unit_vec<K>(O.dim(deg - 1), u),
                               O.d[1].apply(unit_vec<K>(w, v)));
          term = (deg % 2 == 1) ? add_vec(term, term2) : sub_vec(term, term2);
          out = add_vec(out, scale_vec(z, term));
        }
      dn.set_col(t, out);
    }
    O.d.push_back(std::move(dn));
  }

  {
    Report rep = validate_calculus(O);
    if (!rep.ok())
      throw ValidationError("coring does not produce a differential calculus: " +
                            rep.violations.front());
  }
  return O;
}

/// Sweedler coring C = A (x) A: Delta(a (x) b) = (a (x) 1) (x)_A (1 (x) b),
/// eps = multiplication, group-like 1 (x) 1.
template <field_scalar K>
Coring<K> sweedler_coring(const FinAlgebra<K>& A) {
  const std::size_t n = A.dim;
  Coring<K> cor;
  cor.A = A;
  cor.C.dim = n * n;
  const Matrix<K> id = Matrix<K>::identity(n);
  for (std::size_t s = 0; s < n; ++s) {
    cor.C.left_action.push_back(kron(A.left_mult_matrix(A.basis_vec(s)), id));
    cor.C.right_action.push_back(kron(id, A.right_mult_matrix(A.basis_vec(s))));
  }
  cor.counit = A.mult_map();
  const auto cc = cor.tensor_square();
  cor.coproduct = Matrix<K>(cc.dim, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cor.coproduct.set_col(i * n + j, cc.project(tensor_vec(A.basis_vec(i), A.unit),
                                                  tensor_vec(A.unit, A.basis_vec(j))));
  cor.grouplike = tensor_vec(A.unit, A.unit);
  return cor;
}

/// Trivial coring C = A with Delta the canonical identification
/// A -> A (x)_A A, eps = id, group-like 1. Its calculus is the zero calculus.
template <field_scalar K>
Coring<K> trivial_coring(const FinAlgebra<K>& A) {
  Coring<K> cor;
  cor.A = A;
  cor.C = regular_bimodule(A);
  const auto cc = cor.tensor_square();
  cor.coproduct = Matrix<K>(cc.dim, A.dim);
  for (std::size_t i = 0; i < A.dim; ++i)
    cor.coproduct.set_col(i, cc.project(A.basis_vec(i), A.unit));
  cor.counit = Matrix<K>::identity(A.dim);
  cor.grouplike = A.unit;
  return cor;
}

/// Universal differential calculus: Omega^1 = ker mu inside A (x) A with
/// d a = 1 (x) a - a (x) 1, higher degrees semi-free. Realized as the
/// calculus of the Sweedler coring at the group-like 1 (x) 1.
template <field_scalar K>
GradedCalculus<K> universal_calculus(const FinAlgebra<K>& A, std::size_t truncation) {
  return coring_to_dga(sweedler_coring(A), truncation);
}

/// Outcome of the cosplitness test: a central iota with eps(iota) = 1,
/// the inner form Xi = iota - x of the associated calculus, and whether
/// iota is itself group-like (which forces the inner connection flat).
template <field_scalar K>
struct CosplitResult {
  Vec<K> iota;      // C coordinates
  InnerForm<K> xi;  // coordinates in ker eps
  bool iota_grouplike = false;
};

template <field_scalar K>
std::optional<CosplitResult<K>> cosplit_check(const Coring<K>& cor) {
  if (!cor.grouplike) throw ValidationError("cosplit_check needs a group-like element");
  const std::size_t dc = cor.C.dim, n = cor.A.dim;
  Matrix<K> constraints(n * dc + n, dc);
  Vec<K> rhs(n * dc + n);
  std::size_t row = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const Matrix<K> diff = cor.C.left_action[s] - cor.C.right_action[s];
    for (std::size_t r = 0; r < dc; ++r, ++row)
      for (std::size_t c = 0; c < dc; ++c) constraints(row, c) = diff(r, c);
  }
  for (std::size_t r = 0; r < n; ++r, ++row) {
    for (std::size_t c = 0; c < dc; ++c) constraints(row, c) = cor.counit(r, c);
    rhs[row] = cor.A.unit[r];
  }
  auto sol = solve_affine(constraints, rhs);
  if (!sol.solvable) return std::nullopt;

  CosplitResult<K> res;
  res.iota = std::move(sol.particular);
  const Subspace<K> W = kernel(cor.counit);
  res.xi.xi = W.coordinates(sub_vec(res.iota, *cor.grouplike));
  // the inner-form equation d a = a Xi - Xi a in C coordinates
  const Vec<K>& x = *cor.grouplike;
  for (std::size_t s = 0; s < n; ++s) {
    const Vec<K> a = cor.A.basis_vec(s);
    const Vec<K> da = sub_vec(cor.C.right(x, a), cor.C.left(a, x));
    const Vec<K> xi_c = sub_vec(res.iota, x);
    internal_check(da == sub_vec(cor.C.left(a, xi_c), cor.C.right(xi_c, a)),
                   "cosplit element does not generate the differential");
  }
  const auto cc = cor.tensor_square();
  res.iota_grouplike = cor.coproduct.apply(res.iota) == cc.project(res.iota, res.iota) &&
                       cor.counit.apply(res.iota) == cor.A.unit;
  return res;
}

}  // namespace homcalc

#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "homcalc/coring.hpp"
#include "homcalc/induce.hpp"

namespace homcalc {

using json = nlohmann::ordered_json;

/// Scalar wire formats. Rationals travel as strings "n" or "p/q" (plain
/// JSON integers are accepted too); prime-field elements as integers
/// 0..p-1, reduced against the modulus declared once per document.
template <field_scalar K>
struct scalar_json;

template <>
struct scalar_json<Rational> {
  static json to(const Rational& x) { return x.str(); }
  static Rational from(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("expected a rational scalar, got " + j.dump());
  }
};

template <>
struct scalar_json<Fp> {
  static json to(const Fp& x) { return x.raw(); }
  static Fp from(const json& j) {
    if (!j.is_number_integer()) throw ParseError("expected a prime-field integer, got " + j.dump());
    if (Fp::default_modulus() == 0)
      throw ValidationError("prime-field scalar read before a modulus was declared");
    return Fp(j.get<long long>());
  }
};

template <field_scalar K>
json vec_to_json(const Vec<K>& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(scalar_json<K>::to(x));
  return j;
}

template <field_scalar K>
Vec<K> vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a vector, got " + j.dump());
  Vec<K> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(scalar_json<K>::from(e));
  return v;
}

template <field_scalar K>
json matrix_to_json(const Matrix<K>& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vec_to_json(m.row(i)));
  return j;
}

template <field_scalar K>
Matrix<K> matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
  Matrix<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vec<K> r = vec_from_json<K>(j[i]);
    if (r.size() != cols) throw ParseError("matrix row has wrong length");
    m.set_row(i, r);
  }
  return m;
}

template <field_scalar K>
json algebra_to_json(const FinAlgebra<K>& A) {
  json j;
  j["dim"] = A.dim;
  j["unit"] = vec_to_json(A.unit);
  json mult = json::array();
  for (std::size_t i = 0; i < A.dim; ++i) {
    json slice = json::array();
    for (std::size_t jj = 0; jj < A.dim; ++jj)
      slice.push_back(vec_to_json(A.mul(A.basis_vec(i), A.basis_vec(jj))));
    mult.push_back(slice);
  }
  j["mult"] = mult;
  return j;
}

template <field_scalar K>
FinAlgebra<K> algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim")) throw ParseError("algebra document needs a dim");
  FinAlgebra<K> A;
  A.dim = j.at("dim").get<std::size_t>();
  if (A.dim == 0) throw ParseError("algebra dimension must be >= 1");
  A.unit = vec_from_json<K>(j.at("unit"));
  if (A.unit.size() != A.dim) throw ParseError("algebra unit has wrong length");
  const json& mult = j.at("mult");
  if (!mult.is_array() || mult.size() != A.dim) throw ParseError("algebra mult tensor malformed");
  for (std::size_t i = 0; i < A.dim; ++i) {
    if (!mult[i].is_array() || mult[i].size() != A.dim)
      throw ParseError("algebra mult tensor malformed");
    Matrix<K> l(A.dim, A.dim);
    for (std::size_t jj = 0; jj < A.dim; ++jj) {
      const Vec<K> prod = vec_from_json<K>(mult[i][jj]);  // e_i e_j coordinates
      if (prod.size() != A.dim) throw ParseError("algebra mult tensor malformed");
      l.set_col(jj, prod);
    }
    A.left_mult.push_back(std::move(l));
  }
  return A;
}

template <field_scalar K>
json module_to_json(const RightModule<K>& M) {
  json j;
  j["dim"] = M.dim;
  json act = json::array();
  for (const auto& a : M.action) act.push_back(matrix_to_json(a));
  j["action"] = act;
  return j;
}

template <field_scalar K>
RightModule<K> module_from_json(const json& j, std::size_t algebra_dim) {
  RightModule<K> M;
  M.dim = j.at("dim").get<std::size_t>();
  const json& act = j.at("action");
  if (!act.is_array() || act.size() != algebra_dim)
    throw ParseError("module action needs one matrix per algebra basis element");
  for (const auto& a : act) M.action.push_back(matrix_from_json<K>(a, M.dim, M.dim));
  return M;
}

template <field_scalar K>
json bimodule_to_json(const Bimodule<K>& E) {
  json j;
  j["dim"] = E.dim;
  json l = json::array(), r = json::array();
  for (const auto& a : E.left_action) l.push_back(matrix_to_json(a));
  for (const auto& a : E.right_action) r.push_back(matrix_to_json(a));
  j["left_action"] = l;
  j["right_action"] = r;
  return j;
}

template <field_scalar K>
Bimodule<K> bimodule_from_json(const json& j, std::size_t left_dim, std::size_t right_dim) {
  Bimodule<K> E;
  E.dim = j.at("dim").get<std::size_t>();
  const json& l = j.at("left_action");
  const json& r = j.at("right_action");
  if (!l.is_array() || l.size() != left_dim || !r.is_array() || r.size() != right_dim)
    throw ParseError("bimodule needs one action matrix per algebra basis element on each side");
  for (const auto& a : l) E.left_action.push_back(matrix_from_json<K>(a, E.dim, E.dim));
  for (const auto& a : r) E.right_action.push_back(matrix_from_json<K>(a, E.dim, E.dim));
  return E;
}

template <field_scalar K>
json calculus_to_json(const GradedCalculus<K>& O) {
  json j;
  j["algebra"] = algebra_to_json(O.A);
  j["truncation"] = O.truncation;
  json comps = json::array();
  for (const auto& c : O.components) comps.push_back(bimodule_to_json(c));
  j["components"] = comps;
  json d = json::array();
  for (const auto& m : O.d) d.push_back(matrix_to_json(m));
  j["d"] = d;
  json prods = json::object();
  for (const auto& [key, slices] : O.products) {
    json sl = json::array();
    for (const auto& m : slices) sl.push_back(matrix_to_json(m));
    prods[std::to_string(key.first) + "," + std::to_string(key.second)] = sl;
  }
  j["products"] = prods;
  return j;
}

template <field_scalar K>
GradedCalculus<K> calculus_from_json(const json& j, const FinAlgebra<K>& A) {
  GradedCalculus<K> O;
  O.A = A;
  O.truncation = j.at("truncation").get<std::size_t>();
  if (O.truncation < 1) throw ParseError("calculus truncation must be >= 1");
  const json& comps = j.at("components");
  if (!comps.is_array() || comps.size() != O.truncation)
    throw ParseError("calculus needs one component per degree 1..truncation");
  for (const auto& c : comps) O.components.push_back(bimodule_from_json<K>(c, A.dim, A.dim));
  const json& d = j.at("d");
  if (!d.is_array() || d.size() != O.truncation)
    throw ParseError("calculus needs one differential per degree 0..truncation-1");
  for (std::size_t n = 0; n < O.truncation; ++n)
    O.d.push_back(matrix_from_json<K>(d[n], O.dim(n + 1), O.dim(n)));
  for (std::size_t m = 1; m < O.truncation; ++m)
    for (std::size_t n = 1; m + n <= O.truncation; ++n) {
      const std::string key = std::to_string(m) + "," + std::to_string(n);
      const json& sl = j.at("products").at(key);
      if (!sl.is_array() || sl.size() != O.dim(m))
        throw ParseError("product " + key + " needs one matrix per basis element");
      std::vector<Matrix<K>> slices;
      for (const auto& mm : sl) slices.push_back(matrix_from_json<K>(mm, O.dim(m + n), O.dim(n)));
      O.products[{m, n}] = std::move(slices);
    }
  return O;
}

template <field_scalar K>
json coring_to_json(const Coring<K>& cor) {
  json j;
  j["algebra"] = algebra_to_json(cor.A);
  j["bimodule"] = bimodule_to_json(cor.C);
  j["coproduct"] = matrix_to_json(cor.coproduct);
  j["counit"] = matrix_to_json(cor.counit);
  if (cor.grouplike) j["grouplike"] = vec_to_json(*cor.grouplike);
  return j;
}

template <field_scalar K>
Coring<K> coring_from_json(const json& j, const FinAlgebra<K>& A) {
  Coring<K> cor;
  cor.A = A;
  cor.C = bimodule_from_json<K>(j.at("bimodule"), A.dim, A.dim);
  const auto cc = cor.tensor_square();
  cor.coproduct = matrix_from_json<K>(j.at("coproduct"), cc.dim, cor.C.dim);
  cor.counit = matrix_from_json<K>(j.at("counit"), A.dim, cor.C.dim);
  if (j.contains("grouplike")) {
    cor.grouplike = vec_from_json<K>(j.at("grouplike"));
    if (cor.grouplike->size() != cor.C.dim) throw ParseError("group-like element has wrong length");
  }
  return cor;
}

}  // namespace homcalc

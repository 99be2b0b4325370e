#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "homcalc/builtins.hpp"
#include "homcalc/duality.hpp"
#include "homcalc/io.hpp"
#include "homcalc/qlaurent.hpp"

namespace homcalc {

/// Key/value report stream; identical inputs produce byte-identical text.
class ReportWriter {
 public:
  void line(const std::string& s) {
    buf_ += s;
    buf_ += '\n';
  }
  void blank() { buf_ += '\n'; }
  void kv(const std::string& key, const std::string& value) { line(key + " = " + value); }
  void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
  void kv(const std::string& key, bool value) { kv(key, value ? "true" : "false"); }
  void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }

  template <field_scalar K>
  void vec(const std::string& key, const Vec<K>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ' ';
      s += v[i].str();
    }
    kv(key, s);
  }

  template <field_scalar K>
  void matrix(const std::string& key, const Matrix<K>& m) {
    kv(key + ".rows", m.rows());
    kv(key + ".cols", m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) vec(key + ".row." + std::to_string(i), m.row(i));
  }

  void report(const std::string& key, const Report& rep) {
    kv(key + ".ok", rep.ok());
    for (std::size_t i = 0; i < rep.violations.size(); ++i)
      kv(key + ".violation." + std::to_string(i), rep.violations[i]);
  }

  const std::string& str() const { return buf_; }

 private:
  std::string buf_;
};

/// A parsed workspace: named objects sharing one field, plus a task list.
template <field_scalar K>
struct Workspace {
  struct ModuleEntry {
    FinAlgebra<K> algebra;
    RightModule<K> module;
  };

  std::map<std::string, FinAlgebra<K>> algebras;
  std::map<std::string, ModuleEntry> modules;
  std::map<std::string, GradedCalculus<K>> calculi;
  std::map<std::string, Coring<K>> corings;
  std::map<std::string, DGAMap<K>> dga_maps;
  std::map<std::string, DifferentiableBimodule<K>> diff_bimodules;
  std::map<std::string, LeftConnection<K>> left_connections;
  std::vector<json> tasks;
};

namespace detail_ws {

template <class MapT>
const typename MapT::mapped_type& lookup(const MapT& m, const std::string& name,
                                         const char* kind) {
  auto it = m.find(name);
  if (it == m.end())
    throw ValidationError(std::string("unresolved ") + kind + " reference: " + name);
  return it->second;
}

inline std::string need_string(const json& task, const char* key) {
  if (!task.contains(key) || !task.at(key).is_string())
    throw ParseError(std::string("task needs a string field '") + key + "'");
  return task.at(key).get<std::string>();
}

}  // namespace detail_ws

template <field_scalar K>
FinAlgebra<K> resolve_algebra(const Workspace<K>& ws, const json& ref) {
  if (ref.is_string()) return detail_ws::lookup(ws.algebras, ref.get<std::string>(), "algebra");
  return algebra_from_json<K>(ref);
}

template <field_scalar K>
GradedCalculus<K> resolve_calculus(const Workspace<K>& ws, const json& ref) {
  if (ref.is_string()) return detail_ws::lookup(ws.calculi, ref.get<std::string>(), "calculus");
  const FinAlgebra<K> A = resolve_algebra(ws, ref.at("algebra"));
  return calculus_from_json<K>(ref, A);
}

template <field_scalar K>
Workspace<K> workspace_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("workspace document must be a JSON object");
  Workspace<K> ws;
  if (doc.contains("algebras"))
    for (const auto& [name, j] : doc.at("algebras").items())
      ws.algebras.emplace(name, algebra_from_json<K>(j));
  if (doc.contains("modules"))
    for (const auto& [name, j] : doc.at("modules").items()) {
      const FinAlgebra<K> A = resolve_algebra(ws, j.at("algebra"));
      ws.modules.emplace(name,
                         typename Workspace<K>::ModuleEntry{A, module_from_json<K>(j, A.dim)});
    }
  if (doc.contains("calculi"))
    for (const auto& [name, j] : doc.at("calculi").items()) {
      const FinAlgebra<K> A = resolve_algebra(ws, j.at("algebra"));
      ws.calculi.emplace(name, calculus_from_json<K>(j, A));
    }
  if (doc.contains("corings"))
    for (const auto& [name, j] : doc.at("corings").items()) {
      const FinAlgebra<K> A = resolve_algebra(ws, j.at("algebra"));
      ws.corings.emplace(name, coring_from_json<K>(j, A));
    }
  if (doc.contains("maps"))
    for (const auto& [name, j] : doc.at("maps").items()) {
      const std::string type = j.at("type").template get<std::string>();
      if (type == "dga-map") {
        DGAMap<K> th;
        th.source = resolve_calculus(ws, j.at("source"));
        th.target = resolve_calculus(ws, j.at("target"));
        const json& theta = j.at("theta");
        const std::size_t top = std::min(th.source.truncation, th.target.truncation);
        if (!theta.is_array() || theta.size() != top + 1)
          throw ParseError("dga-map theta needs one matrix per degree 0.." + std::to_string(top));
        for (std::size_t n = 0; n <= top; ++n)
          th.theta.push_back(matrix_from_json<K>(theta[n], th.target.dim(n), th.source.dim(n)));
        ws.dga_maps.emplace(name, std::move(th));
      } else if (type == "differentiable-bimodule") {
        DifferentiableBimodule<K> d;
        d.forms = resolve_calculus(ws, j.at("forms"));
        d.base = resolve_calculus(ws, j.at("base"));
        d.E = bimodule_from_json<K>(j.at("bimodule"), d.forms.A.dim, d.base.A.dim);
        const auto t = d.target_tensor();
        d.nabla_up = matrix_from_json<K>(j.at("nabla_up"), t.dim, d.E.dim);
        d.sigma = matrix_from_json<K>(j.at("sigma"), t.dim, d.E.dim * d.base.dim(1));
        ws.diff_bimodules.emplace(name, std::move(d));
      } else if (type == "left-connection") {
        LeftConnection<K> l;
        l.calculus = resolve_calculus(ws, j.at("calculus"));
        l.B = resolve_algebra(ws, j.at("algebra_b"));
        l.M0 = bimodule_from_json<K>(j.at("bimodule"), l.calculus.A.dim, l.B.dim);
        const auto u = l.tensor_with(1);
        l.nabla_up = matrix_from_json<K>(j.at("nabla_up"), u.dim, l.M0.dim);
        ws.left_connections.emplace(name, std::move(l));
      } else {
        throw ParseError("unknown map type: " + type);
      }
    }
  if (doc.contains("tasks")) {
    if (!doc.at("tasks").is_array()) throw ParseError("tasks must be an array");
    for (const auto& t : doc.at("tasks")) ws.tasks.push_back(t);
  }
  return ws;
}

namespace detail_ws {

template <field_scalar K>
HomConnection<K> resolve_connection(const GradedCalculus<K>& O, const RightModule<K>& M,
                                    const json& spec) {
  if (spec.is_string() && spec.get<std::string>() == "any") {
    auto space = solve_homconnections(O, M);
    return space.canonical();
  }
  if (spec.is_string() && spec.get<std::string>() == "inner") {
    auto form = find_inner_form(O);
    if (!form) throw MathRefusal("the calculus is not inner");
    return inner_homconnection(O, M, *form);
  }
  if (spec.is_object() && spec.contains("nabla0")) {
    auto space = solve_homconnections(O, M);
    if (!space.solvable()) throw MathRefusal("no hom-connection exists for this module");
    const std::size_t h1 = space.hom[0].dim();
    return space.at(matrix_from_json<K>(spec.at("nabla0"), M.dim, h1));
  }
  throw ParseError("connection must be \"any\", \"inner\" or {\"nabla0\": ...}");
}

template <field_scalar K>
const typename Workspace<K>::ModuleEntry& module_entry(const Workspace<K>& ws, const json& task) {
  return lookup(ws.modules, need_string(task, "module"), "module");
}

template <field_scalar K>
void check_same_algebra(const FinAlgebra<K>& a, const FinAlgebra<K>& b) {
  if (a.dim != b.dim || a.unit != b.unit || a.left_mult != b.left_mult)
    throw ValidationError("objects live over different algebras");
}

template <field_scalar K>
LaurentPoly<K> poly_arg(const json& task, const char* key) {
  return LaurentPoly<K>::parse(need_string(task, key));
}

template <field_scalar K>
LaurentPoly<K> random_poly(std::mt19937_64& rng) {
  LaurentPoly<K> p;
  const std::size_t terms = 1 + rng() % 6;
  for (std::size_t t = 0; t < terms; ++t) {
    const long long n = static_cast<long long>(rng() % 17) - 8;
    const long long c = static_cast<long long>(rng() % 9) - 4;
    p.add_term(n, K(c));
  }
  return p;
}

}  // namespace detail_ws

template <field_scalar K>
void run_task(const Workspace<K>& ws, const json& task, ReportWriter& w, std::uint64_t seed) {
  using namespace detail_ws;
  const std::string op = need_string(task, "op");

  // echo the task's inputs (by name) ahead of the results
  for (const auto& [key, value] : task.items()) {
    if (key == "op") continue;
    if (value.is_string()) w.kv("input." + key, value.template get<std::string>());
    else if (value.is_boolean()) w.kv("input." + key, value.template get<bool>());
    else if (value.is_number_unsigned() || value.is_number_integer())
      w.kv("input." + key, std::to_string(value.template get<long long>()));
    else w.kv("input." + key, std::string("(inline)"));
  }

  if (op == "validate") {
    const std::string target =
        task.contains("target") ? task.at("target").get<std::string>() : "all";
    bool any_violation = false;
    auto emit = [&](const std::string& name, const char* kind, const Report& rep) {
      if (target != "all" && target != name) return;
      w.kv("object." + name + ".kind", kind);
      w.report("object." + name, rep);
      any_violation = any_violation || !rep.ok();
    };
    for (const auto& [name, a] : ws.algebras) emit(name, "algebra", validate_algebra(a));
    for (const auto& [name, m] : ws.modules)
      emit(name, "module", validate_right_module(m.algebra, m.module));
    for (const auto& [name, o] : ws.calculi) emit(name, "calculus", validate_calculus(o));
    for (const auto& [name, c] : ws.corings) emit(name, "coring", validate_coring(c));
    for (const auto& [name, t] : ws.dga_maps) emit(name, "dga-map", validate_dga_map(t));
    for (const auto& [name, d] : ws.diff_bimodules)
      emit(name, "differentiable-bimodule", validate_differentiable_bimodule(d));
    for (const auto& [name, l] : ws.left_connections)
      emit(name, "left-connection", validate_left_connection(l));
    if (any_violation) throw ValidationError("validation found violations");
    return;
  }

  if (op == "solve") {
    const auto& O = lookup(ws.calculi, need_string(task, "calculus"), "calculus");
    const auto& me = module_entry(ws, task);
    check_same_algebra(O.A, me.algebra);
    auto space = solve_homconnections(O, me.module);
    for (std::size_t n = 1; n <= O.truncation; ++n)
      w.kv("hom." + std::to_string(n) + ".dim", space.hom[n - 1].dim());
    w.kv("solvable", space.solvable());
    w.kv("affine.homogeneous.dim", space.solutions.homogeneous.dim());
    if (space.solvable()) {
      auto conn = space.canonical();
      w.matrix("nabla0", conn.nabla0);
      w.report("leibniz", check_hom_connection(conn));
      if (task.value("xi_check", false)) {
        const auto dual = dual_module(O.A, O.component(1));
        w.kv("xi_dual.dim", dual.bimodule.dim);
        w.report("xi_identities", xi_family_identity_check(conn, dual));
      }
    }
    return;
  }

  if (op == "curvature") {
    const auto& O = lookup(ws.calculi, need_string(task, "calculus"), "calculus");
    const auto& me = module_entry(ws, task);
    check_same_algebra(O.A, me.algebra);
    auto conn = resolve_connection(O, me.module, task.value("connection", json("any")));
    for (std::size_t n = 1; n + 1 <= O.truncation; ++n)
      w.matrix("nabla." + std::to_string(n), extend(conn, n));
    const auto cur = curvature(conn);
    w.matrix("curvature", cur.F);
    w.kv("flat", cur.flat());
    if (task.value("theta_check", false))
      for (std::size_t n = 1; n + 1 <= O.truncation; ++n)
        w.report("theta_factorization." + std::to_string(n), theta_factorization_check(conn, n));
    return;
  }

  if (op == "homology") {
    const auto& O = lookup(ws.calculi, need_string(task, "calculus"), "calculus");
    const json degree_spec = task.value("degree", json("all"));
    auto degrees = [&](std::size_t top) {
      std::vector<std::size_t> out;
      if (degree_spec.is_string() && degree_spec.get<std::string>() == "all")
        for (std::size_t n = 0; n < top; ++n) out.push_back(n);
      else
        out.push_back(degree_spec.get<std::size_t>());
      return out;
    };
    if (!task.contains("module")) {
      for (std::size_t n : degrees(O.truncation)) {
        auto h = cohomology(O, n);
        w.kv("cohomology." + std::to_string(n) + ".dim", h.dim());
        w.matrix("cohomology." + std::to_string(n) + ".representatives", h.representatives);
      }
      return;
    }
    const auto& me = module_entry(ws, task);
    check_same_algebra(O.A, me.algebra);
    auto conn = resolve_connection(O, me.module, task.value("connection", json("any")));
    if (O.truncation >= 2) {
      const auto cur = curvature(conn);
      w.kv("flat", cur.flat());
      if (!cur.flat()) {
        w.matrix("curvature", cur.F);
        throw MathRefusal("connection is not flat; homology is undefined");
      }
    }
    for (std::size_t n : degrees(O.truncation)) {
      auto h = homology(conn, n);
      w.kv("homology." + std::to_string(n) + ".dim", h.dim());
      w.matrix("homology." + std::to_string(n) + ".representatives", h.representatives);
    }
    return;
  }

  if (op == "induce") {
    const std::string via = need_string(task, "via");
    if (via == "dga-map") {
      const auto& th = lookup(ws.dga_maps, need_string(task, "map"), "dga-map");
      const auto& me = module_entry(ws, task);
      check_same_algebra(th.source.A, me.algebra);
      auto conn = resolve_connection(th.source, me.module, task.value("connection", json("any")));
      auto ind = induce_via_dga_map(th, conn);
      w.kv("induced.module.dim", ind.module_space.dim());
      w.matrix("induced.nabla0", ind.connection.nabla0);
      w.report("induced.leibniz", check_hom_connection(ind.connection));
      if (task.value("transfer_check", false))
        w.report("curvature_transfer", curvature_transfer_check(th, conn));
    } else if (via == "bimodule") {
      const auto& d = lookup(ws.diff_bimodules, need_string(task, "map"), "differentiable-bimodule");
      const auto& me = module_entry(ws, task);
      check_same_algebra(d.base.A, me.algebra);
      auto conn = resolve_connection(d.base, me.module, task.value("connection", json("any")));
      auto ind = induce_via_bimodule(d, conn);
      w.kv("induced.module.dim", ind.module_space.dim());
      w.matrix("induced.nabla0", ind.connection.nabla0);
      w.report("induced.leibniz", check_hom_connection(ind.connection));
    } else if (via == "left-connection") {
      const auto& l = lookup(ws.left_connections, need_string(task, "map"), "left-connection");
      const auto& me = module_entry(ws, task);  // N, a right module over B
      check_same_algebra(l.B, me.algebra);
      auto ind = dualize_left_connection(l, me.module);
      w.kv("induced.module.dim", ind.module_space.dim());
      w.matrix("induced.nabla0", ind.connection.nabla0);
      w.report("induced.leibniz", check_hom_connection(ind.connection));
      if (task.value("transport_check", false))
        w.report("transport", left_connection_curvature(l, me.module));
    } else {
      throw ParseError("unknown induction kind: " + via);
    }
    return;
  }

  if (op == "dualize") {
    const auto& O = lookup(ws.calculi, need_string(task, "calculus"), "calculus");
    const auto& me = module_entry(ws, task);
    check_same_algebra(O.A, me.algebra);
    auto conn = resolve_connection(O, me.module, task.value("connection", json("any")));
    auto data = build_duality_data(O, me.module);
    w.kv("dual.dim", data.L.dim);
    w.kv("cotensor.dim", data.cotensor.dim());
    w.kv("upsilon.bijective", true);
    w.report("coactions", duality_data_check(data, O));
    const Matrix<K> nbar = homconn_to_comodule_connection(data, conn);
    w.matrix("comodule_connection", nbar);
    w.report("comodule_identity", comodule_connection_check(data, O, me.module, nbar));
    auto back = comodule_connection_to_homconn(data, O, me.module, nbar);
    w.kv("roundtrip.ok", back.nabla0 == conn.nabla0);
    return;
  }

  if (op == "contra") {
    const auto& cor = lookup(ws.corings, need_string(task, "coring"), "coring");
    const auto& me = module_entry(ws, task);
    check_same_algebra(cor.A, me.algebra);
    const std::size_t truncation = task.value("truncation", std::size_t{3});
    const auto O = coring_to_dga(cor, truncation);
    w.kv("calculus.dim.1", O.dim(1));
    auto conn = resolve_connection(O, me.module, task.value("connection", json("any")));
    auto cm = homconn_to_contramodule(cor, conn);
    w.matrix("phi", cm.phi);
    w.report("axioms", contramodule_check(cor, cm, /*pentagon=*/false));
    const bool pentagon = contramodule_check(cor, cm, /*pentagon=*/true).ok();
    w.kv("pentagon.ok", pentagon);
    if (truncation >= 2) {
      const bool flat = curvature(conn).flat();
      w.kv("flat", flat);
      w.kv("pentagon_matches_flatness", pentagon == flat);
    }
    auto back = contramodule_to_homconn(cor, cm, O);
    w.kv("roundtrip.ok", back.nabla0 == conn.nabla0);
    auto cosplit = cosplit_check(cor);
    w.kv("cosplit", cosplit.has_value());
    if (cosplit) {
      w.vec("cosplit.iota", cosplit->iota);
      w.kv("cosplit.iota_grouplike", cosplit->iota_grouplike);
    }
    return;
  }

  if (op == "laurent") {
    const std::string action = need_string(task, "action");
    const QParam<K> q{scalar_io<K>::parse(need_string(task, "q"))};
    w.kv("q", q.q.str());
    if (action == "jackson") {
      const auto f = poly_arg<K>(task, "f");
      w.kv("result", jackson_derivative(f, q).str());
    } else if (action == "scale") {
      const auto f = poly_arg<K>(task, "f");
      const K gamma = scalar_io<K>::parse(need_string(task, "gamma"));
      w.kv("result", scale_substitute(f, gamma).str());
    } else if (action == "apply") {
      const auto a = poly_arg<K>(task, "a");
      const auto f = poly_arg<K>(task, "f");
      w.kv("result", homconn_from_element(a, q)(f).str());
    } else if (action == "inner") {
      const auto m = poly_arg<K>(task, "m");
      w.kv("result", inner_xi_connection(q, m).str());
    } else if (action == "commutation") {
      const auto f = poly_arg<K>(task, "f");
      w.report("commutation", commutation_check(f, q));
    } else if (action == "classify") {
      const std::uint64_t task_seed = task.value("seed", seed);
      const std::size_t trials = task.value("trials", std::size_t{100});
      const auto a = task.contains("a") ? poly_arg<K>(task, "a") : LaurentPoly<K>{};
      const auto conn = homconn_from_element(a, q);
      std::mt19937_64 rng(task_seed);
      std::size_t held = 0;
      for (std::size_t t = 0; t < trials; ++t)
        if (classification_identity_holds(conn, random_poly<K>(rng), random_poly<K>(rng))) ++held;
      w.kv("seed", task_seed);
      w.kv("trials", trials);
      w.kv("identity_held", held);
      if (held != trials) throw InternalError("classification identity failed on random input");
    } else {
      throw ParseError("unknown laurent action: " + action);
    }
    return;
  }

  throw ParseError("unknown task op: " + op);
}

struct RunResult {
  std::string report;
  int exit_code = 0;
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const ValidationError*>(&e)) return 3;
  if (dynamic_cast<const MathRefusal*>(&e)) return 4;
  return 5;
}

template <field_scalar K>
RunResult run_workspace_tasks(const json& doc, const std::string& field_label, std::uint64_t seed) {
  ReportWriter w;
  w.line("# homcalc report");
  w.kv("field", field_label);
  RunResult result;
  try {
    Workspace<K> ws = workspace_from_json<K>(doc);
    w.kv("tasks", ws.tasks.size());
    for (std::size_t i = 0; i < ws.tasks.size(); ++i) {
      w.blank();
      w.line("[task " + std::to_string(i + 1) + "] " +
             detail_ws::need_string(ws.tasks[i], "op"));
      run_task(ws, ws.tasks[i], w, seed);
    }
    w.blank();
    w.kv("status", "ok");
  } catch (const std::exception& e) {
    result.exit_code = exit_code_for(e);
    w.kv("error", e.what());
    w.kv("status", "failed");
  }
  result.report = w.str();
  return result;
}

namespace detail_ws {

inline std::size_t parse_count(const std::string& s, const char* what) {
  if (s.empty()) throw ParseError(std::string("missing ") + what);
  for (char c : s)
    if (c < '0' || c > '9') throw ParseError(std::string("bad ") + what + ": " + s);
  return static_cast<std::size_t>(std::stoull(s));
}

}  // namespace detail_ws

/// Builtin algebras by hyphenated id: "product-field-N", "matrix-algebra-N",
/// "group-algebra-zN", "dual-numbers".
template <field_scalar K>
FinAlgebra<K> builtin_algebra(const std::string& id) {
  using detail_ws::parse_count;
  if (id == "dual-numbers") return dual_numbers<K>();
  if (id.rfind("matrix-algebra-", 0) == 0)
    return matrix_algebra<K>(parse_count(id.substr(15), "matrix size"));
  if (id.rfind("product-field-", 0) == 0)
    return product_field<K>(parse_count(id.substr(14), "factor count"));
  if (id.rfind("group-algebra-z", 0) == 0)
    return group_algebra_cyclic<K>(parse_count(id.substr(15), "group order"));
  throw ParseError("unknown builtin algebra: " + id);
}

/// Emits the workspace document for one builtin object. Arguments follow
/// the command line: {"product-field", "2"}, {"group-algebra", "Z/4"},
/// {"sweedler-coring", "product-field-2"},
/// {"universal-calculus", "matrix-algebra-2", "2"}, ...
template <field_scalar K>
json generate_document(const std::vector<std::string>& args, const json& field) {
  using detail_ws::parse_count;
  if (args.empty()) throw ParseError("gen needs a builtin name");
  const std::string& kind = args[0];
  json doc;
  doc["field"] = field;
  auto need = [&](std::size_t n) {
    if (args.size() != n + 1)
      throw ParseError("builtin " + kind + " takes " + std::to_string(n) + " parameter(s)");
  };

  if (kind == "product-field" || kind == "matrix-algebra" || kind == "group-algebra" ||
      kind == "dual-numbers") {
    std::string id = kind;
    if (kind == "dual-numbers") {
      need(0);
    } else if (kind == "group-algebra") {
      need(1);
      std::string n = args[1];
      if (n.rfind("Z/", 0) == 0 || n.rfind("z/", 0) == 0) n = n.substr(2);
      id += "-z" + std::to_string(parse_count(n, "group order"));
    } else {
      need(1);
      id += "-" + std::to_string(parse_count(args[1], "size"));
    }
    doc["algebras"] = json::object();
    doc["algebras"][id] = algebra_to_json(builtin_algebra<K>(id));
    return doc;
  }

  if (kind == "sweedler-coring" || kind == "trivial-coring") {
    need(1);
    const std::string& alg_id = args[1];
    const FinAlgebra<K> A = builtin_algebra<K>(alg_id);
    const Coring<K> cor = kind == "sweedler-coring" ? sweedler_coring(A) : trivial_coring(A);
    doc["algebras"] = json::object();
    doc["algebras"][alg_id] = algebra_to_json(A);
    json cj = coring_to_json(cor);
    cj["algebra"] = alg_id;
    doc["corings"] = json::object();
    doc["corings"][kind + "-" + alg_id] = cj;
    return doc;
  }

  if (kind == "universal-calculus") {
    need(2);
    const std::string& alg_id = args[1];
    const std::size_t truncation = parse_count(args[2], "truncation");
    const FinAlgebra<K> A = builtin_algebra<K>(alg_id);
    doc["algebras"] = json::object();
    doc["algebras"][alg_id] = algebra_to_json(A);
    json oj = calculus_to_json(universal_calculus(A, truncation));
    oj["algebra"] = alg_id;
    doc["calculi"] = json::object();
    doc["calculi"][kind + "-" + alg_id + "-" + std::to_string(truncation)] = oj;
    return doc;
  }

  throw ParseError("unknown builtin: " + kind);
}

/// Field-dispatching front end for generate_document.
inline json generate_builtin(const std::vector<std::string>& args, const json& field) {
  if (field.is_string() && field.get<std::string>() == "Q")
    return generate_document<Rational>(args, field);
  if (field.is_object() && field.contains("Fp")) {
    Fp::Context ctx(field.at("Fp").get<std::uint32_t>());
    return generate_document<Fp>(args, field);
  }
  throw ParseError("unknown field descriptor");
}

/// Executes a workspace document; the field descriptor selects the scalar
/// type ("Q", or {"Fp": p} for a prime field).
inline RunResult run_document(const json& doc, std::uint64_t seed = 20080131) {
  json field = doc.is_object() && doc.contains("field") ? doc.at("field") : json("Q");
  if (field.is_string() && field.get<std::string>() == "Q")
    return run_workspace_tasks<Rational>(doc, "Q", seed);
  if (field.is_object() && field.contains("Fp")) {
    const auto p = field.at("Fp").get<std::uint32_t>();
    try {
      Fp::Context ctx(p);
      return run_workspace_tasks<Fp>(doc, "Fp " + std::to_string(p), seed);
    } catch (const ValidationError& e) {
      return {std::string("# homcalc report\nerror = ") + e.what() + "\nstatus = failed\n", 3};
    }
  }
  return {"# homcalc report\nerror = unknown field descriptor\nstatus = failed\n", 2};
}

}  // namespace homcalc

#pragma once

// JSON encoding. Scalars are "p/q" strings on output; integers are also
// accepted on input.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfpar/actions.hpp"
#include "hopfpar/dilation.hpp"
#include "hopfpar/error.hpp"
#include "hopfpar/hopf.hpp"
#include "hopfpar/linalg.hpp"
#include "hopfpar/partial.hpp"
#include "hopfpar/projection.hpp"

namespace hopfpar::io {

using json = nlohmann::ordered_json;

inline json to_json(const Scalar& s) { return to_string(s); }

inline Scalar scalar_from(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("expected a scalar string, got " + j.dump());
}

inline json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline Vec vec_from(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from(x));
  return v;
}

inline json to_json(const Mat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row_vec(i)));
  return out;
}

/// cols is used when the matrix has no rows.
inline Mat mat_from(const json& j, std::size_t cols = 0) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  if (j.empty()) return Mat(0, cols);
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("matrix rows have different lengths");
  return Mat::from_rows(rows, rows.front().size());
}

inline json tensor_to_json(const std::vector<Scalar>& t, std::size_t d) {
  json out = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    json slab = json::array();
    for (std::size_t j = 0; j < d; ++j) {
      json row = json::array();
      for (std::size_t k = 0; k < d; ++k) row.push_back(to_json(t[(i * d + j) * d + k]));
      slab.push_back(std::move(row));
    }
    out.push_back(std::move(slab));
  }
  return out;
}

inline std::vector<Scalar> tensor_from(const json& j, std::size_t d, const std::string& what) {
  if (!j.is_array() || j.size() != d) throw ParseError(what + ": expected " + std::to_string(d) + " slabs");
  std::vector<Scalar> out;
  for (const auto& slab : j) {
    if (!slab.is_array() || slab.size() != d) throw ParseError(what + ": slab has wrong size");
    for (const auto& row : slab) {
      const Vec r = vec_from(row);
      if (r.size() != d) throw ParseError(what + ": row has wrong size");
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  return out;
}

inline const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

inline std::size_t count_from(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw ParseError(std::string("field '") + name + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

// ---------------------------------------------------------------------------
// Hopf algebras

inline json to_json(const HopfAlgebraData& h) {
  json out;
  out["dim"] = h.dim;
  out["mult"] = tensor_to_json(h.mult, h.dim);
  out["unit"] = to_json(h.unit);
  out["comult"] = tensor_to_json(h.comult, h.dim);
  out["counit"] = to_json(h.counit);
  out["antipode"] = to_json(h.antipode);
  out["labels"] = h.labels;
  return out;
}

/// Raw data, not validated.
inline HopfAlgebraData hopf_data_from(const json& j) {
  HopfAlgebraData h;
  h.dim = count_from(j, "dim");
  h.mult = tensor_from(field(j, "mult"), h.dim, "mult");
  h.unit = vec_from(field(j, "unit"));
  h.comult = tensor_from(field(j, "comult"), h.dim, "comult");
  h.counit = vec_from(field(j, "counit"));
  h.antipode = mat_from(field(j, "antipode"), h.dim);
  if (j.contains("antipode_inv")) h.antipode_inv = mat_from(j.at("antipode_inv"), h.dim);
  if (j.contains("labels")) h.labels = j.at("labels").get<std::vector<std::string>>();
  detail::check_shapes(h);
  return h;
}

/// A builtin name, a path to a Hopf JSON file, or an inline object.
inline HopfPtr hopf_from(const json& j) {
  if (j.is_string()) {
    const std::string ref = j.get<std::string>();
    for (const auto& name : builtin_names())
      if (name == ref) return builtin(name);
    if (std::filesystem::exists(ref)) return HopfAlgebra::create(hopf_data_from(read_file(ref)), ref);
    throw ParseError("unknown Hopf algebra '" + ref + "'");
  }
  return HopfAlgebra::create(hopf_data_from(j));
}

/// Builtin name when the algebra is one, the full data otherwise.
inline json hopf_ref(const HopfPtr& h) {
  for (const auto& name : builtin_names())
    if (builtin(name)->data() == h->data()) return name;
  return to_json(h->data());
}

// ---------------------------------------------------------------------------
// Modules

inline json to_json(const PartialModule& m) {
  json out;
  out["hopf"] = hopf_ref(m.hopf);
  out["dim"] = m.dim;
  json pi = json::array();
  for (const auto& p : m.pi) pi.push_back(to_json(p));
  out["pi"] = std::move(pi);
  return out;
}

/// fallback is used when the object has no "hopf" field.
inline PartialModule module_from(const json& j, const HopfPtr& fallback = nullptr) {
  HopfPtr h = j.contains("hopf") ? hopf_from(j.at("hopf")) : fallback;
  if (!h) throw ParseError("module has no Hopf algebra; pass --hopf or add a 'hopf' field");
  const std::size_t n = count_from(j, "dim");
  const json& pi = field(j, "pi");
  if (!pi.is_array()) throw ParseError("'pi' must be an array of matrices");
  PartialModule m{h, n, {}};
  for (const auto& p : pi) m.pi.push_back(mat_from(p, n));
  check_shape(m);
  return m;
}

inline json to_json(const Subspace& s) {
  json out;
  out["ambient"] = s.ambient_dim();
  out["dim"] = s.dim();
  out["basis"] = to_json(s.basis());
  return out;
}

inline json to_json(const ValidationReport& r) {
  json out;
  out["ok"] = r.ok();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.passed) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  out["checks"] = std::move(checks);
  return out;
}

inline json to_json(const ProjectedModule& p) {
  json out;
  out["module"] = to_json(p.module);
  out["t"] = to_json(p.t);
  return out;
}

/// Module and t; the c-condition is not checked here.
inline std::pair<PartialModule, Mat> projected_from(const json& j, const HopfPtr& fallback = nullptr) {
  PartialModule m = module_from(field(j, "module"), fallback);
  Mat t = mat_from(field(j, "t"), m.dim);
  return {std::move(m), std::move(t)};
}

inline json dilation_json(const Dilation& d) {
  json out;
  out["source_dim"] = d.source.dim;
  out["dilation_dim"] = d.projected.module.dim;
  out["t"] = to_json(d.projected.t);
  json action = json::array();
  for (const auto& a : d.projected.module.pi) action.push_back(to_json(a));
  out["action"] = std::move(action);
  out["theta"] = to_json(d.theta);
  out["proper"] = is_proper(d);
  out["minimal"] = is_minimal(d);
  return out;
}

// ---------------------------------------------------------------------------
// Algebras

inline json to_json(const PartialModuleAlgebra& b) {
  json out = to_json(b.module());
  out["alg_mult"] = tensor_to_json(b.alg.mult, b.alg.dim);
  out["alg_unit"] = b.alg.unit ? to_json(*b.alg.unit) : json(nullptr);
  return out;
}

inline PartialModuleAlgebra module_algebra_from(const json& j, const HopfPtr& fallback = nullptr) {
  const PartialModule m = module_from(j, fallback);
  PartialModuleAlgebra b{m.hopf, {m.dim, tensor_from(field(j, "alg_mult"), m.dim, "alg_mult"), std::nullopt}, m.pi};
  const json& u = field(j, "alg_unit");
  if (!u.is_null()) {
    b.alg.unit = vec_from(u);
    if (b.alg.unit->size() != m.dim) throw ParseError("alg_unit has wrong size");
  }
  return b;
}

inline json to_json(const SmashAlgebra& s) {
  json out;
  out["dim"] = s.alg.dim;
  out["inclusion"] = to_json(s.inclusion);
  out["mult"] = tensor_to_json(s.alg.mult, s.alg.dim);
  out["unital"] = s.alg.unit.has_value();
  out["unit"] = s.alg.unit ? to_json(*s.alg.unit) : json(nullptr);
  out["report"] = to_json(s.report);
  return out;
}

inline json to_json(const Globalization& g) {
  json out;
  out["dim"] = g.dim();
  out["unital"] = false;
  out["mult"] = tensor_to_json(g.alg.mult, g.alg.dim);
  json action = json::array();
  for (const auto& a : g.action()) action.push_back(to_json(a));
  out["action"] = std::move(action);
  out["phi"] = to_json(g.phi);
  out["hom_inclusion"] = to_json(*g.dilation.hom_inclusion);
  out["report"] = to_json(g.report);
  return out;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hopfpar::io

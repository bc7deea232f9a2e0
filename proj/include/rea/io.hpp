#pragma once

// JSON forms for matrices, symmetries and polynomials (nlohmann/json).
//   matrix:   {"dim_v": N, "arity": n, "entries": [[row, col, "scalar"], ...]}
//   symmetry: the matrix of R plus {"kind": "hecke"|"involutive", "label": ...}
//   MPoly:    {"vars": [...], "terms": [{"coeff": "...", "exp": [...]}, ...]}

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rea/errors.hpp"
#include "rea/ncalg.hpp"
#include "rea/scalar.hpp"
#include "rea/spectral.hpp"
#include "rea/symmetry.hpp"
#include "rea/tensor.hpp"

namespace rea::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const TensorOp& t) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t.size(); ++c)
      if (!t(r, c).is_zero()) entries.push_back(Json::array({r, c, t(r, c).to_string()}));
  return Json{{"dim_v", t.dim_v()}, {"arity", t.arity()}, {"entries", entries}};
}

inline TensorOp tensor_from_json(const Json& j) {
  try {
    const int n = j.at("dim_v").get<int>(), a = j.at("arity").get<int>();
    if (n < 1 || a < 1) throw InputError("matrix JSON: dim_v and arity must be positive");
    TensorOp t(n, a);
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw InputError("matrix JSON: entry must be [row, col, scalar]");
      const auto r = e[0].get<long long>(), c = e[1].get<long long>();
      if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= t.size() || static_cast<std::size_t>(c) >= t.size())
        throw IndexOutOfRange("matrix JSON: entry index out of range");
      t(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = ScalarQ::parse(e[2].get<std::string>());
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("matrix JSON: ") + ex.what());
  }
}

inline Json to_json(const Symmetry& s) {
  Json j{{"kind", to_string(s.kind())}, {"label", s.label()}};
  j.update(to_json(s.R()));
  return j;
}

// Re-validates the axioms through the Symmetry constructor.
inline Symmetry symmetry_from_json(const Json& j) {
  std::string kind;
  try {
    kind = j.at("kind").get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("symmetry JSON: ") + ex.what());
  }
  SymmetryKind k;
  if (kind == "hecke") k = SymmetryKind::hecke;
  else if (kind == "involutive") k = SymmetryKind::involutive;
  else throw InputError("symmetry JSON: unknown kind '" + kind + "'");
  TensorOp r = tensor_from_json(j);
  if (r.arity() != 2) throw InputError("symmetry JSON: R must have arity 2");
  return Symmetry(k, std::move(r), j.value("label", std::string("loaded")));
}

inline Json to_json(const MPoly& p, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"coeff", c.to_string()}, {"exp", e}});
  return Json{{"vars", names}, {"terms", terms}, {"text", p.to_string(names)}};
}

inline Json to_json(const NCPoly& p, int dim_v) { return Json(p.to_string(dim_v)); }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(path + ": " + ex.what());
  }
}

inline Symmetry load_symmetry(const std::string& path) { return symmetry_from_json(read_json_file(path)); }

inline void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace rea::io

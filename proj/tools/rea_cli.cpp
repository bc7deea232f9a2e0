// rea_cli: constructions, exact verifications and reports on the command line.
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 degree bound.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "rea/acceptance.hpp"
#include "rea/charmap.hpp"
#include "rea/hecke.hpp"
#include "rea/io.hpp"
#include "rea/ncalg.hpp"
#include "rea/spectral.hpp"
#include "rea/symmetry.hpp"

using namespace rea;
using io::Json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kBound = 3 };

struct Report {
  explicit Report(std::string c = "") : command(std::move(c)) {}
  std::string command;
  Json inputs = Json::object();
  bool pass = true;
  Json artifacts = Json::object();
  std::vector<std::string> text;
};

struct Globals {
  bool json = false;
  bool timing = false;
  std::string load;
  std::string symmetry = "dj:2";
};

Symmetry parse_symmetry(const std::string& text) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        args.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw InputError("bad symmetry argument '" + part + "'");
      }
    }
  }
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw InputError("symmetry '" + kind + "' takes " + std::to_string(k) + " argument(s)");
  };
  if (kind == "dj" || kind == "flip") {
    need(1);
    return kind == "dj" ? dj_symmetry(args[0]) : flip(args[0]);
  }
  if (kind == "superflip") {
    need(2);
    return superflip(args[0], args[1]);
  }
  throw InputError("unknown symmetry kind '" + kind + "' (dj, flip, superflip)");
}

Symmetry selected_symmetry(const Globals& g) {
  return g.load.empty() ? parse_symmetry(g.symmetry) : io::load_symmetry(g.load);
}

Variant parse_variant(const std::string& v) {
  if (v == "re") return Variant::re;
  if (v == "mod") return Variant::modified_re;
  throw InputError("variant must be re or mod");
}

// largest generator index in a Hecke expression, plus one
int infer_strands(const std::string& expr) {
  int n = 1;
  for (std::size_t i = 0; i < expr.size(); ++i)
    if (expr[i] == 't' && i + 1 < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i + 1]))) {
      std::size_t j = i + 1;
      while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j]))) ++j;
      n = std::max(n, std::stoi(expr.substr(i + 1, j - i - 1)) + 1);
    }
  return n;
}

std::vector<std::string> p_names(int n) {
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k) out.push_back("p" + std::to_string(k));
  return out;
}

std::string index_label(const TensorOp& t, std::size_t flat) {
  std::string s;
  for (int d : t.digits(flat)) s += std::to_string(d + 1);
  return s;
}

void matrix_text(Report& r, const std::string& name, const TensorOp& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (!t(i, j).is_zero())
        r.text.push_back("  " + name + "[" + index_label(t, i) + "," + index_label(t, j) + "] = " + t(i, j).to_string());
}

void add_check(Report& r, Json& checks, const std::string& name, bool ok) {
  checks[name] = ok;
  r.pass = r.pass && ok;
  r.text.push_back("  " + name + ": " + (ok ? "pass" : "FAIL"));
}

Report symmetry_build(const Globals& g, const std::string& kind, int n, int m, int k, const std::string& out) {
  Report r{"symmetry build"};
  std::optional<Symmetry> s;
  if (!g.load.empty()) {
    s = io::load_symmetry(g.load);
    r.inputs["load"] = g.load;
  } else if (kind == "superflip") {
    s = superflip(m, k);
    r.inputs = Json{{"kind", kind}, {"m", m}, {"k", k}};
  } else {
    s = parse_symmetry(kind + ":" + std::to_string(n));
    r.inputs = Json{{"kind", kind}, {"n", n}};
  }
  r.text.push_back("symmetry " + s->label() + " (" + to_string(s->kind()) + "), N = " + std::to_string(s->dim_v()));
  Json checks = Json::object();
  add_check(r, checks, "braid", check_braid(s->R()));
  if (s->is_hecke()) add_check(r, checks, "Hecke condition", check_hecke(s->R()));
  else add_check(r, checks, "R^2 = I", check_involutive(s->R()));
  add_check(r, checks, "skew-inverse component system", skew_inverse_residual_zero(s->R(), s->psi()));
  add_check(r, checks, "skew-inverse operator form", skew_inverse_operator_form(s->R(), s->psi()));
  r.text.push_back("  Tr_R I = " + s->r_trace_identity().to_string());
  r.text.push_back("C:");
  matrix_text(r, "C", s->C());
  r.text.push_back("B:");
  matrix_text(r, "B", s->B());
  r.artifacts["symmetry"] = io::to_json(*s);
  r.artifacts["checks"] = checks;
  r.artifacts["C"] = io::to_json(s->C());
  r.artifacts["B"] = io::to_json(s->B());
  r.artifacts["r_trace_identity"] = s->r_trace_identity().to_string();
  if (!out.empty()) {
    io::save_json(io::to_json(*s), out);
    r.text.push_back("written to " + out);
  }
  return r;
}

Report symmetry_birank(const Globals& g, int kmax) {
  Report r{"symmetry birank"};
  Symmetry s = selected_symmetry(g);
  r.inputs = Json{{"symmetry", s.label()}, {"kmax", kmax}};
  auto dims = hilbert_dims(s, kmax);
  auto deg = birank_degree(dims);
  std::string list;
  for (std::size_t i = 0; i < dims.size(); ++i) list += (i ? ", " : "") + std::to_string(dims[i]);
  r.text.push_back(s.label() + ": dims of degrees 1.." + std::to_string(kmax) + " = [" + list + "]");
  r.text.push_back(deg ? "  series is a polynomial of degree " + std::to_string(*deg)
                       : "  no zero component up to degree " + std::to_string(kmax));
  r.artifacts["dims"] = dims;
  r.artifacts["polynomial_degree"] = deg ? Json(*deg) : Json(nullptr);
  return r;
}

// p-basis expression of a central element, if it has one up to weight n
std::optional<MPoly> in_power_sums(const REAlgebra& alg, const NCPoly& z, int n) {
  std::vector<NCPoly> gens;
  std::vector<int> weights;
  for (int k = 1; k <= n; ++k) {
    gens.push_back(power_sum_expr(alg.symmetry(), k));
    weights.push_back(k);
  }
  try {
    return express_in_basis(alg, z, gens, weights, n);
  } catch (const NotInSpan&) {
    return std::nullopt;
  }
}

Report central_ch(const Globals& g, const std::string& element, int n, const std::string& variant, int degree,
                  bool weight) {
  Report r{weight ? "weights" : "central ch"};
  Symmetry s = selected_symmetry(g);
  if (n <= 0) n = infer_strands(element);
  if (degree <= 0) degree = n + 1;
  Variant v = parse_variant(variant);
  r.inputs = Json{{"symmetry", s.label()}, {"element", element}, {"n", n}, {"variant", to_string(v)}, {"degree", degree}};
  HeckeElement z = HeckeElement::parse(element, n);
  REAlgebra alg(s, v, degree);
  NCPoly expr = weight ? weight_expr(s, z) : ch_expr(s, z);
  bool central = alg.is_central(expr);
  r.pass = central;
  r.text.push_back(std::string(weight ? "w" : "ch") + "(" + z.to_string() + ") over " + s.label() + ", " +
                   to_string(v) + ":");
  r.text.push_back("  " + expr.to_string(s.dim_v()));
  r.text.push_back(std::string("  central: ") + (central ? "yes" : "NO"));
  r.artifacts["expression"] = io::to_json(expr, s.dim_v());
  r.artifacts["central"] = central;

  auto p = in_power_sums(alg, expr, n);
  r.text.push_back("  in power sums Tr_R L^k: " + (p ? p->to_string(p_names(n)) : "not expressible"));
  r.artifacts["power_sums"] = p ? io::to_json(*p, p_names(n)) : Json(nullptr);

  if (weight) {
    const int m = even_birank(s);
    std::optional<MPoly> e;
    try {
      e = express_in_e_basis(alg, expr, degree);
    } catch (const NotInSpan&) {
    }
    r.text.push_back("  in e-basis: " + (e ? e->to_string(e_names(m)) : "not expressible"));
    r.artifacts["e_basis"] = e ? io::to_json(*e, e_names(m)) : Json(nullptr);
    if (e && s.is_hecke()) {
      const bool hat = v == Variant::modified_re;
      MPoly hc = hc_morphism(*e, m);
      if (hat) hc = zamena(hc);
      r.text.push_back("  HC image: " + hc.to_string(eigen_names(m, 0, hat)));
      r.artifacts["hc_image"] = io::to_json(hc, eigen_names(m, 0, hat));
    } else {
      r.artifacts["hc_image"] = nullptr;
    }
  }
  return r;
}

Report central_cayley_hamilton(const Globals& g, const std::string& variant, int degree) {
  Report r{"central cayley-hamilton"};
  Symmetry s = selected_symmetry(g);
  Variant v = parse_variant(variant);
  const int m = even_birank(s);
  if (degree <= 0) degree = m;
  r.inputs = Json{{"symmetry", s.label()}, {"variant", to_string(v)}, {"degree", degree}};
  REAlgebra alg(s, v, degree);
  auto rep = cayley_hamilton_check(alg, m);
  r.pass = rep.pass;
  r.text.push_back(std::string(v == Variant::re ? "Cayley-Hamilton" : "Q(L^) = 0") + " over " + s.label() + ", m = " +
                   std::to_string(m) + ":");
  Json entries = Json::array();
  const std::size_t n = static_cast<std::size_t>(s.dim_v());
  for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
    const auto& res = rep.residuals[i];
    std::string pos = "(" + std::to_string(i / n + 1) + "," + std::to_string(i % n + 1) + ")";
    r.text.push_back("  entry " + pos + ": " + (res.is_zero() ? "pass" : "FAIL, residual " + res.to_string(s.dim_v())));
    entries.push_back(Json{{"row", i / n + 1}, {"col", i % n + 1}, {"pass", res.is_zero()}, {"residual", res.to_string(s.dim_v())}});
  }
  r.artifacts["entries"] = entries;
  return r;
}

Report spectral_powersum(int k, int m, int nsuper, bool hat) {
  Report r{"spectral powersum"};
  r.inputs = Json{{"k", k}, {"m", m}, {"nsuper", nsuper}, {"hat", hat}};
  if (k < 0 || m < 0 || nsuper < 0 || m + nsuper < 1) throw InputError("need k >= 0, m, n >= 0, m + n >= 1");
  if (hat && nsuper > 0) throw InputError("--hat is only available for the even case (--nsuper 0)");
  MPoly p = hat ? powersum_hat_sym(k, m) : super_powersum(k, m, nsuper);
  auto names = eigen_names(m, nsuper, hat);
  r.text.push_back(p.to_string(names));
  r.artifacts["polynomial"] = io::to_json(p, names);
  return r;
}

Partition parse_lambda(const std::string& text) {
  Partition out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw InputError("bad partition part '" + part + "'");
    }
  }
  if (out.empty()) throw InputError("empty partition");
  return out;
}

Report spectral_character(const std::string& lambda_text, int k, bool hat, bool q1, bool unweighted) {
  Report r{"spectral character"};
  r.inputs = Json{{"lambda", lambda_text}, {"k", k}, {"hat", hat}, {"q1", q1}, {"unweighted", unweighted}};
  Partition lambda = parse_lambda(lambda_text);
  const int m = static_cast<int>(lambda.size());
  if (k < 0) throw InputError("k must be >= 0");
  ScalarQ value;
  if (unweighted) {
    for (const auto& x : hat ? muhat_char(lambda, m) : mu_char(lambda, m)) value += x.pow(k);
  } else {
    value = character(hat ? powersum_hat_sym(k, m) : powersum_sym(k, m), lambda, hat);
  }
  std::string shown = q1 ? ScalarQ(value.limit_q1()).to_string() : value.to_string();
  r.text.push_back(shown);
  r.artifacts["value"] = shown;
  return r;
}

Report verify_all(int n, int degree, const std::vector<int>& only) {
  Report r{"verify all"};
  r.inputs = Json{{"n", n}, {"degree", degree}};
  if (!only.empty()) r.inputs["only"] = only;
  acceptance::Options o{n, degree};
  Json criteria = Json::array();
  for (int id = 1; id <= 11; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    auto c = acceptance::run(id, o);
    r.pass = r.pass && c.pass();
    r.text.push_back(acceptance::summary_line(c));
    if (!c.pass() && !c.note.empty()) r.text.push_back("  note: " + c.note);
    Json checks = Json::array();
    for (const auto& ch : c.checks) checks.push_back(Json{{"name", ch.name}, {"ok", ch.ok}, {"corrected", ch.corrected}});
    Json item{{"id", c.id}, {"title", c.title}, {"outcome", c.pass() ? "pass" : "fail"}, {"checks", checks}};
    if (!c.note.empty()) item["note"] = c.note;
    criteria.push_back(item);
  }
  r.artifacts["criteria"] = criteria;
  return r;
}

int emit(const Globals& g, const Report& r, const std::string& outcome, double seconds, const std::string& error = "") {
  if (g.json) {
    Json j{{"schema", "rea-report/1"}, {"command", r.command}, {"inputs", r.inputs}, {"outcome", outcome}};
    if (!error.empty()) j["error"] = error;
    j["artifacts"] = r.artifacts;
    if (g.timing) j["timing"] = Json{{"seconds", seconds}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : r.text) std::cout << line << "\n";
    if (!error.empty()) std::cerr << "error: " << error << "\n";
    if (g.timing) std::cout << "time: " << seconds << " s\n";
  }
  if (outcome == "pass") return kPass;
  if (outcome == "fail") return kFail;
  return kInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on reflection equation algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "print a machine-readable report");
  app.add_flag("--timing", g.timing, "include wall time in the report");
  app.add_option("--load", g.load, "read the symmetry from a JSON file");
  app.add_option("--symmetry", g.symmetry, "dj:N, flip:N or superflip:M,K (default dj:2)");

  std::function<Report()> action;

  auto* sym = app.add_subcommand("symmetry", "build and inspect symmetries");
  sym->require_subcommand(1);
  std::string kind = "dj", out;
  int sn = 2, sm = 1, sk = 1, kmax = 4;
  auto* build = sym->add_subcommand("build", "construct a symmetry and check its axioms");
  build->add_option("--kind", kind, "dj, flip or superflip")->check(CLI::IsMember({"dj", "flip", "superflip"}));
  build->add_option("--n", sn, "dimension of V (dj, flip)");
  build->add_option("--m", sm, "even part (superflip)");
  build->add_option("--k", sk, "odd part (superflip)");
  build->add_option("--out", out, "write the symmetry JSON here");
  build->callback([&] { action = [&] { return symmetry_build(g, kind, sn, sm, sk, out); }; });
  auto* br = sym->add_subcommand("birank", "dimensions of the skew-symmetric algebra");
  br->add_option("--kmax", kmax, "highest degree");
  br->callback([&] { action = [&] { return symmetry_birank(g, kmax); }; });

  auto* central = app.add_subcommand("central", "central elements of the RE algebras");
  central->require_subcommand(1);
  std::string element = "t1.t2", variant = "re";
  int cn = 0, degree = 0;
  auto* chc = central->add_subcommand("ch", "characteristic map of a Hecke algebra element");
  chc->add_option("--element", element, "Hecke algebra element, e.g. \"t1.t2\"");
  chc->add_option("--n", cn, "number of strands (default: from the element)");
  chc->add_option("--variant", variant, "re or mod");
  chc->add_option("--degree", degree, "degree bound (default n+1)");
  chc->callback([&] { action = [&] { return central_ch(g, element, cn, variant, degree, false); }; });
  auto* chm = central->add_subcommand("cayley-hamilton", "Cayley-Hamilton identity entry by entry");
  chm->add_option("--variant", variant, "re or mod");
  chm->add_option("--degree", degree, "degree bound (default m)");
  chm->callback([&] { action = [&] { return central_cayley_hamilton(g, variant, degree); }; });

  auto* weights = app.add_subcommand("weights", "weight system of a Hecke algebra element");
  weights->add_option("--element", element, "Hecke algebra element");
  weights->add_option("--n", cn, "number of strands (default: from the element)");
  weights->add_option("--variant", variant, "re or mod");
  weights->add_option("--degree", degree, "degree bound (default n+1)");
  weights->callback([&] { action = [&] { return central_ch(g, element, cn, variant, degree, true); }; });

  auto* spectral = app.add_subcommand("spectral", "symmetric polynomials in the quantum eigenvalues");
  spectral->require_subcommand(1);
  int pk = 1, pm = 2, nsuper = 0;
  bool hat = false, q1 = false, unweighted = false;
  std::string lambda = "1,0";
  auto* ps = spectral->add_subcommand("powersum", "p_k in the eigenvalues");
  ps->add_option("--k", pk, "power");
  ps->add_option("--m", pm, "number of even eigenvalues");
  ps->add_option("--nsuper", nsuper, "number of odd eigenvalues");
  ps->add_flag("--hat", hat, "modified algebra eigenvalues");
  ps->callback([&] { action = [&] { return spectral_powersum(pk, pm, nsuper, hat); }; });
  auto* chr = spectral->add_subcommand("character", "value of p_k on V_lambda");
  chr->add_option("--lambda", lambda, "partition, e.g. \"1,0\"");
  chr->add_option("--k", pk, "power");
  chr->add_flag("--hat", hat, "modified algebra");
  chr->add_flag("--q1", q1, "q -> 1 limit");
  chr->add_flag("--unweighted", unweighted, "plain sum of k-th powers of the eigenvalues");
  chr->callback([&] { action = [&] { return spectral_character(lambda, pk, hat, q1, unweighted); }; });

  auto* verify = app.add_subcommand("verify", "acceptance suite");
  verify->require_subcommand(1);
  int vn = 2, vdeg = 4;
  std::vector<int> only;
  auto* all = verify->add_subcommand("all", "run criteria 1-11");
  all->add_option("--n", vn, "N of the Hecke symmetry");
  all->add_option("--degree", vdeg, "degree bound");
  all->add_option("--only", only, "run only these criteria");
  all->callback([&] { action = [&] { return verify_all(vn, vdeg, only); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  Report partial;
  for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
    sub = sub->get_subcommands().front();
    partial.command += (partial.command.empty() ? "" : " ") + sub->get_name();
  }
  try {
    Report r = action();
    return emit(g, r, r.pass ? "pass" : "fail", elapsed());
  } catch (const DegreeBoundExceeded& e) {
    emit(g, partial, "error", elapsed(), e.what());
    return kBound;
  } catch (const VerificationError& e) {
    emit(g, partial, "fail", elapsed(), e.what());
    return kFail;
  } catch (const Error& e) {
    return emit(g, partial, "error", elapsed(), e.what());
  }
}

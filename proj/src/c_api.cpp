#include "qop/qop.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "qop/arcs.hpp"
#include "qop/closed_form.hpp"
#include "qop/errors.hpp"
#include "qop/ff_oracle.hpp"
#include "qop/germ_io.hpp"
#include "qop/verify.hpp"

struct qop_germ {
  qop::GermFile file;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

template <class F>
int guarded(F&& fn) {
  try {
    last_error.clear();
    fn();
    return QOP_OK;
  } catch (const qop::ParseError& e) {
    last_error = e.what();
    return QOP_ERR_PARSE;
  } catch (const qop::ValidationError& e) {
    last_error = e.what();
    return QOP_ERR_VALIDATION;
  } catch (const qop::HypothesisError& e) {
    last_error = e.what();
    return QOP_ERR_HYPOTHESIS;
  } catch (const qop::BudgetError& e) {
    last_error = e.what();
    return QOP_ERR_BUDGET;
  } catch (const qop::MathError& e) {
    last_error = e.what();
    return QOP_ERR_MATH;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QOP_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw qop::ValidationError(std::string("null argument: ") + what);
}

qop::SeriesKind kind_of(int k) {
  if (k == QOP_GEOM) return qop::SeriesKind::geom;
  if (k == QOP_ARIT) return qop::SeriesKind::arit;
  throw qop::ValidationError("kind must be QOP_GEOM or QOP_ARIT");
}

json rat_vec(const std::vector<qop::Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json int_matrix(const qop::IntMatrix& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.get_si());
    a.push_back(r);
  }
  return a;
}

json pole_list(const std::vector<qop::Pole>& ps) {
  json a = json::array();
  for (const auto& p : ps)
    a.push_back({{"value", p.str()}, {"cyclotomic", p.d}, {"a", p.a}, {"b", p.b},
                 {"multiplicity", p.multiplicity}});
  return a;
}

// Arguments are checked before any work so that null pointers map to
// QOP_ERR_ARGUMENT rather than an internal error.
int arg_error(const char* what) {
  last_error = std::string("null or invalid argument: ") + what;
  return QOP_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* qop_last_error(void) { return last_error.c_str(); }

const char* qop_status_name(int s) {
  switch (s) {
    case QOP_OK: return "ok";
    case QOP_ERR_PARSE: return "parse error";
    case QOP_ERR_VALIDATION: return "validation error";
    case QOP_ERR_HYPOTHESIS: return "hypothesis not satisfied";
    case QOP_ERR_BUDGET: return "budget refusal";
    case QOP_ERR_MATH: return "arithmetic error";
    case QOP_ERR_INTERNAL: return "internal error";
    case QOP_ERR_ARGUMENT: return "invalid argument";
    default: return "unknown status";
  }
}

void qop_string_free(char* s) { std::free(s); }

int qop_germ_load_file(const char* path, qop_germ** out) {
  if (!path || !out) return arg_error("path/out");
  *out = nullptr;
  return guarded([&] { *out = new qop_germ{qop::load_germ_file(path)}; });
}

int qop_germ_parse(const char* text, qop_germ** out) {
  if (!text || !out) return arg_error("text/out");
  *out = nullptr;
  return guarded([&] { *out = new qop_germ{qop::parse_germ_text(text)}; });
}

int qop_germ_from_exponents(const char* const* entries, int g, int m, qop_germ** out) {
  if (!entries || !out || g < 1 || m < 1) return arg_error("entries/g/m/out");
  *out = nullptr;
  return guarded([&] {
    std::vector<qop::ExponentVector> ex(g);
    for (int k = 0; k < g; ++k)
      for (int i = 0; i < m; ++i) {
        need(entries[k * m + i], "entry");
        ex[k].push_back(qop::Rational::parse(entries[k * m + i]));
      }
    *out = new qop_germ{qop::GermFile{"", qop::Germ::from_exponents(ex), std::nullopt}};
  });
}

void qop_germ_free(qop_germ* g) { delete g; }

int qop_germ_dims(const qop_germ* g, int* m, int* levels, long* n) {
  if (!g) return arg_error("germ");
  if (m) *m = g->file.germ.m();
  if (levels) *levels = g->file.germ.g();
  if (n) *n = g->file.germ.n();
  return QOP_OK;
}

int qop_germ_has_polynomial(const qop_germ* g) { return g && g->file.f ? 1 : 0; }

int qop_germ_info(const qop_germ* gp, char** out) {
  if (!gp || !out) return arg_error("germ/out");
  return guarded([&] {
    const qop::Germ& G = gp->file.germ;
    json j;
    j["name"] = gp->file.name;
    j["m"] = G.m();
    j["g"] = G.g();
    j["n"] = G.n();
    json nk = json::array(), Nk = json::array(), ek = json::array(), ex = json::array(), ga = json::array();
    for (int k = 1; k <= G.g(); ++k) nk.push_back(G.nk(k));
    for (int k = 0; k <= G.g(); ++k) Nk.push_back(G.N(k)), ek.push_back(G.e(k));
    for (const auto& v : G.user_exponents()) ex.push_back(rat_vec(v));
    for (const auto& v : G.user_gamma()) ga.push_back(rat_vec(v));
    j["exponents"] = ex;
    j["n_k"] = nk;
    j["N_k"] = Nk;
    j["e_k"] = ek;
    j["gamma"] = ga;
    j["k"] = G.user_ki();
    j["i0"] = G.i0();
    json perm = json::array();
    for (int p : G.perm()) perm.push_back(p + 1);
    j["normalized_order"] = perm;
    j["ker_basis"] = int_matrix(G.ker_basis());
    j["closed_form_eligible"] = G.closed_form_eligible();
    j["has_polynomial"] = gp->file.f.has_value();
    *out = dup(j.dump());
  });
}

int qop_series(const qop_germ* gp, int kind, long order, int jobs, char** out) {
  if (!gp || !out || order < 0 || (kind != QOP_GEOM && kind != QOP_ARIT)) return arg_error("germ/kind/order/out");
  return guarded([&] {
    qop::SeriesEngine eng(gp->file.germ);
    json a = json::array();
    for (const auto& c : eng.series_prefix(kind_of(kind), order, jobs)) a.push_back(c.str());
    *out = dup(a.dump());
  });
}

int qop_series_eval(const qop_germ* gp, int kind, long order, const char* x, char** out) {
  if (!gp || !x || !out || order < 0 || (kind != QOP_GEOM && kind != QOP_ARIT)) return arg_error("germ/kind/order/x/out");
  return guarded([&] {
    qop::SeriesEngine eng(gp->file.germ);
    qop::CoeffPair c = eng.coefficient(order);
    const auto& lp = kind == QOP_GEOM ? c.geom : c.arit;
    *out = dup(lp.eval(qop::Rational::parse(x)).str());
  });
}

int qop_closed_form(const qop_germ* gp, int kind, char** out) {
  if (!gp || !out || (kind != QOP_GEOM && kind != QOP_ARIT)) return arg_error("germ/kind/out");
  return guarded([&] {
    const qop::Germ& G = gp->file.germ;
    qop::RationalFunction rf = kind == QOP_GEOM ? qop::geom_closed(G) : qop::arit_closed(G);
    json j;
    j["kind"] = kind == QOP_GEOM ? "geom" : "arit";
    j["rendering"] = rf.str();
    json f = json::array();
    for (const auto& [ab, k] : rf.factors()) f.push_back({{"a", ab.first}, {"b", ab.second}, {"mult", k}});
    j["denominator_factors"] = f;
    j["candidate_poles"] = pole_list(rf.candidate_poles());
    j["poles"] = pole_list(rf.genuine_poles());
    *out = dup(j.dump());
  });
}

int qop_verify(const qop_germ* gp, long order, int jobs, char** out, int* passed) {
  if (!gp || !out || order < 0) return arg_error("germ/order/out");
  return guarded([&] {
    auto rep = qop::run_verify(gp->file.germ, order, jobs);
    json a = json::array();
    for (const auto& it : rep.items)
      a.push_back({{"check", it.name}, {"passed", it.passed}, {"skipped", it.skipped}, {"detail", it.detail}});
    json j{{"order", order}, {"items", a}, {"passed", rep.passed()}};
    if (passed) *passed = rep.passed() ? 1 : 0;
    *out = dup(j.dump());
  });
}

int qop_ffcheck(const qop_germ* gp, long q, long pmax, long depth, long budget, int jobs, char** out,
                int* passed) {
  if (!gp || !out || pmax < 0) return arg_error("germ/pmax/out");
  return guarded([&] {
    if (!gp->file.f) throw qop::ValidationError("germ file has no defining polynomial \"f\"");
    const qop::Germ& G = gp->file.germ;
    qop::DefiningPoly f(G.m(), *gp->file.f);
    qop::OracleOptions opt;
    if (budget > 0) opt.budget = budget, opt.lift_envelope = true;
    opt.jobs = jobs < 1 ? 1 : jobs;
    long P = depth;
    if (P <= 0) P = qop::default_depth(G.m(), pmax);
    auto rep = qop::check_specialization(G, f, q, pmax, P, opt);
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"p", r.p}, {"count", r.count.count}, {"expected", r.expected.str()},
                      {"stable", r.count.stable}, {"match", r.match}, {"depth", r.count.depth},
                      {"count_prev", r.count.count_prev}, {"nodes", r.count.nodes}});
    json j{{"q", q}, {"polynomial", f.str()}, {"rows", rows}, {"passed", rep.passed()}};
    if (passed) *passed = rep.passed() ? 1 : 0;
    *out = dup(j.dump());
  });
}

}  // extern "C"

// qop: command-line front end over the C API.
#include <qop/qop.h>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudget = 3 };

constexpr long kDefaultOrderCap = 16;

int exit_for(int status) {
  switch (status) {
    case QOP_OK: return kOk;
    case QOP_ERR_PARSE:
    case QOP_ERR_VALIDATION:
    case QOP_ERR_HYPOTHESIS:
    case QOP_ERR_ARGUMENT: return kInputError;
    case QOP_ERR_BUDGET: return kBudget;
    default: return kVerifyFailed;
  }
}

struct GermHandle {
  qop_germ* g = nullptr;
  ~GermHandle() { qop_germ_free(g); }
};

// Takes ownership of a C string from the library.
std::string take(char* s) {
  std::string r = s ? s : "";
  qop_string_free(s);
  return r;
}

int fail(int status) {
  std::cerr << "qop: " << qop_status_name(status) << ": " << qop_last_error() << "\n";
  return exit_for(status);
}

std::string join(const json& a, const std::string& sep = ",") {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += sep;
    s += a[i].is_string() ? a[i].get<std::string>() : a[i].is_array() ? "[" + join(a[i]) + "]" : a[i].dump();
  }
  return s;
}

std::string list(const json& a) { return "[" + join(a) + "]"; }

bool order_allowed(long order, long cap) {
  if (order <= cap) return true;
  std::cerr << "qop: order " << order << " exceeds the cap " << cap << "; pass --order-cap to raise it\n";
  return false;
}

int cmd_info(const std::string& file, bool as_json) {
  GermHandle h;
  if (int s = qop_germ_load_file(file.c_str(), &h.g)) return fail(s);
  char* out = nullptr;
  if (int s = qop_germ_info(h.g, &out)) return fail(s);
  json j = json::parse(take(out));
  if (as_json) {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  if (!j["name"].get<std::string>().empty()) std::cout << "name=" << j["name"].get<std::string>() << "\n";
  std::cout << "n=" << j["n"] << " n_k=" << list(j["n_k"]) << " gamma=" << list(j["gamma"])
            << " k=" << list(j["k"]) << " i0=" << j["i0"] << "\n";
  std::cout << "m=" << j["m"] << " g=" << j["g"] << " N_k=" << list(j["N_k"]) << " e_k=" << list(j["e_k"])
            << "\n";
  std::cout << "exponents=" << list(j["exponents"]) << "\n";
  std::cout << "ker_basis=" << list(j["ker_basis"]) << "\n";
  return kOk;
}

int cmd_series(const std::string& file, const std::string& kind, long order, long cap, int jobs,
               bool as_json) {
  if (!order_allowed(order, cap)) return kBudget;
  GermHandle h;
  if (int s = qop_germ_load_file(file.c_str(), &h.g)) return fail(s);
  json geom, arit;
  char* out = nullptr;
  if (kind != "arit") {
    if (int s = qop_series(h.g, QOP_GEOM, order, jobs, &out)) return fail(s);
    geom = json::parse(take(out));
  }
  if (kind != "geom") {
    if (int s = qop_series(h.g, QOP_ARIT, order, jobs, &out)) return fail(s);
    arit = json::parse(take(out));
  }
  for (long p = 0; p <= order; ++p) {
    if (as_json) {
      json line{{"p", p}};
      if (!geom.is_null()) line["geom"] = geom[p];
      if (!arit.is_null()) line["arit"] = arit[p];
      std::cout << line.dump() << "\n";
    } else if (kind == "both") {
      std::cout << "p=" << p << " geom=" << geom[p].get<std::string>() << " arit=" << arit[p].get<std::string>()
                << "\n";
    } else {
      const json& c = kind == "geom" ? geom : arit;
      std::cout << "p=" << p << " coeff=" << c[p].get<std::string>() << "\n";
    }
  }
  return kOk;
}

int cmd_closed_form(const std::string& file, const std::string& kind, bool as_json) {
  GermHandle h;
  if (int s = qop_germ_load_file(file.c_str(), &h.g)) return fail(s);
  for (int k : {QOP_GEOM, QOP_ARIT}) {
    if ((k == QOP_GEOM && kind == "arit") || (k == QOP_ARIT && kind == "geom")) continue;
    char* out = nullptr;
    if (int s = qop_closed_form(h.g, k, &out)) return fail(s);
    json j = json::parse(take(out));
    if (as_json) {
      std::cout << j.dump() << "\n";
      continue;
    }
    std::cout << "kind=" << j["kind"].get<std::string>() << "\n";
    std::cout << "rf=" << j["rendering"].get<std::string>() << "\n";
    std::string f;
    for (const auto& x : j["denominator_factors"]) {
      if (!f.empty()) f += ", ";
      f += "(1 - L^" + std::to_string(x["a"].get<long>()) + " T^" + std::to_string(x["b"].get<long>()) + ")";
      if (x["mult"].get<int>() > 1) f += "^" + std::to_string(x["mult"].get<int>());
    }
    std::cout << "factors=" << f << "\n";
    std::string c, p;
    for (const auto& x : j["candidate_poles"]) c += (c.empty() ? "" : ", ") + x["value"].get<std::string>();
    for (const auto& x : j["poles"]) p += (p.empty() ? "" : ", ") + x["value"].get<std::string>();
    std::cout << "candidate_poles=" << c << "\n";
    std::cout << "poles=" << p << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& file, long order, long cap, int jobs, bool as_json) {
  if (!order_allowed(order, cap)) return kBudget;
  GermHandle h;
  if (int s = qop_germ_load_file(file.c_str(), &h.g)) return fail(s);
  char* out = nullptr;
  int passed = 0;
  if (int s = qop_verify(h.g, order, jobs, &out, &passed)) return fail(s);
  json j = json::parse(take(out));
  for (const auto& it : j["items"]) {
    if (as_json) {
      std::cout << it.dump() << "\n";
      continue;
    }
    std::string tag = it["skipped"].get<bool>() ? "SKIP" : (it["passed"].get<bool>() ? "PASS" : "FAIL");
    std::cout << tag << " " << it["check"].get<std::string>() << ": " << it["detail"].get<std::string>() << "\n";
  }
  if (!as_json) std::cout << "verify: " << (passed ? "passed" : "FAILED") << "\n";
  return passed ? kOk : kVerifyFailed;
}

int cmd_ffcheck(const std::string& file, long q, long pmax, long depth, long budget, int jobs, bool as_json) {
  GermHandle h;
  if (int s = qop_germ_load_file(file.c_str(), &h.g)) return fail(s);
  char* out = nullptr;
  int passed = 0;
  if (int s = qop_ffcheck(h.g, q, pmax, depth, budget, jobs, &out, &passed)) return fail(s);
  json j = json::parse(take(out));
  for (const auto& r : j["rows"]) {
    if (as_json) {
      json line{{"p", r["p"]}, {"count", r["count"]}, {"expected", r["expected"]}, {"stable", r["stable"]}};
      std::cout << line.dump() << "\n";
    } else {
      std::cout << "p=" << r["p"] << " count=" << r["count"] << " expected=" << r["expected"].get<std::string>()
                << " stable=" << (r["stable"].get<bool>() ? "true" : "false") << " depth=" << r["depth"]
                << " " << (r["match"].get<bool>() ? "ok" : "MISMATCH") << "\n";
    }
  }
  if (!as_json) std::cout << "ffcheck q=" << q << ": " << (passed ? "passed" : "FAILED") << "\n";
  return passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motivic Poincare series of quasi-ordinary germs"};
  app.require_subcommand(1);

  std::string file, kind = "geom";
  long order = 8, cap = kDefaultOrderCap, q = 5, depth = 0, budget = 0;
  int jobs = 1;
  bool as_json = false;

  auto* info = app.add_subcommand("info", "derived lattice data of a germ");
  info->add_option("germ", file, "germ JSON file")->required();
  info->add_flag("--json", as_json, "machine-readable output");

  auto* series = app.add_subcommand("series", "coefficients by stratified enumeration");
  series->add_option("germ", file, "germ JSON file")->required();
  series->add_option("--kind", kind, "geom, arit or both")->check(CLI::IsMember({"geom", "arit", "both"}));
  series->add_option("--order", order, "highest order P")->check(CLI::NonNegativeNumber);
  series->add_option("--order-cap", cap, "raise the order cap (default 16)");
  series->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  series->add_flag("--json", as_json, "one JSON object per line");

  auto* closed = app.add_subcommand("closed-form", "closed-form rational function");
  closed->add_option("germ", file, "germ JSON file")->required();
  closed->add_option("--kind", kind, "geom, arit or both")->check(CLI::IsMember({"geom", "arit", "both"}));
  closed->add_flag("--json", as_json, "one JSON object per line");

  auto* verify = app.add_subcommand("verify", "cross-route consistency checks");
  verify->add_option("germ", file, "germ JSON file")->required();
  verify->add_option("--order", order, "highest order P")->check(CLI::NonNegativeNumber);
  verify->add_option("--order-cap", cap, "raise the order cap (default 16)");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", as_json, "one JSON object per line");

  auto* ff = app.add_subcommand("ffcheck", "finite-field truncation counts against the arithmetic series");
  ff->add_option("germ", file, "germ JSON file with \"f\"")->required();
  ff->add_option("--q", q, "prime with q = 1 mod n");
  ff->add_option("--order", order, "highest order pMax")->check(CLI::NonNegativeNumber);
  ff->add_option("--depth", depth, "lift search depth P (default: envelope maximum)");
  ff->add_option("--budget", budget, "node budget; lifts the default envelope");
  ff->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  ff->add_flag("--json", as_json, "one JSON object per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  if (*info) return cmd_info(file, as_json);
  if (*series) return cmd_series(file, kind, order, cap, jobs, as_json);
  if (*closed) return cmd_closed_form(file, kind, as_json);
  if (*verify) return cmd_verify(file, order, cap, jobs, as_json);
  if (*ff) {
    if (ff->count("--order") == 0) order = 3;
    return cmd_ffcheck(file, q, order, depth, budget, jobs, as_json);
  }
  return kInputError;
}

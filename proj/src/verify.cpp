#include "qop/verify.hpp"

#include <algorithm>

#include "qop/arcs.hpp"
#include "qop/closed_form.hpp"
#include "qop/errors.hpp"

namespace qop {

bool VerifyReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.passed; });
}

long overlap_by_enumeration(const Germ& G, long p, const OrderVector& l) {
  auto s = classify(G, p, l);
  if (!s) throw ValidationError("order vector is not in D(m)_p");
  if (s->kind == StratumKind::C1) return 1;
  long count = 0;
  for (const auto& other : enumerate_D(G, p)) {
    bool same = true;
    for (int i = 0; i < G.m() && same; ++i) {
      if (l[i] <= p && other.l[i] != l[i]) same = false;
      if ((l[i] > p) != (other.l[i] > p)) same = false;
    }
    if (same && G.b(s->k_level, l) == G.b(s->k_level, other.l)) ++count;
  }
  return count;
}

namespace {

std::string first_mismatch(const SeriesPrefix& a, const SeriesPrefix& b) {
  for (size_t p = 0; p < std::min(a.size(), b.size()); ++p)
    if (!(a[p] == b[p])) return "T^" + std::to_string(p) + ": " + a[p].str() + " vs " + b[p].str();
  return "";
}

VerifyItem compare(const std::string& name, const SeriesPrefix& a, const SeriesPrefix& b) {
  VerifyItem it{name, true, false, ""};
  std::string d = first_mismatch(a, b);
  if (!d.empty()) it.passed = false, it.detail = "differs at " + d;
  else it.detail = "equal through T^" + std::to_string(a.size() - 1);
  return it;
}

}  // namespace

VerifyReport run_verify(const Germ& G, long P, int jobs) {
  VerifyReport rep;
  SeriesEngine eng(G);
  auto pre = eng.prefix(P, jobs);
  SeriesPrefix geom, arit;
  for (const auto& c : pre) geom.push_back(c.geom), arit.push_back(c.arit);

  if (G.closed_form_eligible()) {
    rep.items.push_back(compare("closed form vs enumeration (geom)", geom_closed(G).expand(P), geom));
    rep.items.push_back(compare("closed form vs enumeration (arit)", arit_closed(G).expand(P), arit));
    if (G.key() == "[3/2,3/2]") {
      RationalFunction w(BiPoly(pow(LaurentPoly(1) + LaurentPoly::L(), 2)));
      bool eq = rf_eq(w * geom_closed(G), z2x3y3_display());
      rep.items.push_back({"published four-term display", eq, false,
                           eq ? "rf_eq holds after scaling by (1+L)^2" : "rf_eq fails"});
    }
  } else {
    rep.items.push_back({"closed form vs enumeration", true, true, "needs a_i(1) >= 1 for every i"});
  }

  auto le = lemma_E_check(G, 40);
  rep.items.push_back({"Lemma E identities", le.passed, false,
                       le.passed ? std::to_string(le.checks) + " checks" : le.failures.front()});
  auto ce = corollary_Eprime_check(G, P);
  rep.items.push_back({"Corollary E'", ce.passed, false,
                       ce.passed ? "equal through T^" + std::to_string(P) : ce.failures.front()});

  if (G.m() == 1 && G.closed_form_eligible()) {
    PlaneBranch b = PlaneBranch::from_germ(G);
    bool eq = rf_eq(plane_geom(b), geom_closed(G));
    rep.items.push_back({"plane geometric display = closed form", eq, false, eq ? "rf_eq holds" : "rf_eq fails"});
    rep.items.push_back(compare("plane geometric display vs enumeration", plane_geom(b).expand(P), geom));
    rep.items.push_back(compare("plane arithmetic display vs enumeration", plane_arit(b).expand(P), arit));
    auto printed = plane_arit_printed(b).expand(P);
    std::string d = first_mismatch(printed, arit);
    rep.items.push_back({"printed arithmetic display differs (erratum)", !d.empty(), false,
                         d.empty() ? "printed display unexpectedly matches" : "printed vs engine at " + d});
  } else {
    rep.items.push_back({"plane-branch displays", true, true, "needs m = 1 and a(1) >= 1"});
  }

  VerifyItem ov{"overlap lemma on C2 strata", true, false, ""};
  long c2 = 0;
  for (long p = 1; p <= std::min<long>(P, 6); ++p)
    for (const auto& st : enumerate_D(G, p)) {
      if (st.label.kind != StratumKind::C2) continue;
      ++c2;
      long e = overlap_by_enumeration(G, p, st.l);
      if (e != st.label.overlap && ov.passed) {
        ov.passed = false;
        std::string lv;
        for (long x : G.to_user(st.l)) lv += (lv.empty() ? "" : ",") + std::to_string(x);
        ov.detail = "p=" + std::to_string(p) + " l=(" + lv + "): N=" + std::to_string(st.label.overlap) +
                    " but " + std::to_string(e) + " vectors share the truncation class";
      }
    }
  if (ov.passed) ov.detail = std::to_string(c2) + " C2 strata checked for p <= " + std::to_string(std::min<long>(P, 6));
  rep.items.push_back(ov);
  return rep;
}

}  // namespace qop

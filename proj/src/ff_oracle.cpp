#include "qop/ff_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "qop/arcs.hpp"
#include "qop/errors.hpp"

namespace qop {

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

DefiningPoly::DefiningPoly(int m, std::vector<Monomial> terms) : m_(m) {
  for (const auto& t : terms) {
    if (static_cast<int>(t.exps.size()) != m + 1)
      throw ValidationError("monomial has " + std::to_string(t.exps.size()) + " exponents, expected " +
                            std::to_string(m + 1));
    if (t.coeff == 0) continue;
    bool pure_y = true;
    int deg = 0;
    for (int i = 0; i <= m; ++i) {
      if (t.exps[i] < 0) throw ValidationError("negative monomial exponent");
      deg += t.exps[i];
      if (i < m && t.exps[i]) pure_y = false;
    }
    if (deg == 0) throw ValidationError("f has a constant term, so the origin is not on f");
    if (pure_y) {
      if (n_ || t.coeff != 1)
        throw ValidationError("f(0,...,0,Y) must be Y^n with coefficient 1");
      n_ = t.exps[m];
    }
    mu_ = mu_ ? std::min(mu_, deg) : deg;
    terms_.push_back(t);
  }
  if (!n_) throw ValidationError("f has no pure Y^n term");
  for (const auto& t : terms_)
    if (t.exps[m] > n_) throw ValidationError("f is not monic of degree n in Y");
}

std::string DefiningPoly::str() const {
  std::string s;
  for (const auto& t : terms_) {
    std::string mono;
    for (int i = 0; i <= m_; ++i) {
      if (!t.exps[i]) continue;
      mono += (mono.empty() ? "" : "*") + (i < m_ ? "X" + std::to_string(i + 1) : std::string("Y"));
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    long c = t.coeff;
    std::string sign = c < 0 ? " - " : " + ";
    if (s.empty()) sign = c < 0 ? "-" : "";
    long a = c < 0 ? -c : c;
    s += sign + (a == 1 ? mono : std::to_string(a) + "*" + mono);
  }
  return s;
}

bool within_envelope(int m, long q, long p, long P) {
  if (m == 1) return q <= 5 && p <= 3 && P <= 12;
  if (m == 2) return q <= 3 && p <= 1 && P <= 8;
  return false;
}

long default_depth(int m, long pmax) {
  if (m == 1) return 12;
  if (m == 2) return 8;
  return pmax + 2;
}

namespace {

// Depth-first search over the t-adic coefficients x_v = sum_{d>=1} c_{v,d} t^d.
class Search {
 public:
  Search(const DefiningPoly& f, long q, long p, long P, long budget, std::atomic<long>& nodes)
      : f_(f), q_(q), p_(p), P_(P), budget_(budget), nodes_(nodes) {
    nv_ = f.m() + 1;
    D_ = std::max(p, P - f.min_degree() + 1);
    kmax_.assign(nv_, 0);
    for (const auto& t : f.terms())
      for (int v = 0; v < nv_; ++v) kmax_[v] = std::max(kmax_[v], t.exps[v]);
    for (const auto& t : f.terms()) {
      Term tt;
      tt.c = ((t.coeff % q) + q) % q;
      for (int v = 0; v < nv_; ++v)
        if (t.exps[v]) tt.vars.push_back({v, t.exps[v]});
      if (tt.c) terms_.push_back(tt);
    }
    coef_.assign(nv_, std::vector<long>(D_ + 2, 0));
    pw_.resize(nv_);
    for (int v = 0; v < nv_; ++v) {
      pw_[v].assign(kmax_[v] + 1, std::vector<long>(P_ + 1, 0));
      pw_[v][0][0] = 1;
    }
    combos_ = 1;
    for (int v = 0; v < nv_; ++v) combos_ *= q;
  }

  long combos() const { return combos_; }

  // Truncations whose level-1 choice index lies in [lo, hi).
  long count(long lo, long hi) {
    count_ = 0;
    if (p_ == 0) return 1;
    for (long c = lo; c < hi; ++c)
      if (place(1, c)) enumerate(2);
    return count_;
  }

 private:
  struct Term {
    long c;
    std::vector<std::pair<int, int>> vars;
  };

  void tick() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
      throw BudgetError("finite-field search exceeded its node budget of " + std::to_string(budget_));
  }

  // coefficient of t^E in prod over vars of x_v^e, from the power tables
  long conv(const Term& t, size_t i, long E) const {
    auto [v, e] = t.vars[i];
    if (i + 1 == t.vars.size()) return pw_[v][e][E];
    long rest_min = 0;
    for (size_t j = i + 1; j < t.vars.size(); ++j) rest_min += t.vars[j].second;
    long s = 0;
    for (long a = e; a + rest_min <= E; ++a) {
      long x = pw_[v][e][a];
      if (x) s = (s + x * conv(t, i + 1, E - a)) % q_;
    }
    return s;
  }

  // Sets level d from choice index c, updates power tables, checks f.
  bool place(long d, long c) {
    tick();
    for (int v = 0; v < nv_; ++v) {
      coef_[v][d] = c % q_;
      c /= q_;
    }
    for (int v = 0; v < nv_; ++v)
      for (int k = 1; k <= kmax_[v]; ++k) {
        long E = d + k - 1;
        if (E > P_) break;
        long s = 0;
        for (long a = k - 1; a <= E - 1; ++a) {
          long x = pw_[v][k - 1][a];
          if (x) s = (s + x * coef_[v][E - a]) % q_;
        }
        pw_[v][k][E] = s;
      }
    long E = d + f_.min_degree() - 1;
    if (E > P_) return true;
    long s = 0;
    for (const auto& t : terms_) {
      long deg = 0;
      for (auto [v, e] : t.vars) deg += e;
      if (deg > E) continue;
      s = (s + t.c * conv(t, 0, E)) % q_;
    }
    return s == 0;
  }

  void enumerate(long d) {
    if (d > p_) {
      if (extend(d)) ++count_;
      return;
    }
    for (long c = 0; c < combos_; ++c)
      if (place(d, c)) enumerate(d + 1);
  }

  bool extend(long d) {
    if (d > D_) return true;
    for (long c = 0; c < combos_; ++c)
      if (place(d, c) && extend(d + 1)) return true;
    return false;
  }

  const DefiningPoly& f_;
  long q_, p_, P_, budget_;
  std::atomic<long>& nodes_;
  int nv_ = 0;
  long D_ = 0;
  long combos_ = 1;
  long count_ = 0;
  std::vector<int> kmax_;
  std::vector<Term> terms_;
  std::vector<std::vector<long>> coef_;
  std::vector<std::vector<std::vector<long>>> pw_;
};

long count_at(const DefiningPoly& f, long q, long p, long P, const OracleOptions& opt, long& nodes) {
  std::atomic<long> counter{0};
  Search probe(f, q, p, P, opt.budget, counter);
  const long total = probe.combos();
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(total)));
  long result = 0;
  if (jobs == 1 || p == 0) {
    result = probe.count(0, total);
  } else {
    std::vector<long> part(jobs, 0);
    std::vector<std::exception_ptr> errs(jobs);
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        try {
          Search s(f, q, p, P, opt.budget, counter);
          part[w] = s.count(total * w / jobs, total * (w + 1) / jobs);
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
    for (long x : part) result += x;
  }
  nodes += counter.load();
  return result;
}

}  // namespace

TruncCount count_truncations(const DefiningPoly& f, long q, long p, long P, const OracleOptions& opt) {
  if (!is_prime(q)) throw ValidationError("q = " + std::to_string(q) + " is not prime");
  if (f.y_degree() % q == 0)
    throw ValidationError("q = " + std::to_string(q) + " divides n = " + std::to_string(f.y_degree()));
  if (p < 0) throw ValidationError("order must be nonnegative");
  if (P < p) throw ValidationError("search depth must be at least p");
  if (!opt.lift_envelope && !within_envelope(f.m(), q, p, P))
    throw BudgetError("run (m=" + std::to_string(f.m()) + ", q=" + std::to_string(q) +
                      ", p=" + std::to_string(p) + ", P=" + std::to_string(P) +
                      ") is outside the default envelope; pass an explicit budget to allow it");
  TruncCount r;
  r.q = q;
  r.p = p;
  r.depth = P;
  r.count = count_at(f, q, p, P, opt, r.nodes);
  if (P > p) {
    r.count_prev = count_at(f, q, p, P - 1, opt, r.nodes);
    r.stable = r.count_prev == r.count;
  } else {
    r.count_prev = r.count;
    r.stable = p == 0;
  }
  return r;
}

bool SpecializationReport::passed() const {
  for (const auto& r : rows)
    if (!r.match) return false;
  return true;
}

SpecializationReport check_specialization(const Germ& G, const DefiningPoly& f, long q, long pmax,
                                          long P, const OracleOptions& opt) {
  if (f.m() != G.m()) throw ValidationError("f and the germ have different numbers of variables");
  if (f.y_degree() != G.n())
    throw ValidationError("f has Y-degree " + std::to_string(f.y_degree()) + " but the germ has n = " +
                          std::to_string(G.n()));
  if (q % G.n() != 1)
    throw ValidationError("q = " + std::to_string(q) + " must satisfy q = 1 mod n = " +
                          std::to_string(G.n()));
  SeriesEngine eng(G);
  auto arit = eng.series_prefix(SeriesKind::arit, pmax, opt.jobs);
  SpecializationReport rep;
  rep.q = q;
  for (long p = 0; p <= pmax; ++p) {
    SpecializationRow row;
    row.p = p;
    row.count = count_truncations(f, q, p, std::max(P, p), opt);
    row.expected = arit[p].eval(Rational(q));
    row.match = row.count.stable && row.expected == Rational(row.count.count);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace qop

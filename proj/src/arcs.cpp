#include "qop/arcs.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "qop/errors.hpp"

namespace qop {

namespace {

long coordinate_bound(const Germ& G, long p, int j) {
  // C2 coordinates satisfy a_j(k_j) l_j <= b_{k_j}(l) <= p
  const Rational& a = G.a(G.k_of(j), j);
  long b = (Rational(p) / a).floor().get_si();
  return std::max(p, b);
}

}  // namespace

std::optional<StratumLabel> classify(const Germ& G, long p, const OrderVector& l) {
  const int m = G.m(), g = G.g();
  for (long x : l)
    if (x < 1) return std::nullopt;
  if (!G.in_ker(l)) return std::nullopt;
  std::vector<Rational> bk(g + 1);
  for (int k = 0; k <= g; ++k) bk[k] = G.b(k, l);

  StratumLabel s;
  Rational best;
  for (int j = 0; j < m; ++j) {
    Rational v = Rational(l[j]) - bk[G.k_of(j)];
    if (j == 0 || v > best) best = v, s.pivot = j;
  }
  for (int j = 0; j < m; ++j)
    if (l[j] > p) s.I.push_back(j);
  s.q = static_cast<int>(s.I.size());

  if (s.I.empty()) {
    s.kind = StratumKind::C1;
    s.e = best.sign() > 0 ? best.num().get_si() : 0;
    Rational lim(p - s.e);
    s.k_level = 0;
    for (int k = 1; k <= g; ++k)
      if (bk[k] <= lim) s.k_level = k;
    s.overlap = 1;
    return s;
  }

  const int r = G.k_of(s.I[0]);
  for (int j : s.I)
    if (G.k_of(j) != r) return std::nullopt;
  if (bk[r] > Rational(p)) return std::nullopt;
  for (int j = 0; j < m; ++j)
    if (G.k_of(j) < r && Rational(p - l[j]) < bk[r] - bk[G.k_of(j)]) return std::nullopt;
  s.kind = StratumKind::C2;
  s.k_level = r;
  if (std::find(s.I.begin(), s.I.end(), s.pivot) == s.I.end())
    throw InternalError("C2 pivot outside I");
  s.overlap = overlap_count(G, p, l, s);
  return s;
}

std::vector<Stratum> enumerate_D(const Germ& G, long p) {
  std::vector<Stratum> out;
  if (p <= 0) return out;
  const int m = G.m();
  std::vector<long> hi(m);
  for (int j = 0; j < m; ++j) hi[j] = coordinate_bound(G, p, j);
  OrderVector l(m, 1);
  while (true) {
    if (auto s = classify(G, p, l)) out.push_back({l, *s});
    int j = m - 1;
    while (j >= 0 && l[j] == hi[j]) l[j--] = 1;
    if (j < 0) break;
    ++l[j];
  }
  return out;
}

long overlap_count(const Germ& G, long p, const OrderVector& l, const StratumLabel& s) {
  if (s.kind == StratumKind::C1) return 1;
  const int r = s.k_level;
  const long n = G.n();
  const size_t q = s.I.size();
  std::vector<long> c(q), hi(q), lo(q);
  for (size_t t = 0; t < q; ++t) {
    c[t] = (G.a(r, s.I[t]) * Rational(n)).num().get_si();
    hi[t] = l[s.I[t]] - p - 1;
  }
  long pos = 0;
  for (size_t t = 0; t < q; ++t) pos += c[t] * hi[t];
  for (size_t t = 0; t < q; ++t) {
    // c_t u_t = -(sum of the others) >= -rest, and rest >= 0
    long rest = pos - c[t] * hi[t];
    lo[t] = -(rest / c[t]);
  }
  long count = 0;
  std::vector<long> u(q);
  OrderVector lp = l;
  std::function<void(size_t, long)> rec = [&](size_t t, long sum) {
    if (t == q) {
      if (sum != 0) return;
      for (size_t i = 0; i < q; ++i) lp[s.I[i]] = l[s.I[i]] - u[i];
      if (G.in_ker(lp)) ++count;
      return;
    }
    for (long x = lo[t]; x <= hi[t]; ++x) {
      u[t] = x;
      rec(t + 1, sum + c[t] * x);
    }
  };
  rec(0, 0);
  if (count < 1) throw InternalError("overlap count is zero");
  return count;
}

LaurentPoly class_geom(const Germ& G, long p, const OrderVector& l, const StratumLabel& s) {
  const long m = G.m();
  long sum = 0;
  if (s.kind == StratumKind::C1) {
    for (long x : l) sum += x;
    long e = p * m - sum + s.e;
    if (e < 0) throw InternalError("negative class exponent in C1 stratum");
    return pow(LaurentPoly::L() - 1, m) * LaurentPoly::L(e);
  }
  for (int j = 0; j < m; ++j)
    if (std::find(s.I.begin(), s.I.end(), j) == s.I.end()) sum += l[j];
  Rational br = G.b(s.k_level, l);
  if (!br.is_integer()) throw InternalError("C2 vector outside Ker M");
  const long d = m - s.q + 1;
  long e = p * d - sum - br.num().get_si();
  if (e < 0) throw InternalError("negative class exponent in C2 stratum");
  return pow(LaurentPoly::L() - 1, d) * LaurentPoly::L(e);
}

LaurentPoly class_arit(const Germ& G, long p, const OrderVector& l, const StratumLabel& s) {
  LaurentPoly c = class_geom(G, p, l, s);
  if (s.kind == StratumKind::C1) return c.scaled(Rational(G.N(s.k_level), G.n()));
  std::vector<int> J;
  for (int j = 0; j < G.m(); ++j)
    if (j == s.pivot || std::find(s.I.begin(), s.I.end(), j) == s.I.end()) J.push_back(j);
  return c.scaled(Rational(1, G.group_order(s.k_level, J)));
}

CoeffPair toric_part(const Germ& G, long p) {
  CoeffPair r;
  for (const auto& st : enumerate_D(G, p)) {
    Rational w(1, st.label.overlap);
    r.geom += class_geom(G, p, st.l, st.label).scaled(w);
    r.arit += class_arit(G, p, st.l, st.label).scaled(w);
  }
  if (!r.geom.has_integer_coeffs()) throw InternalError("non-integral geometric torus part");
  return r;
}

SeriesEngine::SeriesEngine(Germ germ, ComplementRule rule)
    : germ_(std::move(germ)), rule_(rule), memo_(std::make_shared<Memo>()) {}

CoeffPair SeriesEngine::toric_of(const Germ& G, long p) const {
  auto key = std::make_pair(G.key(), p);
  {
    std::lock_guard<std::mutex> lk(memo_->mu);
    auto it = memo_->toric.find(key);
    if (it != memo_->toric.end()) return it->second;
  }
  CoeffPair r = toric_part(G, p);
  std::lock_guard<std::mutex> lk(memo_->mu);
  memo_->toric.emplace(key, r);
  return r;
}

CoeffPair SeriesEngine::coefficient_of(const Germ& G, long p) const {
  if (p == 0) return {LaurentPoly(1), LaurentPoly(1)};
  auto key = std::make_pair(G.key(), p);
  {
    std::lock_guard<std::mutex> lk(memo_->mu);
    auto it = memo_->full.find(key);
    if (it != memo_->full.end()) return it->second;
  }
  CoeffPair t = toric_of(G, p), c = cn_of(G, p);
  CoeffPair r{t.geom + c.geom, t.arit + c.arit};
  std::lock_guard<std::mutex> lk(memo_->mu);
  memo_->full.emplace(key, r);
  return r;
}

CoeffPair SeriesEngine::cn_of(const Germ& G, long p) const {
  const int m = G.m();
  const LaurentPoly Lp = LaurentPoly::L(p);
  CoeffPair r;
  if (rule_ == ComplementRule::printed) {
    for (int i = 1; i <= m; ++i) {
      LaurentPoly w = LaurentPoly::L(p * (m - i));
      if (i <= G.i0()) {
        LaurentPoly t = w * pow(Lp - 1, i - 1);
        r.geom += t;
        r.arit += t;
      } else {
        CoeffPair sub = coefficient_of(G.reduced(i - 1), p);
        r.geom += w * sub.geom;
        r.arit += w * sub.arit;
      }
    }
    return r;
  }
  for (int k = 1; k <= G.g(); ++k) {
    long v = 0, h = 0;
    for (int j = 0; j < m; ++j) {
      if (G.k_of(j) == k) ++v;
      if (G.k_of(j) > k) ++h;
    }
    if (v == 0) continue;
    LaurentPoly w = (pow(Lp, v) - pow(Lp - 1, v)) * LaurentPoly::L(p * h);
    if (k == 1) {
      r.geom += w;
      r.arit += w;
    } else {
      CoeffPair sub = toric_of(*G.below_level(k), p);
      r.geom += w * sub.geom;
      r.arit += w * sub.arit;
    }
  }
  return r;
}

CoeffPair SeriesEngine::toric(long p) const { return toric_of(germ_, p); }

CoeffPair SeriesEngine::cn_part(long p) const {
  if (p < 1) throw ValidationError("complement part is defined for p >= 1");
  return cn_of(germ_, p);
}

CoeffPair SeriesEngine::coefficient(long p) const {
  if (p < 0) throw ValidationError("order must be nonnegative");
  return coefficient_of(germ_, p);
}

std::vector<CoeffPair> SeriesEngine::prefix(long P, int jobs) const {
  if (P < 0) throw ValidationError("order must be nonnegative");
  std::vector<CoeffPair> out(P + 1);
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(P + 1)));
  if (jobs == 1) {
    for (long p = 0; p <= P; ++p) out[p] = coefficient(p);
    return out;
  }
  // largest orders first: they dominate the cost
  std::atomic<long> next{P};
  std::vector<std::exception_ptr> errs(jobs);
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        for (long p; (p = next.fetch_sub(1)) >= 0;) out[p] = coefficient(p);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

SeriesPrefix SeriesEngine::series_prefix(SeriesKind kind, long P, int jobs) const {
  SeriesPrefix out;
  for (const auto& c : prefix(P, jobs)) out.push_back(kind == SeriesKind::geom ? c.geom : c.arit);
  return out;
}

}  // namespace qop

#include "qop/closed_form.hpp"

#include <functional>
#include <random>

#include "qop/errors.hpp"

namespace qop {

namespace {

// Calls fn(l) for every l with 1 <= l_i <= hi_i.
void for_box(const std::vector<long>& hi, const std::function<void(const OrderVector&)>& fn) {
  const size_t m = hi.size();
  for (long h : hi)
    if (h < 1) return;
  OrderVector l(m, 1);
  while (true) {
    fn(l);
    size_t j = m;
    while (j > 0 && l[j - 1] == hi[j - 1]) l[--j] = 1;
    if (j == 0) return;
    ++l[j - 1];
  }
}

long total(const OrderVector& l) {
  long s = 0;
  for (long x : l) s += x;
  return s;
}

std::vector<SignVector> all_signs(int m) {
  std::vector<SignVector> out;
  for (long mask = 0; mask < (1L << m); ++mask) {
    SignVector s(m);
    for (int i = 0; i < m; ++i) s[i] = (mask >> i) & 1;
    out.push_back(s);
  }
  return out;
}

int weight(const SignVector& s) {
  int w = 0;
  for (int x : s) w += x;
  return w;
}

void require_eligible(const Germ& G) {
  for (int i = 0; i < G.m(); ++i)
    if (G.a(1, i) < Rational(1))
      throw HypothesisError("closed form requires a_i(1) >= 1 for every i, but a_" +
                            std::to_string(G.perm()[i] + 1) + "(1) = " + G.a(1, i).str());
}

LaurentPoly Lm1() { return LaurentPoly::L() - 1; }

}  // namespace

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

LaurentPoly E_box(const Germ& G, const std::vector<long>& bounds) {
  if (static_cast<int>(bounds.size()) != G.m()) throw ValidationError("box has wrong dimension");
  LaurentPoly r;
  for_box(bounds, [&](const OrderVector& l) {
    if (G.in_ker(l)) r.add_term(-total(l), 1);
  });
  return r;
}

LaurentPoly E_cube(const Germ& G, long p) { return E_box(G, std::vector<long>(G.m(), p)); }

LaurentPoly E_ps(const Germ& G, long p, const SignVector& s) {
  if (p < 1 || p > G.n()) throw ValidationError("E_{p,s} needs 1 <= p <= n");
  if (static_cast<int>(s.size()) != G.m()) throw ValidationError("sign vector has wrong length");
  std::vector<long> b(G.m());
  for (int i = 0; i < G.m(); ++i) b[i] = s[i] ? G.n() : p;
  return E_box(G, b);
}

LaurentPoly F_sum(const Germ& G, int k, long p) {
  LaurentPoly r;
  for_box(std::vector<long>(G.m(), p), [&](const OrderVector& l) {
    if (G.in_ker(l) && G.b(k, l) <= Rational(p)) r.add_term(-total(l), 1);
  });
  return r;
}

LaurentPoly F_sum_unboxed(const Germ& G, int k, long p) {
  std::vector<long> hi(G.m());
  for (int i = 0; i < G.m(); ++i) {
    if (G.a(k, i).sign() <= 0) throw HypothesisError("unboxed F sum needs a_i(k) > 0");
    hi[i] = (Rational(p) / G.a(k, i)).floor().get_si();
  }
  LaurentPoly r;
  for_box(hi, [&](const OrderVector& l) {
    if (G.in_ker(l) && G.b(k, l) <= Rational(p)) r.add_term(-total(l), 1);
  });
  return r;
}

BiPoly H_sum(const Germ& G, int k) {
  BiPoly r;
  const long m = G.m();
  for_box(std::vector<long>(G.m(), G.n()), [&](const OrderVector& l) {
    if (!G.in_ker(l)) return;
    Rational b = G.b(k, l);
    if (!b.is_integer()) throw InternalError("b_k is not integral on Ker M");
    long t = b.num().get_si();
    r += BiPoly::monomial(1, m * t - total(l), t);
  });
  return r;
}

RationalFunction E_series(const Germ& G) {
  const int m = G.m();
  const long n = G.n();
  RationalFunction out;
  const LaurentPoly base = LaurentPoly::L(-n) - 1;
  for (int w = 0; w <= m; ++w) {
    BiPoly A;
    for (long p = 1; p <= n; ++p)
      for (const auto& s : all_signs(m))
        if (weight(s) == w) A += BiPoly(E_ps(G, p, s)).shifted(m * p, p);
    if (A.is_zero()) continue;
    RationalFunction S;
    for (int j = 0; j <= w; ++j) {
      Integer c = binomial(w, j);
      if (j % 2) c = -c;
      S += RationalFunction::geometric(j * n, n).scaled(Rational(c));
    }
    out += S.divide_L(pow(base, w)) * RationalFunction(A);
  }
  return out;
}

namespace {

RationalFunction complement_closed(int m) {
  RationalFunction r;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      Integer c = binomial(i, i - j);
      if (j % 2) c = -c;
      r += RationalFunction::geometric(m - j - 1, 1).scaled(Rational(c));
    }
  return r;
}

}  // namespace

RationalFunction geom_closed(const Germ& G) {
  require_eligible(G);
  return (complement_closed(G.m()) + E_series(G).scaled(pow(Lm1(), G.m()))).reduced();
}

RationalFunction arit_closed(const Germ& G) {
  require_eligible(G);
  const int m = G.m();
  const long n = G.n();
  RationalFunction r = complement_closed(m) + E_series(G).scaled(pow(Lm1(), m).scaled(Rational(1, n)));
  for (int k = 1; k <= G.g(); ++k) {
    Rational w(G.N(k) - G.N(k - 1), n);
    std::vector<std::pair<long, long>> den{{m, 1}};
    for (int i = 0; i < m; ++i) {
      Rational na = G.a(k, i) * Rational(n);
      Rational la = Rational(n) * (Rational(m) * G.a(k, i) - Rational(1));
      den.emplace_back(la.num().get_si(), na.num().get_si());
    }
    r += RationalFunction(H_sum(G, k), den).scaled(pow(Lm1(), m).scaled(w));
  }
  return r.reduced();
}

PlaneBranch::PlaneBranch(std::vector<long> beta) : beta_(std::move(beta)) {
  if (beta_.size() < 2) throw ValidationError("characteristic needs beta_0 and at least beta_1");
  if (beta_[0] < 2) throw ValidationError("beta_0 = n must be at least 2");
  for (size_t k = 1; k < beta_.size(); ++k)
    if (beta_[k] <= beta_[k - 1])
      throw ValidationError("characteristic must be strictly increasing (beta_" + std::to_string(k) +
                            " <= beta_" + std::to_string(k - 1) + ")");
  std::vector<ExponentVector> ex;
  for (size_t k = 1; k < beta_.size(); ++k) ex.push_back({Rational(beta_[k], beta_[0])});
  germ_ = Germ::from_exponents(ex);
  if (germ_.n() != beta_[0])
    throw ValidationError("gcd(beta_0, ..., beta_g) must be 1");
}

PlaneBranch PlaneBranch::from_germ(const Germ& G) {
  if (G.m() != 1) throw ValidationError("plane branch needs m = 1");
  std::vector<long> beta{G.n()};
  for (int k = 1; k <= G.g(); ++k) {
    Rational b = G.a(k, 0) * Rational(G.n());
    beta.push_back(b.num().get_si());
  }
  return PlaneBranch(beta);
}

RationalFunction plane_geom(const PlaneBranch& b) {
  const long n = b.beta()[0];
  BiPoly num = BiPoly(Lm1()).shifted(0, n);
  return RationalFunction::geometric(0, 1) +
         RationalFunction(num, std::vector<std::pair<long, long>>{{1, 1}, {0, n}});
}

namespace {

RationalFunction plane_arit_with(const PlaneBranch& b, bool printed) {
  const Germ& G = b.germ();
  const long n = b.beta()[0];
  RationalFunction inner;
  for (int k = 0; k <= G.g(); ++k) {
    long bk = b.beta()[k];
    long t = printed ? n : bk;
    Rational w(G.N(k) - G.N(k - 1), n);
    inner += RationalFunction(BiPoly::monomial(w, bk - n, t),
                              std::vector<std::pair<long, long>>{{bk - n, t}});
  }
  RationalFunction frame(BiPoly(Lm1()), std::vector<std::pair<long, long>>{{1, 1}});
  return RationalFunction::geometric(0, 1) + frame * inner;
}

}  // namespace

RationalFunction plane_arit(const PlaneBranch& b) { return plane_arit_with(b, false); }
RationalFunction plane_arit_printed(const PlaneBranch& b) { return plane_arit_with(b, true); }

RationalFunction z2x3y3_display() {
  using V = std::vector<std::pair<long, long>>;
  const LaurentPoly L = LaurentPoly::L();
  // 1/(1 + LT) written as (1 - LT)/(1 - L^2 T^2)
  RationalFunction third(BiPoly(pow(LaurentPoly(1) - L, 2)) * BiPoly::one_minus(1, 1), V{{2, 2}});
  return RationalFunction::geometric(0, 1).scaled(L.scaled(-2)) +
         RationalFunction::geometric(1, 1).scaled(pow(LaurentPoly(1) + L, 2)) - third +
         RationalFunction::geometric(2, 1).scaled(LaurentPoly(1) + LaurentPoly::L(2));
}

CheckReport lemma_E_check(const Germ& G, int trials, std::uint64_t seed) {
  CheckReport rep;
  const int m = G.m();
  const long n = G.n();
  std::mt19937_64 rng(seed);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const LaurentPoly one_minus_n = LaurentPoly(1) - LaurentPoly::L(-n);

  // (1): E_p by bucketing kernel points of a large cube by their max coordinate
  {
    const long top = 3 * n + n;
    std::vector<LaurentPoly> bucket(top + 1);
    for_box(std::vector<long>(m, top), [&](const OrderVector& l) {
      if (!G.in_ker(l)) return;
      long mx = 0;
      for (long x : l) mx = std::max(mx, x);
      bucket[mx].add_term(-total(l), 1);
    });
    LaurentPoly run;
    for (long p = 1; p <= top; ++p) {
      run += bucket[p];
      rep.expect(run == E_cube(G, p), "identity (1) fails at p=" + std::to_string(p));
    }
  }

  for (int t = 0; t < trials; ++t) {
    std::vector<long> pv(m);
    for (auto& x : pv) x = pick(1, n);
    int j = static_cast<int>(pick(0, m - 1));
    long k = pick(1, 3);
    std::string where = " (trial " + std::to_string(t) + ", j=" + std::to_string(j + 1) +
                        ", k=" + std::to_string(k) + ")";
    auto with = [&](long v) {
      auto b = pv;
      b[j] = v;
      return E_box(G, b);
    };
    LaurentPoly geo = (LaurentPoly(1) - LaurentPoly::L(-k * n)).divide_exact(one_minus_n);
    LaurentPoly lhs = with(pv[j] + k * n);
    rep.expect(lhs == with(k * n) + with(pv[j]).shifted(-k * n), "identity (2) fails" + where);
    rep.expect(with(k * n) == geo * with(n), "identity (3) fails" + where);
    rep.expect(lhs == geo * with(n) + with(pv[j]).shifted(-k * n), "identity (4) fails" + where);

    // multi-index expansion of E_{p + n k}
    std::vector<long> kv(m);
    for (auto& x : kv) x = pick(0, 3);
    std::vector<long> big(m);
    for (int i = 0; i < m; ++i) big[i] = pv[i] + n * kv[i];
    LaurentPoly rhs;
    for (const auto& s : all_signs(m)) {
      std::vector<long> b(m);
      long sh = 0;
      for (int i = 0; i < m; ++i) {
        b[i] = s[i] ? kv[i] * n : pv[i];
        if (!s[i]) sh -= kv[i] * n;
      }
      bool empty = false;
      for (long x : b) empty |= x < 1;
      if (!empty) rhs += E_box(G, b).shifted(sh);
    }
    rep.expect(E_box(G, big) == rhs, "box expansion fails" + where);

    // E_{p+nk} with one p and one k
    long p = pick(1, n);
    LaurentPoly ratio = (LaurentPoly::L(-k * n) - 1).divide_exact(LaurentPoly::L(-n) - 1);
    LaurentPoly sum;
    for (const auto& s : all_signs(m)) {
      int w = weight(s);
      sum += pow(ratio, w) * E_ps(G, p, s).shifted(-k * n * (m - w));
    }
    rep.expect(E_cube(G, p + n * k) == sum,
               "E_{p+nk} expansion fails at p=" + std::to_string(p) + ", k=" + std::to_string(k));
  }
  return rep;
}

CheckReport corollary_Eprime_check(const Germ& G, long P) {
  CheckReport rep;
  auto rhs = E_series(G).expand(P);
  for (long p = 0; p <= P; ++p) {
    LaurentPoly lhs = p == 0 ? LaurentPoly() : E_cube(G, p).shifted(G.m() * p);
    rep.expect(lhs == rhs[p], "Corollary E' differs at T^" + std::to_string(p) + ": " + lhs.str() +
                                  " vs " + rhs[p].str());
  }
  return rep;
}

}  // namespace qop

// Brute-force reference computations used by the tests. None of them go
// through the engine code paths they are compared against.
#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>
#include <vector>

#include "qop/germ.hpp"
#include "qop/laurent.hpp"
#include "qop/ratfun.hpp"

namespace qop {
inline void PrintTo(const Rational& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const LaurentPoly& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const BiPoly& x, std::ostream* os) { *os << x.str(); }
}  // namespace qop

namespace oracle {

using qop::Rational;

// [Z^m + sum v Z : Z^m] by closing the set of fractional parts under addition.
inline long lattice_index(const std::vector<std::vector<Rational>>& gens, int m) {
  auto frac = [](const Rational& x) { return x - Rational(x.floor()); };
  std::set<std::vector<Rational>> seen{std::vector<Rational>(m, 0)};
  std::vector<std::vector<Rational>> todo{std::vector<Rational>(m, 0)};
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<Rational> w(m);
      for (int i = 0; i < m; ++i) w[i] = frac(v[i] + g[i]);
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return static_cast<long>(seen.size());
}

// #{eps in (Z/n)^J : sum_j n a_j(r) eps_j = 0 mod n for r <= k}.
inline long group_order(const qop::Germ& G, int k, const std::vector<int>& J) {
  const long n = G.n();
  long count = 0;
  std::vector<long> e(J.size(), 0);
  while (true) {
    bool ok = true;
    for (int r = 1; r <= k && ok; ++r) {
      long s = 0;
      for (size_t t = 0; t < J.size(); ++t) s += (G.a(r, J[t]) * Rational(n)).num().get_si() * e[t];
      ok = s % n == 0;
    }
    count += ok;
    size_t t = 0;
    while (t < J.size() && e[t] == n - 1) e[t++] = 0;
    if (t == J.size()) break;
    ++e[t];
  }
  return count;
}

// Distinct (u^2, u^3) mod t^{p+1} for u in t F_q[t]: every F_q-arc on
// Y^2 = X^3 has this shape.
inline long cusp_truncations(long q, long p) {
  std::set<std::pair<std::vector<long>, std::vector<long>>> seen;
  std::vector<long> u(p + 1, 0);
  auto mul = [&](const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(p + 1, 0);
    for (long i = 0; i <= p; ++i)
      for (long j = 0; i + j <= p; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % q;
    return c;
  };
  while (true) {
    auto u2 = mul(u, u);
    seen.insert({u2, mul(u2, u)});
    long i = 1;
    while (i <= p && u[i] == q - 1) u[i++] = 0;
    if (i > p) break;
    ++u[i];
  }
  return static_cast<long>(seen.size());
}

// Coefficients of sum_k c_k T^k with c given by a callback, times
// 1/prod(1 - L^a T^b), expanded by naive repeated convolution.
inline std::vector<qop::LaurentPoly> expand_naive(const std::vector<qop::LaurentPoly>& num,
                                                  const std::vector<std::pair<long, long>>& den,
                                                  long P) {
  std::vector<qop::LaurentPoly> s(P + 1);
  for (size_t i = 0; i < num.size() && static_cast<long>(i) <= P; ++i) s[i] = num[i];
  for (auto [a, b] : den) {
    std::vector<qop::LaurentPoly> g(P + 1), r(P + 1);
    for (long k = 0; k * b <= P; ++k) g[k * b] = qop::LaurentPoly::L(a * k);
    for (long i = 0; i <= P; ++i)
      for (long j = 0; i + j <= P; ++j) r[i + j] += s[i] * g[j];
    s = r;
  }
  return s;
}

// Laurent polynomial from (exponent, coefficient) pairs.
inline qop::LaurentPoly lp(std::initializer_list<std::pair<long, Rational>> terms) {
  qop::LaurentPoly r;
  for (const auto& [e, c] : terms) r.add_term(e, c);
  return r;
}

}  // namespace oracle

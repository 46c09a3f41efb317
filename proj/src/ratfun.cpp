#include "qop/ratfun.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "qop/errors.hpp"

namespace qop {

RationalFunction::RationalFunction(const BiPoly& num,
                                   const std::vector<std::pair<long, long>>& factors, long scale)
    : num_(num), scale_(scale) {
  for (const auto& f : factors) {
    if (f.second < 1) throw MathError("denominator factor needs a positive T-exponent");
    ++den_[f];
  }
  normalize();
}

RationalFunction::RationalFunction(const BiPoly& num, const Factors& factors, long scale)
    : num_(num), scale_(scale) {
  for (const auto& [f, k] : factors) {
    if (f.second < 1) throw MathError("denominator factor needs a positive T-exponent");
    if (k < 0) throw MathError("negative factor multiplicity");
    if (k > 0) den_[f] = k;
  }
  normalize();
}

RationalFunction RationalFunction::geometric(long a, long b) {
  return RationalFunction(BiPoly(1), std::vector<std::pair<long, long>>{{a, b}});
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    scale_ = 0;
    return;
  }
  long m = num_.min_L();
  if (m != 0) {
    num_ = num_.shifted(-m, 0);
    scale_ += m;
  }
}

BiPoly RationalFunction::denominator() const {
  BiPoly d(1);
  for (const auto& [f, k] : den_)
    for (int i = 0; i < k; ++i) d *= BiPoly::one_minus(f.first, f.second);
  return d;
}

RationalFunction RationalFunction::scaled(const LaurentPoly& c) const {
  return RationalFunction(num_.scaled(c), den_, scale_);
}

RationalFunction RationalFunction::shifted(long a, long b) const {
  return RationalFunction(num_.shifted(0, b), den_, scale_ + a);
}

RationalFunction RationalFunction::divide_L(const LaurentPoly& d) const {
  return RationalFunction(num_.divide_coeffs(d), den_, scale_);
}

RationalFunction RationalFunction::reduced() const {
  BiPoly num = num_;
  Factors den = den_;
  bool changed = true;
  while (changed && !num.is_zero()) {
    changed = false;
    for (auto it = den.begin(); it != den.end() && !changed; ++it) {
      auto [a, b] = it->first;
      if (auto q = num.try_divide(BiPoly::one_minus(a, b))) {
        num = *q;
        if (--it->second == 0) den.erase(it);
        changed = true;
        break;
      }
      const long g = std::gcd(std::labs(a), b);
      for (long r = 2; r <= g && !changed; ++r) {
        if (g % r) continue;
        bool prime = true;
        for (long d = 2; d * d <= r; ++d) prime = prime && r % d;
        if (!prime) continue;
        // (1 - x^r) / (1 - x) with x = L^{a/r} T^{b/r}
        BiPoly Q;
        for (long i = 0; i < r; ++i) Q += BiPoly::monomial(1, a / r * i, b / r * i);
        if (auto q = num.try_divide(Q)) {
          num = *q;
          std::pair<long, long> smaller{a / r, b / r};
          if (--it->second == 0) den.erase(it);
          ++den[smaller];
          changed = true;
        }
      }
    }
  }
  if (num.is_zero()) return RationalFunction();
  return RationalFunction(num, den, scale_);
}

namespace {

// Numerator times the factors needed to reach the common denominator.
BiPoly lift_to(const BiPoly& num, const RationalFunction::Factors& own,
               const RationalFunction::Factors& common) {
  BiPoly r = num;
  for (const auto& [f, k] : common) {
    auto it = own.find(f);
    int have = it == own.end() ? 0 : it->second;
    for (int i = have; i < k; ++i) r *= BiPoly::one_minus(f.first, f.second);
  }
  return r;
}

}  // namespace

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
  RationalFunction::Factors common = x.den_;
  for (const auto& [f, k] : y.den_) common[f] = std::max(common[f], k);
  BiPoly n = lift_to(x.scaled_numerator(), x.den_, common) +
             lift_to(y.scaled_numerator(), y.den_, common);
  return RationalFunction(n, common, 0);
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
  return x + (-y);
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
  RationalFunction::Factors f = x.den_;
  for (const auto& [k, v] : y.den_) f[k] += v;
  return RationalFunction(x.num_ * y.num_, f, x.scale_ + y.scale_);
}

bool rf_eq(const RationalFunction& x, const RationalFunction& y) {
  RationalFunction::Factors common = x.factors();
  for (const auto& [f, k] : y.factors()) common[f] = std::max(common[f], k);
  return lift_to(x.scaled_numerator(), x.factors(), common) ==
         lift_to(y.scaled_numerator(), y.factors(), common);
}

SeriesPrefix RationalFunction::expand(long P) const {
  if (P < 0) throw MathError("negative expansion order");
  SeriesPrefix s(P + 1);
  for (const auto& [t, c] : num_.terms())
    if (t <= P) s[t] = c.shifted(scale_);
  for (const auto& [f, k] : den_) {
    const auto [a, b] = f;
    // multiply by 1/(1 - L^a T^b): s[t] += L^a s[t-b], in increasing t
    for (int rep = 0; rep < k; ++rep)
      for (long t = b; t <= P; ++t)
        if (!s[t - b].is_zero()) s[t] += s[t - b].shifted(a);
  }
  return s;
}

SeriesPrefix series_mul(const SeriesPrefix& x, const SeriesPrefix& y) {
  size_t n = std::min(x.size(), y.size());
  SeriesPrefix r(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) r[i + j] += x[i] * y[j];
  return r;
}

std::vector<Integer> cyclotomic(long d) {
  if (d < 1) throw MathError("cyclotomic index must be positive");
  // u^d - 1 divided by Phi_e for every proper divisor e
  std::vector<Integer> p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (long e = 1; e < d; ++e) {
    if (d % e) continue;
    auto q = cyclotomic(e);  // monic
    long dq = static_cast<long>(q.size()) - 1;
    long dp = static_cast<long>(p.size()) - 1;
    std::vector<Integer> quo(dp - dq + 1, 0);
    for (long i = dp; i >= dq; --i) {
      Integer c = p[i];
      quo[i - dq] = c;
      for (long j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
    }
    p = quo;
  }
  return p;
}

namespace {

BiPoly cyclotomic_at(long d, long a, long b) {
  auto c = cyclotomic(d);
  BiPoly r;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) r += BiPoly::monomial(Rational(c[i]), a * static_cast<long>(i), b * static_cast<long>(i));
  return r;
}

std::map<std::tuple<long, long, long>, int> pieces(const RationalFunction::Factors& den) {
  std::map<std::tuple<long, long, long>, int> out;
  for (const auto& [f, k] : den) {
    auto [a, b] = f;
    long g = std::gcd(a < 0 ? -a : a, b);
    for (long d = 1; d <= g; ++d)
      if (g % d == 0) out[{a / g, b / g, d}] += k;
  }
  return out;
}

}  // namespace

std::vector<Pole> RationalFunction::candidate_poles() const {
  std::vector<Pole> r;
  for (const auto& [key, mult] : pieces(den_)) {
    auto [a, b, d] = key;
    r.push_back(Pole{d, a, b, mult});
  }
  return r;
}

std::vector<Pole> RationalFunction::genuine_poles() const {
  std::vector<Pole> r;
  for (const auto& [key, mult] : pieces(den_)) {
    auto [a, b, d] = key;
    BiPoly phi = cyclotomic_at(d, a, b);
    BiPoly rest = num_;
    int cancelled = 0;
    while (cancelled < mult && !rest.is_zero()) {
      auto q = rest.try_divide(phi);
      if (!q) break;
      rest = *q;
      ++cancelled;
    }
    if (rest.is_zero()) cancelled = mult;
    if (mult > cancelled) r.push_back(Pole{d, a, b, mult - cancelled});
  }
  return r;
}

std::string Pole::str() const {
  auto lpow = [](long e) {
    return e == 0 ? std::string("1") : "L^" + std::to_string(e);
  };
  if (b == 1 && d == 1) return lpow(-a);
  if (b == 1 && d == 2) return "-" + lpow(-a);
  std::string lhs = b == 1 ? "T" : "T^" + std::to_string(b);
  if (d == 1) return lhs + " = " + lpow(-a);
  if (d == 2) return lhs + " = -" + lpow(-a);
  std::string zeta = "zeta_" + std::to_string(d);
  return lhs + " = " + (a == 0 ? zeta : zeta + " * " + lpow(-a));
}

std::string RationalFunction::str() const {
  std::string s = "(" + num_.str() + ") / prod[";
  bool first = true;
  for (const auto& [f, k] : den_) {
    for (int i = 0; i < k; ++i) {
      if (!first) s += ", ";
      first = false;
      s += "(1 - L^" + std::to_string(f.first) + " T^" + std::to_string(f.second) + ")";
    }
  }
  s += "] * L^" + std::to_string(scale_);
  return s;
}

}  // namespace qop

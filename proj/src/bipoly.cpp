#include "qop/bipoly.hpp"

#include <algorithm>

#include "qop/errors.hpp"

namespace qop {

BiPoly BiPoly::monomial(const Rational& c, long a, long b) {
  if (b < 0) throw InternalError("negative T-exponent");
  BiPoly r;
  r.add(b, LaurentPoly::monomial(c, a));
  return r;
}

BiPoly BiPoly::one_minus(long a, long b) {
  return BiPoly(1) - monomial(1, a, b);
}

LaurentPoly BiPoly::coeff(long t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

long BiPoly::degree_T() const {
  if (terms_.empty()) throw InternalError("degree of zero polynomial");
  return terms_.rbegin()->first;
}

long BiPoly::min_L() const {
  if (terms_.empty()) throw InternalError("min_L of zero polynomial");
  long m = terms_.begin()->second.min_exp();
  for (const auto& [t, c] : terms_) m = std::min(m, c.min_exp());
  return m;
}

void BiPoly::add(long t, const LaurentPoly& c) {
  if (t < 0) throw InternalError("negative T-exponent");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly BiPoly::shifted(long a, long b) const {
  BiPoly r;
  for (const auto& [t, c] : terms_) r.add(t + b, c.shifted(a));
  return r;
}

BiPoly BiPoly::scaled(const LaurentPoly& c) const {
  BiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [t, x] : terms_) r.add(t, x * c);
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ta, ca] : a.terms_)
    for (const auto& [tb, cb] : b.terms_) r.add(ta + tb, ca * cb);
  return r;
}

std::optional<BiPoly> BiPoly::try_divide(const BiPoly& d) const {
  if (d.is_zero()) throw MathError("division by zero polynomial");
  BiPoly rem = *this, q;
  const long dt = d.degree_T();
  const LaurentPoly& lead = d.terms_.rbegin()->second;
  while (!rem.is_zero() && rem.degree_T() >= dt) {
    long t = rem.degree_T();
    auto c = rem.terms_.rbegin()->second.try_divide(lead);
    if (!c) return std::nullopt;
    BiPoly step;
    step.add(t - dt, *c);
    q += step;
    rem -= step * d;
  }
  if (!rem.is_zero()) return std::nullopt;
  return q;
}

BiPoly BiPoly::divide_coeffs(const LaurentPoly& d) const {
  BiPoly r;
  for (const auto& [t, c] : terms_) r.add(t, c.divide_exact(d));
  return r;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : terms_) {
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += it->second.str() + "*L^" + std::to_string(it->first) + "*T^" + std::to_string(t);
    }
  }
  return s;
}

BiPoly pow(const BiPoly& x, long e) {
  if (e < 0) throw MathError("negative power of a polynomial");
  BiPoly r(1), b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

}  // namespace qop

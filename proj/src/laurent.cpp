#include "qop/laurent.hpp"

#include <vector>

#include "qop/errors.hpp"

namespace qop {

LaurentPoly LaurentPoly::monomial(const Rational& c, long e) {
  LaurentPoly r;
  r.add_term(e, c);
  return r;
}

Rational LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw InternalError("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw InternalError("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

bool LaurentPoly::has_integer_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

void LaurentPoly::add_term(long e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  LaurentPoly r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (x.is_zero()) {
    if (!terms_.empty() && terms_.begin()->first < 0)
      throw MathError("evaluation at L=0 with negative exponents");
    return coeff(0);
  }
  Rational s;
  for (const auto& [e, c] : terms_) s += c * pow(x, e);
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

std::optional<LaurentPoly> LaurentPoly::try_divide(const LaurentPoly& d) const {
  if (d.is_zero()) throw MathError("division by zero polynomial");
  if (is_zero()) return LaurentPoly{};
  // Work with dense coefficient vectors of the parts with nonzero constant term.
  long d0 = d.min_exp(), a0 = min_exp();
  long dd = d.max_exp() - d0, da = max_exp() - a0;
  if (da < dd) return std::nullopt;
  std::vector<Rational> rem(da + 1), div(dd + 1);
  for (const auto& [e, c] : terms_) rem[e - a0] = c;
  for (const auto& [e, c] : d.terms_) div[e - d0] = c;
  const Rational lead_inv = div[dd].inv();
  LaurentPoly q;
  for (long i = da; i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    Rational f = rem[i] * lead_inv;
    q.add_term(i - dd, f);
    for (long j = 0; j <= dd; ++j)
      if (!div[j].is_zero()) rem[i - dd + j] -= f * div[j];
  }
  for (long i = 0; i < dd; ++i)
    if (!rem[i].is_zero()) return std::nullopt;
  return q.shifted(a0 - d0);
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  auto q = try_divide(d);
  if (!q) throw MathError("inexact division: (" + str() + ") / (" + d.str() + ")");
  return *q;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += it->second.str() + "*L^" + std::to_string(it->first);
  }
  return s;
}

LaurentPoly pow(const LaurentPoly& x, long e) {
  if (e < 0) throw MathError("negative power of a Laurent polynomial");
  LaurentPoly r(1), b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

}  // namespace qop

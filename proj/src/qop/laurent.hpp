#pragma once

#include <map>
#include <optional>
#include <string>

#include "qop/rational.hpp"

namespace qop {

// Laurent polynomial in the single symbol L with rational coefficients.
// Zero coefficients are never stored, so the map is a canonical form.
class LaurentPoly {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { add_term(0, c); }  // NOLINT(implicit)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(implicit)

  static LaurentPoly monomial(const Rational& c, long e);
  static LaurentPoly L(long e = 1) { return monomial(1, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(long e) const;
  long min_exp() const;  // requires nonzero
  long max_exp() const;  // requires nonzero
  bool has_integer_coeffs() const;
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(long e, const Rational& c);

  LaurentPoly shifted(long k) const;  // multiply by L^k
  LaurentPoly scaled(const Rational& c) const;

  // Value at L = x. Throws if x = 0 and negative exponents are present.
  Rational eval(const Rational& x) const;

  // Quotient when this is divisible by d in Q[L, L^-1], else nullopt.
  std::optional<LaurentPoly> try_divide(const LaurentPoly& d) const;
  // Same, throwing MathError on a nonzero remainder.
  LaurentPoly divide_exact(const LaurentPoly& d) const;

  // Sorted L-descending as "c*L^e" joined by " + "; "0" for zero.
  std::string str() const;

  LaurentPoly operator-() const { return scaled(-1); }
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

 private:
  Terms terms_;
};

LaurentPoly pow(const LaurentPoly& x, long e);  // e >= 0

}  // namespace qop

#pragma once

#include <map>
#include <optional>
#include <string>

#include "qop/laurent.hpp"

namespace qop {

// Polynomial in T whose coefficients are Laurent polynomials in L.
// Keyed by T-exponent; zero coefficients are never stored.
class BiPoly {
 public:
  using Terms = std::map<long, LaurentPoly>;

  BiPoly() = default;
  BiPoly(const LaurentPoly& c) { add(0, c); }  // NOLINT(implicit)
  BiPoly(long c) : BiPoly(LaurentPoly(c)) {}  // NOLINT(implicit)

  // c * L^a * T^b
  static BiPoly monomial(const Rational& c, long a, long b);
  // 1 - L^a T^b
  static BiPoly one_minus(long a, long b);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(long t) const;
  Rational coeff(long a, long t) const { return coeff(t).coeff(a); }
  long degree_T() const;  // requires nonzero
  long min_L() const;     // smallest L-exponent over all terms; requires nonzero

  void add(long t, const LaurentPoly& c);

  BiPoly shifted(long a, long b) const;  // multiply by L^a T^b
  BiPoly scaled(const LaurentPoly& c) const;

  // Exact division in Q[L, L^-1][T].
  std::optional<BiPoly> try_divide(const BiPoly& d) const;
  // Divide every T-coefficient by d; throws MathError if any is inexact.
  BiPoly divide_coeffs(const LaurentPoly& d) const;

  std::string str() const;

  BiPoly operator-() const { return scaled(-1); }
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

BiPoly pow(const BiPoly& x, long e);

}  // namespace qop

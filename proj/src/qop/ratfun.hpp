#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qop/bipoly.hpp"

namespace qop {

using SeriesPrefix = std::vector<LaurentPoly>;

// One irreducible piece Phi_d(L^a T^b) of a denominator, with (a, b) primitive.
struct Pole {
  long d = 1;
  long a = 0;
  long b = 1;
  int multiplicity = 0;
  // T-value for the linear cases ("1", "L^-1", "-L^-1"); otherwise a
  // description of the root set.
  std::string str() const;
  friend bool operator==(const Pole&, const Pole&) = default;
};

// numerator * L^scale / prod (1 - L^a T^b)^mult, with every b >= 1.
class RationalFunction {
 public:
  using Factors = std::map<std::pair<long, long>, int>;

  RationalFunction() = default;
  RationalFunction(const BiPoly& num) : num_(num) { normalize(); }  // NOLINT(implicit)
  RationalFunction(const BiPoly& num, const std::vector<std::pair<long, long>>& factors,
                   long scale = 0);
  RationalFunction(const BiPoly& num, const Factors& factors, long scale = 0);

  // 1 / (1 - L^a T^b)
  static RationalFunction geometric(long a, long b);

  const BiPoly& numerator() const { return num_; }
  const Factors& factors() const { return den_; }
  long scale() const { return scale_; }
  bool is_zero() const { return num_.is_zero(); }

  // Numerator with the scale folded in.
  BiPoly scaled_numerator() const { return num_.shifted(scale_, 0); }
  BiPoly denominator() const;

  RationalFunction scaled(const LaurentPoly& c) const;
  RationalFunction shifted(long a, long b) const;  // multiply by L^a T^b

  // Divides the numerator coefficient-wise by a pure-L polynomial.
  RationalFunction divide_L(const LaurentPoly& d) const;
  // Same function with denominator factors shrunk where the numerator allows.
  RationalFunction reduced() const;

  SeriesPrefix expand(long P) const;

  // Irreducible denominator pieces not cancelled by the numerator.
  std::vector<Pole> genuine_poles() const;
  // Every irreducible piece of the denominator, ignoring the numerator.
  std::vector<Pole> candidate_poles() const;

  std::string str() const;

  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction operator-() const { return scaled(-1); }

 private:
  void normalize();

  BiPoly num_;
  Factors den_;
  long scale_ = 0;
};

bool rf_eq(const RationalFunction& x, const RationalFunction& y);

// Integer coefficients of the d-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic(long d);

SeriesPrefix series_mul(const SeriesPrefix& x, const SeriesPrefix& y);

}  // namespace qop

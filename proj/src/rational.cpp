#include "qop/rational.hpp"

#include <cctype>

#include "qop/errors.hpp"

namespace qop {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto valid_int = [](const std::string& t, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string a = s.substr(0, slash);
  std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(a, true) || !valid_int(b, false))
    throw ParseError("not a rational number: \"" + s + "\"");
  if (!a.empty() && a[0] == '+') a.erase(0, 1);
  Integer den(b);
  if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  return Rational(Integer(a), den);
}

Rational Rational::inv() const {
  if (is_zero()) throw MathError("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("division by zero");
  v_ /= o.v_;
  return *this;
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& x, long e) {
  if (e < 0) return pow(x.inv(), -e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

}  // namespace qop

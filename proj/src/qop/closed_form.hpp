#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qop/germ.hpp"
#include "qop/ratfun.hpp"

namespace qop {

using SignVector = std::vector<int>;

// Box and sign-vector arguments are in the germ's normalized variable order.
LaurentPoly E_box(const Germ& G, const std::vector<long>& bounds);
LaurentPoly E_cube(const Germ& G, long p);  // E_p
LaurentPoly E_ps(const Germ& G, long p, const SignVector& s);
LaurentPoly F_sum(const Germ& G, int k, long p);
// Same sum without the box, only b_k(l) <= p; needs every a_i(k) > 0.
LaurentPoly F_sum_unboxed(const Germ& G, int k, long p);
BiPoly H_sum(const Germ& G, int k);

// sum_{p>=0} E_p (L^m T)^p as a rational function.
RationalFunction E_series(const Germ& G);

RationalFunction geom_closed(const Germ& G);
RationalFunction arit_closed(const Germ& G);

// Plane branch with characteristic (beta_0 = n, beta_1, ..., beta_g).
class PlaneBranch {
 public:
  explicit PlaneBranch(std::vector<long> beta);
  static PlaneBranch from_germ(const Germ& G);
  const std::vector<long>& beta() const { return beta_; }
  const Germ& germ() const { return germ_; }

 private:
  std::vector<long> beta_;
  Germ germ_;
};

RationalFunction plane_geom(const PlaneBranch& b);
RationalFunction plane_arit(const PlaneBranch& b);
// The arithmetic display with T^n in place of T^{beta_k}.
RationalFunction plane_arit_printed(const PlaneBranch& b);

// Four-term partial fraction equal to (1+L)^2 times the geometric series of
// Z^2 = X^3 Y^3, i.e. of the germ with exponents (3/2, 3/2).
RationalFunction z2x3y3_display();

struct CheckReport {
  bool passed = true;
  long checks = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

CheckReport lemma_E_check(const Germ& G, int trials, std::uint64_t seed = 1);
CheckReport corollary_Eprime_check(const Germ& G, long P);

Integer binomial(long n, long k);

}  // namespace qop

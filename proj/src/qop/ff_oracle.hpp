#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qop/germ.hpp"
#include "qop/germ_io.hpp"

namespace qop {

// Integer polynomial in X_1..X_m, Y, distinguished in Y: the only terms
// free of X are exactly Y^n with coefficient 1.
class DefiningPoly {
 public:
  DefiningPoly(int m, std::vector<Monomial> terms);
  int m() const { return m_; }
  int y_degree() const { return n_; }
  int min_degree() const { return mu_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  std::string str() const;

 private:
  int m_;
  int n_ = 0;
  int mu_ = 0;
  std::vector<Monomial> terms_;
};

struct OracleOptions {
  long budget = 200'000'000;      // search nodes per depth
  bool lift_envelope = false;     // allow runs beyond the default envelope
  int jobs = 1;
};

// Default envelope: m = 1 with q <= 5, p <= 3, P <= 12; m = 2 with q <= 3,
// p <= 1, P <= 8.
long default_depth(int m, long pmax);
bool within_envelope(int m, long q, long p, long P);


struct TruncCount {
  long q = 0, p = 0, depth = 0;
  long count = 0;
  long count_prev = 0;  // at depth - 1
  bool stable = false;
  long nodes = 0;
};

TruncCount count_truncations(const DefiningPoly& f, long q, long p, long P,
                             const OracleOptions& opt = {});

struct SpecializationRow {
  long p = 0;
  TruncCount count;
  Rational expected;
  bool match = false;
};

struct SpecializationReport {
  long q = 0;
  std::vector<SpecializationRow> rows;
  bool passed() const;
};

SpecializationReport check_specialization(const Germ& G, const DefiningPoly& f, long q, long pmax,
                                          long P, const OracleOptions& opt = {});

bool is_prime(long q);

}  // namespace qop

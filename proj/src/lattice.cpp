#include "qop/lattice.hpp"

#include <algorithm>
#include <utility>

#include "qop/errors.hpp"

namespace qop {

namespace {

Integer absz(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Returns g = gcd(a, b) and s, t with s a + t b = g.
void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

std::vector<Integer> smith_diagonal(IntMatrix a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a)
    if (r.size() != cols) throw InternalError("ragged matrix");
  std::vector<Integer> diag;
  size_t t = 0;
  while (t < rows && t < cols) {
    // pick the smallest nonzero entry in the remaining block as pivot
    size_t pr = rows, pc = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || absz(a[i][j]) < absz(a[pr][pc]))) pr = i, pc = j;
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& r : a) std::swap(r[t], r[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& r : a) std::swap(r[t], r[j]);
          clean = false;
        }
      }
      if (clean) {
        // the pivot must divide the whole remaining block
        for (size_t i = t + 1; i < rows && clean; ++i)
          for (size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(absz(a[t][t]));
    ++t;
  }
  return diag;
}

IntMatrix hermite_rows(IntMatrix a) {
  const size_t cols = a.empty() ? 0 : a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < a.size(); ++c) {
    // fold every row below r into row r via extended gcd on column c
    for (size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Integer g, s, t;
      xgcd(a[r][c], a[i][c], g, s, t);
      Integer u = a[r][c] / g, v = a[i][c] / g;
      for (size_t j = 0; j < cols; ++j) {
        Integer x = a[r][j], y = a[i][j];
        a[r][j] = s * x + t * y;
        a[i][j] = -v * x + u * y;
      }
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

Integer congruence_solutions(const IntMatrix& a, long cols, const Integer& n) {
  IntMatrix m = a;
  for (const auto& row : m)
    if (static_cast<long>(row.size()) != cols) throw InternalError("ragged congruence matrix");
  auto d = m.empty() ? std::vector<Integer>{} : smith_diagonal(m);
  Integer count = 1;
  for (long i = 0; i < cols; ++i) {
    Integer g;
    Integer di = i < static_cast<long>(d.size()) ? d[i] : Integer(0);
    mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), n.get_mpz_t());
    count *= g;
  }
  return count;
}

}  // namespace qop

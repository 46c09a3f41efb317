#include "qop/germ.hpp"

#include <algorithm>
#include <numeric>

#include "qop/errors.hpp"

namespace qop {

namespace {

Integer lcm_of_denominators(const std::vector<ExponentVector>& vs) {
  Integer d = 1;
  for (const auto& v : vs)
    for (const auto& x : v) {
      Integer den = x.den();
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
  return d;
}

std::string ordinal_pair(int k) {
  return "a(" + std::to_string(k) + ") and a(" + std::to_string(k + 1) + ")";
}

// Inverse of a square rational matrix; throws on singular input.
std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw InternalError("singular lattice basis");
    std::swap(a[c], a[p]);
    std::swap(inv[c], inv[p]);
    Rational f = a[c][c].inv();
    for (size_t j = 0; j < n; ++j) a[c][j] *= f, inv[c][j] *= f;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Rational h = a[i][c];
      for (size_t j = 0; j < n; ++j) a[i][j] -= h * a[c][j], inv[i][j] -= h * inv[c][j];
    }
  }
  return inv;
}

}  // namespace

Integer lattice_index_of(const std::vector<ExponentVector>& gens, int m) {
  Integer d = lcm_of_denominators(gens);
  IntMatrix rows;
  for (int i = 0; i < m; ++i) {
    std::vector<Integer> r(m, 0);
    r[i] = d;
    rows.push_back(r);
  }
  for (const auto& v : gens) {
    std::vector<Integer> r(m);
    for (int i = 0; i < m; ++i) r[i] = (v[i] * Rational(d)).num();
    rows.push_back(r);
  }
  Integer det = 1;
  for (const auto& x : smith_diagonal(rows)) det *= x;
  Integer dm;
  mpz_pow_ui(dm.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(m));
  return dm / det;
}

Germ Germ::from_exponents(const std::vector<ExponentVector>& ex) {
  if (ex.empty()) throw GermError("exponent list is empty");
  const int m = static_cast<int>(ex[0].size());
  if (m == 0) throw GermError("exponent vectors must have at least one entry", 1);
  const int g = static_cast<int>(ex.size());
  for (int k = 0; k < g; ++k) {
    if (static_cast<int>(ex[k].size()) != m)
      throw GermError("a(" + std::to_string(k + 1) + ") has " + std::to_string(ex[k].size()) +
                          " entries, expected " + std::to_string(m),
                      k + 1);
    for (int i = 0; i < m; ++i)
      if (ex[k][i].sign() < 0)
        throw GermError("negative exponent a_" + std::to_string(i + 1) + "(" +
                            std::to_string(k + 1) + ") = " + ex[k][i].str(),
                        k + 1, i + 1);
  }
  for (int k = 0; k + 1 < g; ++k) {
    for (int i = 0; i < m; ++i)
      if (ex[k][i] > ex[k + 1][i])
        throw GermError("non-monotone exponents: " + ordinal_pair(k + 1) + " decrease in variable " +
                            std::to_string(i + 1) + " (" + ex[k][i].str() + " > " +
                            ex[k + 1][i].str() + ")",
                        k + 2, i + 1);
    if (ex[k] == ex[k + 1])
      throw GermError("duplicate exponents: " + ordinal_pair(k + 1) + " are equal", k + 2);
  }
  std::vector<int> ki(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < g && !ki[i]; ++k)
      if (ex[k][i].sign() > 0) ki[i] = k + 1;
    if (!ki[i])
      throw GermError("variable " + std::to_string(i + 1) + " has all exponents zero", 0, i + 1);
  }

  Germ G;
  G.m_ = m;
  G.g_ = g;
  G.N_.push_back(1);
  for (int k = 1; k <= g; ++k) {
    std::vector<ExponentVector> gens(ex.begin(), ex.begin() + k);
    Integer idx = lattice_index_of(gens, m);
    if (!idx.fits_slong_p()) throw GermError("lattice index too large");
    long Nk = idx.get_si();
    if (Nk == G.N_.back())
      throw GermError("a(" + std::to_string(k) + ") lies in M_" + std::to_string(k - 1) +
                          " (n_" + std::to_string(k) + " = 1)",
                      k);
    G.N_.push_back(Nk);
  }
  const long n = G.N_.back();
  for (int k = 0; k < g; ++k)
    for (int i = 0; i < m; ++i)
      if (!(ex[k][i] * Rational(n)).is_integer())
        throw GermError("denominator of a_" + std::to_string(i + 1) + "(" + std::to_string(k + 1) +
                            ") does not divide n = " + std::to_string(n),
                        k + 1, i + 1);

  G.perm_.resize(m);
  std::iota(G.perm_.begin(), G.perm_.end(), 0);
  std::stable_sort(G.perm_.begin(), G.perm_.end(), [&](int x, int y) { return ki[x] < ki[y]; });
  G.a_.assign(g, ExponentVector(m));
  for (int k = 0; k < g; ++k)
    for (int j = 0; j < m; ++j) G.a_[k][j] = ex[k][G.perm_[j]];
  G.ki_.resize(m);
  for (int j = 0; j < m; ++j) G.ki_[j] = ki[G.perm_[j]];
  G.i0_ = static_cast<int>(std::count(G.ki_.begin(), G.ki_.end(), 1));

  G.gamma_.push_back(G.a_[0]);
  for (int k = 1; k < g; ++k) {
    ExponentVector v(m);
    for (int i = 0; i < m; ++i)
      v[i] = Rational(G.nk(k)) * G.gamma_[k - 1][i] + G.a_[k][i] - G.a_[k - 1][i];
    G.gamma_.push_back(v);
  }
  return G;
}

Rational Germ::b(int k, const OrderVector& l) const {
  if (static_cast<int>(l.size()) != m_) throw InternalError("order vector length mismatch");
  if (k == 0) return 0;
  Rational s;
  for (int i = 0; i < m_; ++i) s += a_[k - 1][i] * Rational(l[i]);
  return s;
}

bool Germ::in_ker(const OrderVector& l) const {
  for (int k = 1; k <= g_; ++k)
    if (!b(k, l).is_integer()) return false;
  return true;
}

long Germ::group_order(int k, const std::vector<int>& J) const {
  const Integer nn = n();
  if (k == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), nn.get_mpz_t(), J.size());
    return r.get_si();
  }
  IntMatrix A;
  for (int r = 1; r <= k; ++r) {
    std::vector<Integer> row;
    for (int j : J) row.push_back((a_[r - 1][j] * Rational(nn)).num());
    A.push_back(row);
  }
  return congruence_solutions(A, static_cast<long>(J.size()), nn).get_si();
}

std::optional<Germ> Germ::below_level(int level) const {
  if (level <= 1) return std::nullopt;
  std::vector<int> vars;
  for (int j = 0; j < m_; ++j)
    if (ki_[j] < level) vars.push_back(j);
  std::vector<ExponentVector> ex;
  for (int r = 1; r < level; ++r) {
    ExponentVector v;
    for (int j : vars) v.push_back(a_[r - 1][j]);
    ex.push_back(v);
  }
  return Germ::from_exponents(ex);
}

Germ Germ::reduced(int i) const {
  if (i < 0 || i >= m_ || ki_[i] < 2)
    throw ValidationError("reduced germ needs a variable index beyond i0");
  return *below_level(ki_[i]);
}

std::vector<Integer> Germ::characteristic_vector(const OrderVector& l) const {
  std::vector<Integer> out(l.begin(), l.end());
  for (int k = 0; k < g_; ++k) {
    Rational s;
    for (int i = 0; i < m_; ++i) s += gamma_[k][i] * Rational(l[i]);
    if (!s.is_integer()) throw ValidationError("order vector is not in Ker M");
    out.push_back(s.num());
  }
  return out;
}

IntMatrix Germ::ker_basis() const {
  // Ker M is the dual of M_g = Z^m + sum a(k) Z.
  auto ex = user_exponents();
  Integer d = lcm_of_denominators(ex);
  IntMatrix rows;
  for (int i = 0; i < m_; ++i) {
    std::vector<Integer> r(m_, 0);
    r[i] = d;
    rows.push_back(r);
  }
  for (const auto& v : ex) {
    std::vector<Integer> r(m_);
    for (int i = 0; i < m_; ++i) r[i] = (v[i] * Rational(d)).num();
    rows.push_back(r);
  }
  IntMatrix h = hermite_rows(rows);
  std::vector<std::vector<Rational>> B(m_, std::vector<Rational>(m_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) B[i][j] = Rational(h[i][j], d);
  auto inv = inverse(B);
  IntMatrix dual(m_, std::vector<Integer>(m_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      const Rational& x = inv[j][i];
      if (!x.is_integer()) throw InternalError("dual lattice is not integral");
      dual[i][j] = x.num();
    }
  return hermite_rows(dual);
}

std::vector<ExponentVector> Germ::user_exponents() const {
  std::vector<ExponentVector> out(g_, ExponentVector(m_));
  for (int k = 0; k < g_; ++k)
    for (int j = 0; j < m_; ++j) out[k][perm_[j]] = a_[k][j];
  return out;
}

std::vector<ExponentVector> Germ::user_gamma() const {
  std::vector<ExponentVector> out(g_, ExponentVector(m_));
  for (int k = 0; k < g_; ++k)
    for (int j = 0; j < m_; ++j) out[k][perm_[j]] = gamma_[k][j];
  return out;
}

std::vector<int> Germ::user_ki() const {
  std::vector<int> out(m_);
  for (int j = 0; j < m_; ++j) out[perm_[j]] = ki_[j];
  return out;
}

OrderVector Germ::to_user(const OrderVector& l) const {
  OrderVector out(m_);
  for (int j = 0; j < m_; ++j) out[perm_[j]] = l[j];
  return out;
}

OrderVector Germ::from_user(const OrderVector& l) const {
  if (static_cast<int>(l.size()) != m_) throw ValidationError("order vector length mismatch");
  OrderVector out(m_);
  for (int j = 0; j < m_; ++j) out[j] = l[perm_[j]];
  return out;
}

std::string Germ::key() const {
  std::string s;
  for (const auto& v : a_) {
    s += '[';
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    s += ']';
  }
  return s;
}

bool Germ::closed_form_eligible() const {
  for (const auto& x : a_[0])
    if (x < Rational(1)) return false;
  return true;
}

}  // namespace qop

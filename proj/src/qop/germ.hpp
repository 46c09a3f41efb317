#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qop/errors.hpp"
#include "qop/lattice.hpp"
#include "qop/rational.hpp"

namespace qop {

using ExponentVector = std::vector<Rational>;
using OrderVector = std::vector<long>;

// Germ validation failure. level and var are 1-based positions in the
// user's input when the failure can be pinned to one entry, else 0.
class GermError : public ValidationError {
 public:
  GermError(const std::string& msg, int level = 0, int var = 0)
      : ValidationError(msg), level(level), var(var) {}
  int level;
  int var;
};

// Characteristic exponents a(1..g) in Q^m with every derived lattice invariant.
// Internally variables are reordered so that k_1 <= ... <= k_m; accessors
// work in that normalized order unless they say otherwise.
class Germ {
 public:
  // `exponents[k][i]` is a_i(k+1) in the user's variable order.
  static Germ from_exponents(const std::vector<ExponentVector>& exponents);

  int m() const { return m_; }
  int g() const { return g_; }
  long n() const { return N_.back(); }
  const std::vector<ExponentVector>& a() const { return a_; }  // a()[k-1][i]
  const Rational& a(int k, int i) const { return a_[k - 1][i]; }
  long nk(int k) const { return N_[k] / N_[k - 1]; }
  // N_k for k = -1..g with N_{-1} = 0 and N_0 = 1.
  long N(int k) const { return k < 0 ? 0 : N_[k]; }
  long e(int k) const { return n() / N_[k]; }
  const std::vector<ExponentVector>& gamma() const { return gamma_; }
  int k_of(int i) const { return ki_[i]; }  // level where variable i appears
  const std::vector<int>& ki() const { return ki_; }
  int i0() const { return i0_; }
  // perm()[j] is the user index of normalized variable j.
  const std::vector<int>& perm() const { return perm_; }

  long lattice_index(int k) const { return N_.at(k); }
  Rational b(int k, const OrderVector& l) const;  // b_0 = 0
  bool in_ker(const OrderVector& l) const;
  // Order of {eps in (Z/n)^J : sum_j n a_j(r) eps_j = 0 mod n, r <= k}.
  long group_order(int k, const std::vector<int>& J) const;
  // Germ on the variables {j : k_j < k_i} with exponents a(1..k_i - 1).
  Germ reduced(int i) const;
  // Germ on the variables {j : k_j < level} with exponents a(1..level-1);
  // empty when level == 1.
  std::optional<Germ> below_level(int level) const;
  // (l_1..l_m, p_1..p_g) with p_k = sum_i gamma_i(k) l_i.
  std::vector<Integer> characteristic_vector(const OrderVector& l) const;

  // Basis of Ker M in Hermite normal form, in user variable order.
  IntMatrix ker_basis() const;

  // Exponents and derived vectors reported in user variable order.
  std::vector<ExponentVector> user_exponents() const;
  std::vector<ExponentVector> user_gamma() const;
  std::vector<int> user_ki() const;
  OrderVector to_user(const OrderVector& l) const;
  OrderVector from_user(const OrderVector& l) const;

  // Canonical text of the normalized exponents; equal germs give equal keys.
  std::string key() const;

  // True when every a_i(1) >= 1.
  bool closed_form_eligible() const;

 private:
  int m_ = 0, g_ = 0;
  std::vector<ExponentVector> a_;
  std::vector<long> N_;  // N_0..N_g
  std::vector<ExponentVector> gamma_;
  std::vector<int> ki_;
  int i0_ = 0;
  std::vector<int> perm_;
};

// [M_k : Z^m] for the lattice generated by Z^m and the given vectors.
Integer lattice_index_of(const std::vector<ExponentVector>& gens, int m);

}  // namespace qop

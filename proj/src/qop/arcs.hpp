#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qop/germ.hpp"
#include "qop/laurent.hpp"
#include "qop/ratfun.hpp"

namespace qop {

enum class StratumKind { C1, C2 };
enum class SeriesKind { geom, arit };

// Classification of an order vector at order p. Indices are 0-based
// positions in the germ's normalized variable order.
struct StratumLabel {
  StratumKind kind = StratumKind::C1;
  int q = 0;
  int pivot = 0;
  std::vector<int> I;
  long e = 0;       // C1 only
  int k_level = 0;  // k_l for C1, the common level of I for C2
  long overlap = 1;
};

struct Stratum {
  OrderVector l;
  StratumLabel label;
};

struct CoeffPair {
  LaurentPoly geom;
  LaurentPoly arit;
  friend bool operator==(const CoeffPair&, const CoeffPair&) = default;
};

// All l in Ker M with C1 or C2 at order p, in lexicographic order.
std::vector<Stratum> enumerate_D(const Germ& G, long p);
// Label for l if it lies in D(m)_p.
std::optional<StratumLabel> classify(const Germ& G, long p, const OrderVector& l);
long overlap_count(const Germ& G, long p, const OrderVector& l, const StratumLabel& s);
LaurentPoly class_geom(const Germ& G, long p, const OrderVector& l, const StratumLabel& s);
LaurentPoly class_arit(const Germ& G, long p, const OrderVector& l, const StratumLabel& s);
CoeffPair toric_part(const Germ& G, long p);

// How the truncations with some x_i = 0 are counted.
//  stratified: sum over levels k of (L^{p|V_k|} - (L^p-1)^{|V_k|}) L^{p|H_k|}
//              times the torus part of the germ on {j : k_j < k}, where
//              V_k = {j : k_j = k}, H_k = {j : k_j > k}.
//  printed:    sum_{i<=i0} L^{p(m-i)} (L^p-1)^{i-1}
//              + sum_{i>i0} L^{p(m-i)} [pi_p(reduced germ i)].
// Both agree when i0 = m.
enum class ComplementRule { stratified, printed };

class SeriesEngine {
 public:
  explicit SeriesEngine(Germ germ, ComplementRule rule = ComplementRule::stratified);

  const Germ& germ() const { return germ_; }
  ComplementRule rule() const { return rule_; }

  CoeffPair toric(long p) const;
  CoeffPair cn_part(long p) const;
  CoeffPair coefficient(long p) const;
  std::vector<CoeffPair> prefix(long P, int jobs = 1) const;
  SeriesPrefix series_prefix(SeriesKind kind, long P, int jobs = 1) const;

 private:
  struct Memo {
    std::mutex mu;
    std::map<std::pair<std::string, long>, CoeffPair> toric;
    std::map<std::pair<std::string, long>, CoeffPair> full;
  };
  CoeffPair toric_of(const Germ& G, long p) const;
  CoeffPair coefficient_of(const Germ& G, long p) const;
  CoeffPair cn_of(const Germ& G, long p) const;

  Germ germ_;
  ComplementRule rule_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace qop

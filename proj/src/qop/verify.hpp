#pragma once

#include <string>
#include <vector>

#include "qop/germ.hpp"

namespace qop {

struct VerifyItem {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool passed() const;
};

// Cross-route consistency checks: closed form against enumeration, Lemma E
// and Corollary E', plane-branch displays (m = 1), overlap lemma on C2 strata.
VerifyReport run_verify(const Germ& G, long P, int jobs = 1);

// Number of l' in D(m)_p in the same truncation class as l.
long overlap_by_enumeration(const Germ& G, long p, const OrderVector& l);

}  // namespace qop

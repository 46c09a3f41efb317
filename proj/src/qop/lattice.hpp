#pragma once

#include <vector>

#include "qop/rational.hpp"

namespace qop {

using IntMatrix = std::vector<std::vector<Integer>>;

// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
// Length equals the rank.
std::vector<Integer> smith_diagonal(IntMatrix a);

// Row-style Hermite normal form of the row lattice: upper echelon, positive
// pivots, entries above a pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermite_rows(IntMatrix a);

// #{x in (Z/n)^cols : a x = 0 mod n}.
Integer congruence_solutions(const IntMatrix& a, long cols, const Integer& n);

}  // namespace qop

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qop/germ.hpp"

namespace qop {

// One term coeff * X_1^e_1 ... X_m^e_m * Y^e_{m+1}, in user variable order.
struct Monomial {
  long coeff = 0;
  std::vector<int> exps;
};

struct GermFile {
  std::string name;
  Germ germ;
  std::optional<std::vector<Monomial>> f;
};

// Errors are ParseError / GermError with "<source>:<line>:" prefixes.
GermFile parse_germ_text(const std::string& text, const std::string& source = "<input>");
GermFile load_germ_file(const std::string& path);

}  // namespace qop

#include "qop/germ_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qop/errors.hpp"

namespace qop {

namespace {

using nlohmann::json;

struct Where {
  std::vector<int> row;                // line of a(k)
  std::vector<std::vector<int>> cell;  // line of a_i(k)
};

// Line numbers of the entries of the top-level "exponents" array, found by a
// small scan that tracks strings and nesting.
Where exponent_lines(const std::string& text) {
  Where w;
  int line = 1, depth = 0, edepth = -1;
  bool in_str = false, esc = false, want_array = false;
  std::string last, cur;
  bool seen_value_start = false;
  for (char c : text) {
    if (c == '\n') ++line;
    if (in_str) {
      if (esc) esc = false;
      else if (c == '\\') esc = true;
      else if (c == '"') {
        in_str = false;
        last = cur;
        if (edepth >= 0 && depth == edepth + 2 && !seen_value_start) {
          w.cell.back().push_back(line);
          seen_value_start = true;
        }
      } else cur += c;
      continue;
    }
    if (c == '"') {
      in_str = true;
      cur.clear();
      continue;
    }
    if (c == ':' && depth == 1 && last == "exponents") want_array = true;
    if (c == '[' || c == '{') {
      ++depth;
      if (want_array && c == '[') {
        edepth = depth - 1;
        want_array = false;
      } else if (edepth >= 0 && depth == edepth + 2) {
        w.row.push_back(line);
        w.cell.emplace_back();
        seen_value_start = false;
      }
      continue;
    }
    if (c == ']' || c == '}') {
      if (edepth >= 0 && depth == edepth + 1) edepth = -2;
      --depth;
      continue;
    }
    if (c == ',') {
      seen_value_start = false;
      continue;
    }
    if (edepth >= 0 && depth == edepth + 2 && !seen_value_start &&
        !std::isspace(static_cast<unsigned char>(c))) {
      w.cell.back().push_back(line);
      seen_value_start = true;
    }
  }
  return w;
}

Rational entry(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError(where + "exponent entries must be fraction strings like \"3/2\"");
}

}  // namespace

GermFile parse_germ_text(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    size_t pos = e.byte ? e.byte - 1 : 0;
    int line = 1, col = 1;
    for (size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON");
  }
  Where w = exponent_lines(text);
  auto at = [&](int k, int i) {
    int line = 0;
    if (k > 0 && k <= static_cast<int>(w.row.size())) {
      line = w.row[k - 1];
      if (i > 0 && i <= static_cast<int>(w.cell[k - 1].size())) line = w.cell[k - 1][i - 1];
    }
    return source + ":" + (line ? std::to_string(line) + ":" : std::string()) + " ";
  };

  if (!doc.is_object()) throw ParseError(at(0, 0) + "germ file must be a JSON object");
  if (!doc.contains("exponents") || !doc["exponents"].is_array())
    throw ParseError(at(0, 0) + "missing \"exponents\" array");
  std::vector<ExponentVector> ex;
  const auto& arr = doc["exponents"];
  for (size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_array())
      throw ParseError(at(static_cast<int>(k) + 1, 0) + "a(" + std::to_string(k + 1) +
                       ") must be an array");
    ExponentVector v;
    for (size_t i = 0; i < arr[k].size(); ++i)
      v.push_back(entry(arr[k][i], at(static_cast<int>(k) + 1, static_cast<int>(i) + 1)));
    ex.push_back(v);
  }

  GermFile out{doc.value("name", std::string()), Germ(), std::nullopt};
  try {
    out.germ = Germ::from_exponents(ex);
  } catch (const GermError& e) {
    throw GermError(at(e.level, e.var) + e.what(), e.level, e.var);
  }

  if (doc.contains("f") && !doc["f"].is_null()) {
    const auto& f = doc["f"];
    if (!f.is_array()) throw ParseError(source + ": \"f\" must be a list of monomials");
    std::vector<Monomial> terms;
    for (const auto& t : f) {
      if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") ||
          !t["coeff"].is_number_integer() || !t["exps"].is_array())
        throw ParseError(source + ": each monomial of \"f\" needs integer \"coeff\" and list \"exps\"");
      Monomial mono{t["coeff"].get<long>(), {}};
      for (const auto& e : t["exps"]) {
        if (!e.is_number_integer() || e.get<long>() < 0)
          throw ParseError(source + ": monomial exponents must be nonnegative integers");
        mono.exps.push_back(e.get<int>());
      }
      if (static_cast<int>(mono.exps.size()) != out.germ.m() + 1)
        throw ParseError(source + ": monomial needs " + std::to_string(out.germ.m() + 1) +
                         " exponents (X_1..X_m, Y)");
      terms.push_back(mono);
    }
    out.f = terms;
  }
  return out;
}

GermFile load_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_germ_text(ss.str(), path);
}

}  // namespace qop

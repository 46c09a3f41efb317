#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "qop/qop.h"

using nlohmann::json;

namespace {

std::string data(const char* name) { return std::string(QOP_DATA_DIR) + "/" + name + ".json"; }

struct Germ {
  qop_germ* g = nullptr;
  ~Germ() { qop_germ_free(g); }
};

json take(char* s) {
  json j = json::parse(s);
  qop_string_free(s);
  return j;
}

}  // namespace

TEST(CApi, LoadAndInfo) {
  Germ G;
  ASSERT_EQ(qop_germ_load_file(data("z3_xy").c_str(), &G.g), QOP_OK) << qop_last_error();
  int m = 0, levels = 0;
  long n = 0;
  ASSERT_EQ(qop_germ_dims(G.g, &m, &levels, &n), QOP_OK);
  EXPECT_EQ(m, 2);
  EXPECT_EQ(levels, 1);
  EXPECT_EQ(n, 3);
  EXPECT_EQ(qop_germ_has_polynomial(G.g), 1);
  char* out = nullptr;
  ASSERT_EQ(qop_germ_info(G.g, &out), QOP_OK);
  auto j = take(out);
  EXPECT_EQ(j["i0"], 2);
  EXPECT_EQ(j["ker_basis"], json::parse("[[1,2],[0,3]]"));
}

TEST(CApi, FromExponentsAndSeries) {
  const char* ex[] = {"3/2"};
  Germ G;
  ASSERT_EQ(qop_germ_from_exponents(ex, 1, 1, &G.g), QOP_OK);
  EXPECT_EQ(qop_germ_has_polynomial(G.g), 0);
  char* out = nullptr;
  ASSERT_EQ(qop_series(G.g, QOP_GEOM, 3, 1, &out), QOP_OK);
  EXPECT_EQ(take(out), json::parse(R"(["1*L^0","1*L^0","1*L^1","1*L^2 + -1*L^1 + 1*L^0"])"));
  ASSERT_EQ(qop_series(G.g, QOP_ARIT, 2, 2, &out), QOP_OK);
  EXPECT_EQ(take(out).back(), "1/2*L^1 + 1/2*L^0");
  ASSERT_EQ(qop_series_eval(G.g, QOP_ARIT, 3, "5", &out), QOP_OK);
  EXPECT_STREQ(out, "21");
  qop_string_free(out);
}

TEST(CApi, ClosedFormPoles) {
  Germ G;
  ASSERT_EQ(qop_germ_load_file(data("z2_x3y3").c_str(), &G.g), QOP_OK);
  char* out = nullptr;
  ASSERT_EQ(qop_closed_form(G.g, QOP_GEOM, &out), QOP_OK);
  auto j = take(out);
  std::vector<std::string> poles;
  for (const auto& p : j["poles"]) poles.push_back(p["value"].get<std::string>());
  std::sort(poles.begin(), poles.end());
  EXPECT_EQ(poles, (std::vector<std::string>{"-L^-1", "1", "L^-1", "L^-2"}));
}

TEST(CApi, ErrorCodes) {
  Germ G;
  EXPECT_EQ(qop_germ_load_file("/nonexistent.json", &G.g), QOP_ERR_PARSE);
  EXPECT_EQ(G.g, nullptr);
  EXPECT_NE(std::string(qop_last_error()).find("cannot open"), std::string::npos);
  EXPECT_EQ(qop_germ_parse(R"({"exponents": [["3/2","3/2"],["5/4","7/4"]]})", &G.g), QOP_ERR_VALIDATION);
  EXPECT_NE(std::string(qop_last_error()).find("non-monotone"), std::string::npos);
  EXPECT_EQ(qop_germ_parse("{", &G.g), QOP_ERR_PARSE);
  EXPECT_EQ(qop_germ_parse(nullptr, &G.g), QOP_ERR_ARGUMENT);
  EXPECT_STREQ(qop_status_name(QOP_ERR_BUDGET), "budget refusal");

  ASSERT_EQ(qop_germ_load_file(data("z3_xy").c_str(), &G.g), QOP_OK);
  char* out = nullptr;
  EXPECT_EQ(qop_closed_form(G.g, QOP_GEOM, &out), QOP_ERR_HYPOTHESIS);
  EXPECT_EQ(out, nullptr);
  EXPECT_EQ(qop_series(G.g, 7, 2, 1, &out), QOP_ERR_ARGUMENT);
  EXPECT_EQ(qop_series_eval(G.g, QOP_GEOM, 2, "bad", &out), QOP_ERR_PARSE);
  int passed = -1;
  EXPECT_EQ(qop_ffcheck(G.g, 7, 1, 0, 0, 1, &out, &passed), QOP_ERR_BUDGET);
  EXPECT_EQ(qop_ffcheck(G.g, 5, 1, 4, 1000, 1, &out, &passed), QOP_ERR_VALIDATION);  // 5 != 1 mod 3
}

TEST(CApi, VerifyAndFfcheck) {
  Germ G;
  ASSERT_EQ(qop_germ_load_file(data("cusp").c_str(), &G.g), QOP_OK);
  char* out = nullptr;
  int passed = 0;
  ASSERT_EQ(qop_verify(G.g, 6, 1, &out, &passed), QOP_OK);
  EXPECT_EQ(passed, 1);
  auto v = take(out);
  EXPECT_EQ(v["passed"], true);
  EXPECT_FALSE(v["items"].empty());
  ASSERT_EQ(qop_ffcheck(G.g, 3, 3, 0, 0, 1, &out, &passed), QOP_OK) << qop_last_error();
  EXPECT_EQ(passed, 1);
  auto rows = take(out)["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3]["count"], 7);
  EXPECT_EQ(rows[3]["expected"], "7");
  EXPECT_EQ(rows[3]["stable"], true);
}

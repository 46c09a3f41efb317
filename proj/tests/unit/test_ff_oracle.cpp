#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qop/arcs.hpp"
#include "qop/ff_oracle.hpp"
#include "qop/germ_io.hpp"

using namespace qop;

namespace {

DefiningPoly cusp_f(long c = 1) { return DefiningPoly(1, {{1, {0, 2}}, {-c, {3, 0}}}); }

GermFile shipped(const std::string& name) {
  return load_germ_file(std::string(QOP_DATA_DIR) + "/" + name + ".json");
}

OracleOptions lifted() {
  OracleOptions o;
  o.lift_envelope = true;
  o.budget = 2'000'000'000;
  return o;
}

}  // namespace

TEST(DefiningPoly, Validation) {
  EXPECT_EQ(cusp_f().y_degree(), 2);
  EXPECT_EQ(cusp_f().min_degree(), 2);
  EXPECT_THROW(DefiningPoly(1, {{1, {0, 2}}, {1, {0, 0}}}), ValidationError);
  EXPECT_THROW(DefiningPoly(1, {{2, {0, 2}}, {1, {3, 0}}}), ValidationError);
  EXPECT_THROW(DefiningPoly(1, {{1, {1, 0}}}), ValidationError);
  EXPECT_THROW(DefiningPoly(1, {{1, {0, 2}}, {1, {1, 3}}}), ValidationError);
  EXPECT_THROW(DefiningPoly(1, {{1, {0, 2, 1}}}), ValidationError);
}

TEST(Counts, CuspExamples) {
  EXPECT_EQ(count_truncations(cusp_f(), 3, 2, 6).count, 2);
  auto c = count_truncations(cusp_f(), 5, 3, 10);
  EXPECT_EQ(c.count, 21);
  EXPECT_TRUE(c.stable);
  for (long q : {3L, 5L}) EXPECT_EQ(count_truncations(cusp_f(), q, 0, 4).count, 1);
}

TEST(Counts, NonincreasingInDepth) {
  long prev = -1;
  for (long P = 3; P <= 10; ++P) {
    long c = count_truncations(cusp_f(), 5, 3, P).count;
    if (prev >= 0) EXPECT_LE(c, prev) << "P=" << P;
    prev = c;
  }
  EXPECT_EQ(prev, 21);
}

TEST(Counts, CuspAgainstParametrization) {
  for (long p = 0; p <= 4; ++p) {
    // p = 4 looks stable at depth 11 with a wrong count; it settles at 12
    auto c = count_truncations(cusp_f(), 3, p, 3 * p + 1, lifted());
    EXPECT_EQ(c.count, oracle::cusp_truncations(3, p)) << p;
    EXPECT_TRUE(c.stable);
  }
}

TEST(Counts, ScalingInvariance) {
  // Y^2 - 4X^3 becomes Y^2 - X^3 under Y -> 2Y over F_5
  for (long p = 0; p <= 3; ++p)
    EXPECT_EQ(count_truncations(cusp_f(4), 5, p, 10).count, count_truncations(cusp_f(), 5, p, 10).count);
}

TEST(Counts, JobsIndependence) {
  OracleOptions one, three;
  three.jobs = 3;
  EXPECT_EQ(count_truncations(cusp_f(), 5, 3, 10, one).count,
            count_truncations(cusp_f(), 5, 3, 10, three).count);
}

TEST(Counts, Preconditions) {
  EXPECT_THROW(count_truncations(cusp_f(), 4, 1, 4), ValidationError);
  EXPECT_THROW(count_truncations(cusp_f(), 2, 1, 4), ValidationError);
  EXPECT_THROW(count_truncations(cusp_f(), 3, 3, 2), ValidationError);
  EXPECT_THROW(count_truncations(cusp_f(), 7, 1, 4), BudgetError);
  EXPECT_THROW(count_truncations(cusp_f(), 5, 3, 13), BudgetError);
  OracleOptions tiny = lifted();
  tiny.budget = 10;
  EXPECT_THROW(count_truncations(cusp_f(), 5, 3, 10, tiny), BudgetError);
  EXPECT_TRUE(within_envelope(1, 5, 3, 12));
  EXPECT_FALSE(within_envelope(2, 3, 2, 8));
  EXPECT_EQ(default_depth(1, 3), 12);
  EXPECT_EQ(default_depth(2, 1), 8);
}

TEST(Specialization, Cusp) {
  auto gf = shipped("cusp");
  DefiningPoly f(1, *gf.f);
  for (long q : {3L, 5L}) {
    auto r = check_specialization(gf.germ, f, q, 3, 12);
    EXPECT_TRUE(r.passed()) << q;
    std::vector<long> got;
    for (const auto& row : r.rows) got.push_back(row.count.count);
    EXPECT_EQ(got, q == 5 ? (std::vector<long>{1, 1, 3, 21}) : (std::vector<long>{1, 1, 2, 7}));
  }
  EXPECT_THROW(check_specialization(gf.germ, f, 7, 1, 4), BudgetError);  // outside the envelope
}

TEST(Specialization, Z2X3Y3) {
  auto gf = shipped("z2_x3y3");
  DefiningPoly f(2, *gf.f);
  auto r = check_specialization(gf.germ, f, 3, 1, 8);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[1].count.count, 7);
  EXPECT_EQ(r.rows[1].expected, Rational(7));
  EXPECT_TRUE(r.rows[1].count.stable);
  EXPECT_TRUE(r.passed());
}

TEST(Specialization, Refusals) {
  auto gf = shipped("z3_xy");
  DefiningPoly f(2, *gf.f);
  EXPECT_THROW(check_specialization(gf.germ, f, 5, 1, 4), ValidationError);  // 5 != 1 mod 3
  auto cusp = shipped("cusp");
  EXPECT_THROW(check_specialization(cusp.germ, f, 3, 1, 4), ValidationError);
}

TEST(Specialization, StaggeredGermComplementRule) {
  // four-sheeted germ with i0 < m: the count fixes the complement rule
  auto gf = shipped("staggered");
  DefiningPoly f(2, *gf.f);
  auto c = count_truncations(f, 5, 1, 7, lifted());
  EXPECT_EQ(c.count, 9);
  EXPECT_TRUE(c.stable);
  auto strat = SeriesEngine(gf.germ, ComplementRule::stratified).coefficient(1).arit.eval(5);
  auto printed = SeriesEngine(gf.germ, ComplementRule::printed).coefficient(1).arit.eval(5);
  EXPECT_EQ(strat, Rational(9));
  EXPECT_NE(printed, Rational(9));
}

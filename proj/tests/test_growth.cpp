#include "disto/growth.hpp"

#include <doctest.h>

namespace disto {

TEST_SUITE("growth") {

TEST_CASE("parsing growth literals") {
  GrowthModel m = parse_growth_literal("n^1/2");
  CHECK(m.pow_n == Rat(1, 2));
  CHECK(m.pow_log == 0);
  CHECK(m.coeff == 1);

  m = parse_growth_literal("3*n^0.5*log^2");
  CHECK(m.coeff == 3);
  CHECK(m.pow_n == Rat(1, 2));
  CHECK(m.pow_log == 2);

  m = parse_growth_literal("log^-2");
  CHECK(m.pow_n == 0);
  CHECK(m.pow_log == -2);

  m = parse_growth_literal("1/2");
  CHECK(m.coeff == Rat(1, 2));
  CHECK(m.pow_n == 0);

  CHECK_THROWS_AS(parse_growth_literal("n^-1"), usage_error);
  CHECK_THROWS_AS(parse_growth_literal("0"), usage_error);
  CHECK_THROWS_AS(parse_growth_literal("x^2"), usage_error);
  CHECK_THROWS_AS(parse_growth_literal("n**2"), usage_error);
}

TEST_CASE("rendering roundtrips through the parser") {
  for (const char* text : {"n", "n^1/2", "3*n^1/2*log^2", "log^-2", "5", "n*log"}) {
    GrowthModel m = parse_growth_literal(text);
    GrowthModel again = parse_growth_literal(render_growth(m));
    CHECK(again.coeff == m.coeff);
    CHECK(again.pow_n == m.pow_n);
    CHECK(again.pow_log == m.pow_log);
  }
}

TEST_CASE("decision table over the canonical exponent grid") {
  struct Row {
    const char* d;
    Verdict sublinear;
    Verdict nlogn;
  };
  // d = n^a log^b: sublinear iff (a, b) < (1, 0) lexicographically; d*log d
  // has order n^a log^(b+1) when a > 0, shifting the log threshold by one.
  const Row rows[] = {
      {"n^1/2*log^-2", Verdict::yes, Verdict::yes},
      {"n^1/2*log^-1", Verdict::yes, Verdict::yes},
      {"n^1/2", Verdict::yes, Verdict::yes},
      {"n*log^-2", Verdict::yes, Verdict::yes},
      {"n*log^-1", Verdict::yes, Verdict::no},
      {"n", Verdict::no, Verdict::no},
      {"1/2", Verdict::yes, Verdict::yes},
      {"1", Verdict::yes, Verdict::yes},
      {"2", Verdict::yes, Verdict::yes},
  };
  for (const Row& row : rows) {
    GrowthModel d = parse_growth_literal(row.d);
    CHECK_MESSAGE(criterion_sublinear(d) == row.sublinear, row.d);
    CHECK_MESSAGE(criterion_nlogn(d) == row.nlogn, row.d);
  }
}

TEST_CASE("n*log^-1 separates the two criteria") {
  GrowthModel d = parse_growth_literal("n*log^-1");
  CHECK(criterion_sublinear(d) == Verdict::yes);
  CHECK(criterion_nlogn(d) == Verdict::no);
}

TEST_CASE("relative criterion against a weight sequence") {
  GrowthModel n = parse_growth_literal("n");
  GrowthModel nlog2 = parse_growth_literal("n*log^2");
  CHECK(criterion_over_weights(n, nlog2) == Verdict::yes);
  CHECK(criterion_over_weights(n, n) == Verdict::no);
  CHECK(criterion_over_weights(parse_growth_literal("2"), n) == Verdict::yes);
  // d*log d for d = 1 is identically zero, which tends to zero over anything.
  CHECK(criterion_over_weights(parse_growth_literal("1"), n) == Verdict::yes);
}

TEST_CASE("prefix-only models are indeterminate") {
  GrowthModel m = GrowthModel::prefix_only({Rat(1), Rat(2), Rat(3)});
  CHECK(criterion_sublinear(m) == Verdict::indeterminate);
  CHECK(criterion_nlogn(m) == Verdict::indeterminate);
  CHECK(criterion_over_weights(m, parse_growth_literal("n")) == Verdict::indeterminate);
  CHECK(verdict_str(Verdict::indeterminate) == "indeterminate");
  CHECK(verdict_str(Verdict::yes) == "yes");
  CHECK(verdict_str(Verdict::no) == "no");
}

TEST_CASE("asymptotic order helpers") {
  GrowthModel d = parse_growth_literal("n^1/2*log^3");
  CHECK(order_of(d) == AsymOrder{false, Rat(1, 2), Rat(3), 0});
  CHECK(order_of_dlogd(d) == AsymOrder{false, Rat(1, 2), Rat(4), 0});
  // Pure log powers pick up a loglog factor.
  CHECK(order_of_dlogd(parse_growth_literal("log^2")) == AsymOrder{false, 0, Rat(2), 1});
  CHECK(order_of_dlogd(parse_growth_literal("1")).zero);
  CHECK(!order_of_dlogd(parse_growth_literal("2")).zero);

  CHECK(tends_to_zero(AsymOrder{false, 0, 5, 1}, AsymOrder{false, 1, 0, 0}));
  CHECK(!tends_to_zero(AsymOrder{false, 1, 0, 0}, AsymOrder{false, 1, 0, 0}));
}

}  // TEST_SUITE

}  // namespace disto

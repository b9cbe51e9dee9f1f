#include "disto/certificates.hpp"

#include <doctest.h>

namespace disto {

TEST_SUITE("certificates") {

TEST_CASE("boundary fragmentation bound is a plain number") {
  SymbolicBound b = frag_bound_with_boundary(Int(10));
  CHECK(b.is_constant());
  CHECK(b.constant == 33);
  CHECK(b.render() == "33");
}

TEST_CASE("closed-surface bound clamps below the relator girth") {
  SymbolicBound small = frag_bound_closed(2, Int(3));
  CHECK(small.constant == 0);
  CHECK(small.terms == std::map<std::string, Rat>{{"C'", Rat(1)}});

  SymbolicBound big = frag_bound_closed(2, Int(20));
  CHECK(big.constant == Rat(14 * 12));
  CHECK(big.terms.size() == 1);
  CHECK(big.terms.at("C'") == 1);

  CHECK_THROWS_AS(frag_bound_closed(1, Int(5)), usage_error);
}

TEST_CASE("torus bound keeps both cover constants symbolic") {
  SymbolicBound b = frag_bound_torus(Int(5));
  CHECK(b.constant == 0);
  CHECK(b.terms.at("C") == 20);
  CHECK(b.terms.at("C'") == 1);
  CHECK(!b.evaluate(known_symbol_enclosures()).has_value());
}

TEST_CASE("generic lower bound") {
  SymbolicBound b = frag_lower_bound(Int(10));
  CHECK(b.terms.at("1/C") == 8);
  CHECK(b.constant == 0);
}

TEST_CASE("lower bound stays below the torus upper bound when C is 1") {
  std::map<std::string, std::pair<Rat, Rat>> unit{
      {"C", {Rat(1), Rat(1)}}, {"C'", {Rat(0), Rat(0)}}, {"1/C", {Rat(1), Rat(1)}}};
  for (int diam : {2, 5, 20}) {
    auto lo = frag_lower_bound(Int(diam)).evaluate(unit);
    auto hi = frag_bound_torus(Int(diam)).evaluate(unit);
    REQUIRE(lo.has_value());
    REQUIRE(hi.has_value());
    CHECK(lo->second <= hi->first);
  }
}

TEST_CASE("power word-length bounds") {
  CHECK(baumslag_length_bound(Int(2), Int(3)) == 7);
  CHECK(baumslag_length_bound(Int(-3), Int(0)) == 1);
  CHECK_THROWS_AS(baumslag_length_bound(Int(1), Int(3)), usage_error);
  CHECK_THROWS_AS(baumslag_length_bound(Int(2), Int(-1)), usage_error);

  CHECK(heisenberg_length_bound(Int(5)) == 20);
  CHECK(heisenberg_length_bound(Int(1)) == 4);
  CHECK_THROWS_AS(heisenberg_length_bound(Int(0)), usage_error);
}

TEST_CASE("displacement exponent bound scales linearly in lambda") {
  SymbolicBound one = displacement_exponent_bound(Rat(1));
  CHECK(one.terms.at("log(18)") == 6);
  SymbolicBound four = displacement_exponent_bound(Rat(4));
  CHECK(four.terms.at("log(18)") == 42);

  auto iv = four.evaluate(known_symbol_enclosures());
  REQUIRE(iv.has_value());
  CHECK(iv->first < iv->second);
  CHECK(iv->first > Rat(121));  // 42 * log(18) = 121.39...
  CHECK(iv->second < Rat(122));
}

TEST_CASE("diameter bound from word lengths") {
  CHECK(diameter_upper_from_word_length(Rat(3), Rat(2), Rat(1)) == 13);
  CHECK(diameter_upper_from_word_length(Rat(0), Rat(5), Rat(2)) == 2);
  Rat prev = 0;
  for (int l = 0; l <= 10; ++l) {
    Rat cur = diameter_upper_from_word_length(Rat(l), Rat(2), Rat(3));
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK_THROWS_AS(diameter_upper_from_word_length(Rat(-1), Rat(1), Rat(1)), usage_error);
}

TEST_CASE("symbolic bound algebra") {
  SymbolicBound a;
  a.constant = 2;
  a.add_term("C", Rat(3));
  SymbolicBound b;
  b.add_term("C", Rat(-3));
  b.add_term("D", Rat(1, 2));

  SymbolicBound sum = a + b;
  CHECK(sum.constant == 2);
  CHECK(sum.terms.count("C") == 0);  // cancelled exactly
  CHECK(sum.terms.at("D") == Rat(1, 2));

  SymbolicBound sc = a.scaled(Rat(2));
  CHECK(sc.constant == 4);
  CHECK(sc.terms.at("C") == 6);
  CHECK(a.scaled(Rat(0)).render() == "0");

  CHECK(a.render() == "3*C + 2");
  SymbolicBound neg;
  neg.add_term("C", Rat(-1));
  neg.constant = -1;
  CHECK(neg.render() == "-C - 1");
}

}  // TEST_SUITE

}  // namespace disto

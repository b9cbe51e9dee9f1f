#include "disto/avila.hpp"

#include <doctest.h>

namespace disto {
namespace {

Word bword(const std::string& s) { return parse_word(avila_alphabet(), s); }

}  // namespace

TEST_SUITE("avila") {

TEST_CASE("small indices of the binary enumeration") {
  CHECK(avila_word(1) == Word{});
  CHECK(avila_word(2) == bword("a"));
  CHECK(avila_word(3) == bword("b"));
  CHECK(avila_word(4) == bword("a a"));
  CHECK(avila_word(7) == bword("b b"));
  CHECK(avila_word(12) == bword("b a a"));
  CHECK_THROWS(avila_word(0));
}

TEST_CASE("index and word invert each other with correct lengths") {
  for (std::uint64_t n = 1; n <= 1u << 12; ++n) {
    Word w = avila_word(n);
    CHECK(avila_index(w) == n);
    std::uint64_t len = 0;
    for (std::uint64_t t = n; t > 1; t >>= 1) ++len;
    CHECK(w.size() == len);
  }
}

TEST_CASE("conjugator budget grows with the bit length") {
  CHECK(avila_bound(1) == 14);
  CHECK(avila_bound(2) == 28);
  CHECK(avila_bound(3) == 28);
  CHECK(avila_bound(8) == 56);
  CHECK(avila_bound(1u << 20) == 14 * 20 + 14);
}

TEST_CASE("flatten and unflatten the block-column index") {
  std::vector<Int> sizes{Int(3), Int(2), Int(4)};
  CHECK(flatten_index(Int(2), 2, sizes) == 5);
  CHECK(flatten_index(Int(1), 1, sizes) == 1);
  CHECK(flatten_index(Int(4), 3, sizes) == 9);
  Int idx = 1;
  for (std::size_t j = 1; j <= sizes.size(); ++j)
    for (Int i = 1; i <= sizes[j - 1]; ++i, ++idx) {
      CHECK(flatten_index(i, j, sizes) == idx);
      auto [bi, bj] = unflatten_index(idx, sizes);
      CHECK(bi == i);
      CHECK(bj == j);
    }
}

TEST_CASE("sequence specs evaluate and describe themselves") {
  SequenceSpec c;
  c.kind = SequenceSpec::Kind::constant;
  c.value = 3;
  CHECK(c(Int(10)) == 3);

  SequenceSpec id;
  id.kind = SequenceSpec::Kind::identity;
  CHECK(id(Int(10)) == 10);

  SequenceSpec sq;
  sq.kind = SequenceSpec::Kind::ceil_sqrt;
  CHECK(sq(Int(1)) == 1);
  CHECK(sq(Int(2)) == 2);
  CHECK(sq(Int(4)) == 2);
  CHECK(sq(Int(5)) == 3);
  CHECK(sq(Int(1000000)) == 1000);
  CHECK(sq.describe() == "ceil-sqrt");

  SequenceSpec tab;
  tab.kind = SequenceSpec::Kind::table;
  tab.table = {Int(5), Int(7)};
  CHECK(tab(Int(2)) == 7);
  CHECK_THROWS(tab(Int(3)));
}

TEST_CASE("greedy placement for the constant-1 profile") {
  SigmaProfile profile;  // l = k = 1
  SigmaResult r = build_sigma(profile, 6, Int(1000000));
  REQUIRE(r.complete);
  CHECK(r.sigma == std::vector<Int>{Int(1), Int(28), Int(73), Int(126), Int(187), Int(251)});
  CHECK(verify_sigma(r) == "");
  REQUIRE(r.witnesses.size() == 5);
  for (const SigmaWitness& w : r.witnesses) CHECK(w.boundary);
}

TEST_CASE("linear word lengths block the placement immediately") {
  SigmaProfile profile;
  profile.l.kind = SequenceSpec::Kind::identity;
  SigmaResult r = build_sigma(profile, 4, Int(100000));
  CHECK(!r.complete);
  CHECK(r.blocking_m == 2);
  CHECK(r.sigma.size() == 1);
  CHECK(!r.reason.empty());
}

TEST_CASE("square-root word lengths stay placeable") {
  SigmaProfile profile;
  profile.l.kind = SequenceSpec::Kind::ceil_sqrt;
  profile.k.kind = SequenceSpec::Kind::constant;
  profile.k.value = 2;
  SigmaResult r = build_sigma(profile, 6, Int(1000000));
  REQUIRE(r.complete);
  CHECK(verify_sigma(r) == "");
  for (std::size_t i = 1; i < r.sigma.size(); ++i) CHECK(r.sigma[i] > r.sigma[i - 1]);
}

}  // TEST_SUITE

}  // namespace disto

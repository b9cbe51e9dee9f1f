#include "disto/word.hpp"

#include <doctest.h>

namespace disto {
namespace {

GeneratorAlphabet two_pairs() { return GeneratorAlphabet{{"a1", "b1", "a2", "b2"}}; }

}  // namespace

TEST_SUITE("word") {

TEST_CASE("letter inversion is the low bit") {
  CHECK(inverse_letter(0) == 1);
  CHECK(inverse_letter(1) == 0);
  CHECK(inverse_letter(6) == 7);
  for (Letter l = 0; l < 16; ++l) CHECK(inverse_letter(inverse_letter(l)) == l);
}

TEST_CASE("invert reverses and flips") {
  Word w{0, 2, 5};
  CHECK(invert(w) == Word{4, 3, 1});
  CHECK(invert(invert(w)) == w);
  CHECK(invert(Word{}) == Word{});
}

TEST_CASE("free_reduce cancels adjacent inverses") {
  CHECK(free_reduce(Word{0, 1}) == Word{});
  CHECK(free_reduce(Word{0, 2, 3, 1}) == Word{});
  CHECK(free_reduce(Word{0, 2, 3, 2}) == Word{0, 2});
  CHECK(free_reduce(Word{0, 0, 1, 1}) == Word{});
  CHECK(is_freely_reduced(free_reduce(Word{4, 5, 4, 2, 3, 3})));
  CHECK(!is_freely_reduced(Word{0, 1}));
  CHECK(is_freely_reduced(Word{0, 0}));
}

TEST_CASE("free_reduce of w w^-1 is empty") {
  Word w{0, 2, 4, 6, 1};
  CHECK(free_reduce(concat(w, invert(w))).empty());
}

TEST_CASE("rotation and cyclic permutations") {
  Word w{0, 2, 4};
  CHECK(rotate(w, 1) == Word{2, 4, 0});
  CHECK(rotate(w, 3) == w);
  CHECK(cyclic_permutations(w).size() == 3);
}

TEST_CASE("shortlex order is length first") {
  CHECK(shortlex_less(Word{7}, Word{0, 0}));
  CHECK(shortlex_less(Word{0, 2}, Word{0, 3}));
  CHECK(!shortlex_less(Word{0, 3}, Word{0, 2}));
  CHECK(!shortlex_less(Word{0}, Word{0}));
}

TEST_CASE("parse and format roundtrip with case marking inverses") {
  GeneratorAlphabet al = two_pairs();
  Word w = parse_word(al, "a1 b1 A1 B1");
  CHECK(w == Word{0, 2, 1, 3});
  CHECK(format_word(al, w) == "a1 b1 A1 B1");
  CHECK(parse_word(al, "1") == Word{});
  CHECK(format_word(al, Word{}) == "1");
  CHECK(parse_word(al, "b2 A2") == Word{6, 5});
  CHECK_THROWS_AS(parse_word(al, "c1"), std::invalid_argument);
}

TEST_CASE("contains_subword") {
  Word host{0, 2, 1, 3, 4};
  CHECK(contains_subword(host, Word{2, 1, 3}));
  CHECK(contains_subword(host, Word{}));
  CHECK(contains_subword(host, host));
  CHECK(!contains_subword(host, Word{1, 2}));
  CHECK(!contains_subword(Word{0}, Word{0, 0}));
}

}  // TEST_SUITE

}  // namespace disto

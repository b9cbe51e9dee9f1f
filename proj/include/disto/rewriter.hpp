#pragma once

#include "disto/presentation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace disto {

// A run w[start, start+length) that coincides with a proper prefix of the
// relator-orbit word at orbit_index and is strictly longer than half the
// relator. Replacing it by the inverted complementary suffix shortens the
// word.
struct SubwordMatch {
  std::size_t start = 0;
  std::size_t length = 0;
  int orbit_index = -1;

  friend bool operator==(const SubwordMatch&, const SubwordMatch&) = default;
};

// Prefix trie over the relator orbit. Distinct orbit words already differ in
// their first two letters, so every node at depth >= 2 lies on a unique word
// and the trie doubles as a lookup table from long prefixes to their orbit
// word.
class RelatorMatcher {
 public:
  explicit RelatorMatcher(const Presentation& p);

  const Presentation& presentation() const { return *pres_; }

  // Longest prefix of an orbit word starting at w[i]; {length, orbit_index},
  // length 0 when nothing matches. orbit_index is meaningful for length >= 2.
  std::pair<int, int> longest_match(const Word& w, std::size_t i) const;

  // Exact half-length match at w[i], or -1. Used by the flip search.
  int half_match(const Word& w, std::size_t i) const;

 private:
  const Presentation* pres_;
  std::vector<std::vector<std::int32_t>> next_;
  std::vector<std::int32_t> word_at_;
};

// All inclusion-maximal simplifiable runs, longest first and leftmost within
// equal lengths. Empty exactly when the word admits no Dehn step.
std::vector<SubwordMatch> find_simplifiable(const RelatorMatcher& m, const Word& w);

// Replace the matched run by the inverse of the complementary suffix and
// freely reduce; the result is strictly shorter than w.
Word apply_match(const RelatorMatcher& m, const Word& w, const SubwordMatch& match);

// One leftmost-of-longest rewriting step, or nullopt when w is irreducible.
std::optional<Word> dehn_step(const RelatorMatcher& m, const Word& w);

// Free reduction followed by Dehn steps until irreducible. At most |w| steps.
Word dehn_reduce(const RelatorMatcher& m, const Word& w);

bool is_trivial(const RelatorMatcher& m, const Word& w);
bool equal_elements(const RelatorMatcher& m, const Word& u, const Word& v);

// Shortlex-least geodesic representative. Dehn-reduces, then explores the
// half-block flip closure of the survivor; any flip that freely shortens
// restarts the search from the shorter word, so the result is minimal over
// everything the search can see.
Word canonical_form(const RelatorMatcher& m, const Word& w);

// Convenience wrappers that build a matcher on the fly (fine for one-off
// calls; hot paths should reuse a RelatorMatcher).
Word canonical_form(const Presentation& p, const Word& w);
bool is_trivial(const Presentation& p, const Word& w);

// d(u, v) in the word metric, via the canonical form of u^{-1} v.
std::size_t geodesic_distance(const RelatorMatcher& m, const Word& u, const Word& v);

}  // namespace disto

#pragma once

#include "disto/word.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace disto {

enum class GroupKind { closed_surface, free_group, torus };

// A one-relator surface presentation (or a free group, relator-less). The
// relator orbit holds every cyclic permutation of the defining relator and of
// its inverse; keeping the full symmetrized set makes prefix matching in the
// rewriter complete and lets letter-combinatorics checks quantify over all of
// them directly. The torus kind carries only its alphabet: its geometry lives
// in the grid model, not in a relator.
struct Presentation {
  GroupKind kind = GroupKind::free_group;
  int genus = 0;  // closed surfaces only
  GeneratorAlphabet alphabet;
  std::vector<Word> relator_orbit;  // shortlex-sorted, deduplicated

  int relator_length() const { return kind == GroupKind::closed_surface ? 4 * genus : 0; }
  int half_length() const { return kind == GroupKind::closed_surface ? 2 * genus : 0; }
};

// [a1,b1][a2,b2]...[ag,bg] in letters.
inline Word surface_relator(int genus) {
  Word r;
  for (int i = 0; i < genus; ++i) {
    Letter a = static_cast<Letter>(4 * i);      // a_{i+1}
    Letter b = static_cast<Letter>(4 * i + 2);  // b_{i+1}
    r.push_back(a);
    r.push_back(b);
    r.push_back(inverse_letter(a));
    r.push_back(inverse_letter(b));
  }
  return r;
}

inline Presentation make_closed_surface_presentation(int genus) {
  if (genus < 2) throw std::invalid_argument("closed surface presentation needs genus >= 2");
  Presentation p;
  p.kind = GroupKind::closed_surface;
  p.genus = genus;
  for (int i = 1; i <= genus; ++i) {
    p.alphabet.generator_names.push_back("a" + std::to_string(i));
    p.alphabet.generator_names.push_back("b" + std::to_string(i));
  }
  Word r = surface_relator(genus);
  std::set<Word> orbit;
  for (const Word& w : cyclic_permutations(r)) orbit.insert(w);
  for (const Word& w : cyclic_permutations(invert(r))) orbit.insert(w);
  p.relator_orbit.assign(orbit.begin(), orbit.end());
  std::sort(p.relator_orbit.begin(), p.relator_orbit.end(), shortlex_less);
  return p;
}

inline Presentation make_free_group_presentation(int rank) {
  if (rank < 1) throw std::invalid_argument("free group presentation needs rank >= 1");
  Presentation p;
  p.kind = GroupKind::free_group;
  for (int i = 1; i <= rank; ++i)
    p.alphabet.generator_names.push_back("a" + std::to_string(i));
  return p;
}

inline Presentation make_torus_presentation() {
  Presentation p;
  p.kind = GroupKind::torus;
  p.alphabet.generator_names = {"e1", "e2"};
  return p;
}

inline bool orbit_contains_subword(const Presentation& p, const Word& w) {
  for (const Word& r : p.relator_orbit)
    if (contains_subword(r, w)) return true;
  return false;
}

// ---- Letter combinatorics of the relator orbit -----------------------------
//
// These three facts are what the rewriting and geodesic analysis lean on; each
// checker returns an empty string when the fact holds and a counterexample
// description otherwise.

// At most one orbit word starts with any given two-letter block, and all orbit
// words containing a given block are rotations of one another.
inline std::string check_orbit_fact_unique_start(const Presentation& p) {
  const int n = p.alphabet.letter_count();
  for (Letter a = 0; a < n; ++a) {
    for (Letter b = 0; b < n; ++b) {
      Word block{a, b};
      std::vector<const Word*> starters;
      std::vector<const Word*> containing;
      for (const Word& r : p.relator_orbit) {
        if (r.size() >= 2 && r[0] == a && r[1] == b) starters.push_back(&r);
        if (contains_subword(r, block)) containing.push_back(&r);
      }
      if (starters.size() > 1)
        return "two orbit words start with " + p.alphabet.letter_name(a) + " " +
               p.alphabet.letter_name(b);
      if (!containing.empty()) {
        // All words containing the block must lie in a single rotation class.
        std::set<Word> cls;
        for (const Word& w : cyclic_permutations(*containing.front())) cls.insert(w);
        for (const Word* w : containing)
          if (!cls.count(*w))
            return "orbit words containing " + p.alphabet.letter_name(a) + " " +
                   p.alphabet.letter_name(b) + " span two rotation classes";
      }
    }
  }
  return "";
}

// Each letter ends exactly two orbit words and starts exactly two; the two
// penultimate (resp. second) letters differ, and their mismatch block stays
// outside the orbit.
inline std::string check_orbit_fact_two_ends(const Presentation& p) {
  const int n = p.alphabet.letter_count();
  for (Letter a = 0; a < n; ++a) {
    std::vector<Letter> penult, second;
    for (const Word& r : p.relator_orbit) {
      if (r.back() == a) penult.push_back(r[r.size() - 2]);
      if (r.front() == a) second.push_back(r[1]);
    }
    if (penult.size() != 2)
      return p.alphabet.letter_name(a) + " ends " + std::to_string(penult.size()) +
             " orbit words, want 2";
    if (second.size() != 2)
      return p.alphabet.letter_name(a) + " starts " + std::to_string(second.size()) +
             " orbit words, want 2";
    if (penult[0] == penult[1])
      return "both orbit words ending " + p.alphabet.letter_name(a) +
             " share the penultimate letter";
    if (second[0] == second[1])
      return "both orbit words starting " + p.alphabet.letter_name(a) +
             " share the second letter";
    if (orbit_contains_subword(p, Word{inverse_letter(penult[0]), penult[1]}) ||
        orbit_contains_subword(p, Word{inverse_letter(penult[1]), penult[0]}))
      return "penultimate mismatch block of " + p.alphabet.letter_name(a) +
             " appears in the orbit";
    if (orbit_contains_subword(p, Word{inverse_letter(second[0]), second[1]}) ||
        orbit_contains_subword(p, Word{inverse_letter(second[1]), second[0]}))
      return "second-letter mismatch block of " + p.alphabet.letter_name(a) +
             " appears in the orbit";
  }
  return "";
}

// For every two-letter block "a b" inside some orbit word there is a unique
// orbit word m1 starting with b whose last letter differs from a, a unique m2
// ending with a whose first letter differs from b, and the junction of their
// outer letters stays outside the orbit.
inline std::string check_orbit_fact_junction(const Presentation& p) {
  const int n = p.alphabet.letter_count();
  for (Letter a = 0; a < n; ++a) {
    for (Letter b = 0; b < n; ++b) {
      if (!orbit_contains_subword(p, Word{a, b})) continue;
      std::vector<const Word*> m1s, m2s;
      for (const Word& r : p.relator_orbit) {
        if (r.front() == b && r.back() != a) m1s.push_back(&r);
        if (r.back() == a && r.front() != b) m2s.push_back(&r);
      }
      std::string blk =
          p.alphabet.letter_name(a) + " " + p.alphabet.letter_name(b);
      if (m1s.size() != 1)
        return "block " + blk + ": " + std::to_string(m1s.size()) +
               " candidates for the continuation word, want 1";
      if (m2s.size() != 1)
        return "block " + blk + ": " + std::to_string(m2s.size()) +
               " candidates for the predecessor word, want 1";
      Letter l1 = m1s.front()->back();
      Letter l2 = m2s.front()->front();
      if (orbit_contains_subword(p, Word{inverse_letter(l2), inverse_letter(l1)}))
        return "block " + blk + ": outer-letter junction appears in the orbit";
    }
  }
  return "";
}

}  // namespace disto

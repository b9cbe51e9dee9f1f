#include "disto/lemma_suites.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace disto {

namespace {

std::string word_str(const Presentation& p, const Word& w) {
  return format_word(p.alphabet, w);
}

// The two half-words an orbit word contributes as geodesic tails: its first
// half and the inverse of its second half.
std::pair<Word, Word> half_pair(const Word& rel) {
  auto half = rel.begin() + static_cast<std::ptrdiff_t>(rel.size() / 2);
  return {Word(rel.begin(), half), invert(Word(half, rel.end()))};
}

}  // namespace

SuiteResult suite_fact1(const Presentation& p) {
  SuiteResult r;
  r.name = "fact1";
  std::string c = check_orbit_fact_unique_start(p);
  if (!c.empty()) r.fail(c);
  r.stats["orbit_words"] = std::to_string(p.relator_orbit.size());
  return r;
}

SuiteResult suite_fact2(const Presentation& p) {
  SuiteResult r;
  r.name = "fact2";
  std::string c = check_orbit_fact_two_ends(p);
  if (!c.empty()) r.fail(c);
  return r;
}

SuiteResult suite_fact3(const Presentation& p) {
  SuiteResult r;
  r.name = "fact3";
  std::string c = check_orbit_fact_junction(p);
  if (!c.empty()) r.fail(c);
  return r;
}

SuiteResult suite_adjacence(const RelatorMatcher& m, const std::vector<Word>& bases) {
  SuiteResult r;
  r.name = "adjacence";
  const Presentation& p = m.presentation();
  const int full = p.relator_length();
  std::map<Word, int> orbit_index;
  for (std::size_t i = 0; i < p.relator_orbit.size(); ++i)
    orbit_index[p.relator_orbit[i]] = static_cast<int>(i);

  for (const Word& base : bases) {
    Word base_canon = canonical_form(m, base);
    auto rings = vertex_rings(m, base);
    std::set<std::set<Word>> distinct_sets;
    for (const VertexRing& ring : rings) {
      const Word& rel = p.relator_orbit[static_cast<std::size_t>(ring.orbit_index)];
      // Closure: applying the whole orbit word returns to the base face.
      if (canonical_form(m, concat(base, rel)) != base_canon)
        r.fail("ring of orbit word " + std::to_string(ring.orbit_index) + " at base '" +
               word_str(p, base) + "' does not close");
      std::set<Word> faces(ring.faces.begin(), ring.faces.end());
      if (static_cast<int>(faces.size()) != full)
        r.fail("ring of orbit word " + std::to_string(ring.orbit_index) + " at base '" +
               word_str(p, base) + "' has " + std::to_string(faces.size()) +
               " distinct faces, want " + std::to_string(full));
      for (std::size_t i = 0; i < ring.faces.size(); ++i) {
        const Word& a = ring.faces[i];
        const Word& b = ring.faces[(i + 1) % ring.faces.size()];
        if (geodesic_distance(m, a, b) != 1)
          r.fail("consecutive ring faces not adjacent at base '" + word_str(p, base) +
                 "', step " + std::to_string(i));
      }
      // The inverse orbit word walks the same vertex the other way round.
      const Word inv_rel = invert(rel);
      auto it = orbit_index.find(inv_rel);
      if (it == orbit_index.end()) {
        r.fail("orbit is not inverse-closed");
      } else {
        std::set<Word> inv_faces(rings[static_cast<std::size_t>(it->second)].faces.begin(),
                                 rings[static_cast<std::size_t>(it->second)].faces.end());
        if (inv_faces != faces)
          r.fail("rings of an orbit word and its inverse differ at base '" +
                 word_str(p, base) + "'");
      }
      distinct_sets.insert(std::move(faces));
    }
    if (static_cast<int>(distinct_sets.size()) != full)
      r.fail("base '" + word_str(p, base) + "' has " +
             std::to_string(distinct_sets.size()) + " distinct vertex rings, want " +
             std::to_string(full));
    r.stats["rings_per_base"] = std::to_string(rings.size());
    r.stats["distinct_rings_per_base"] = std::to_string(distinct_sets.size());
  }
  r.stats["bases"] = std::to_string(bases.size());
  return r;
}

SuiteResult suite_parity(const Ball& b) {
  SuiteResult r;
  r.name = "parity";
  std::size_t edges = 0;
  for (FaceId f = 0; f < b.face_count(); ++f) {
    if (b.dist(f) >= b.radius()) continue;
    for (Letter l = 0; l < b.letter_count(); ++l) {
      FaceId n = b.neighbor(f, l);
      if (n == kOutsideBall) {
        r.fail("interior face " + std::to_string(f) + " has an unfilled edge");
        continue;
      }
      ++edges;
      int d = b.dist(n) - b.dist(f);
      if (d != 1 && d != -1)
        r.fail("neighbor distance gap " + std::to_string(d) + " at face " +
               std::to_string(f));
    }
  }
  r.stats["edges_checked"] = std::to_string(edges);
  return r;
}

SuiteResult suite_geodexc(const Ball& b, std::size_t geodesic_cap) {
  SuiteResult r;
  r.name = "geodexc";
  const Presentation& p = b.presentation();
  const int half = p.half_length();
  const int full = p.relator_length();
  std::size_t exceptional = 0;
  std::map<std::size_t, std::size_t> parent_histogram;
  std::map<std::size_t, std::size_t> tail_set_sizes;

  for (FaceId f = 1; f < b.face_count(); ++f) {
    if (!b.is_exceptional(f)) continue;
    ++exceptional;
    ++parent_histogram[b.parents(f).size()];
    if (b.dist(f) < half)
      r.fail("exceptional face at distance " + std::to_string(b.dist(f)) +
             " < " + std::to_string(half));
    auto geods = b.geodesics(f, geodesic_cap);
    std::set<Word> tails;  // property-1 tails
    for (const Word& g : geods) {
      bool prop1 = false;
      if (g.size() >= static_cast<std::size_t>(half)) {
        Word tail(g.end() - half, g.end());
        prop1 = orbit_contains_subword(p, tail);
        if (prop1) tails.insert(std::move(tail));
      }
      if (prop1) continue;
      // Second kind: tail m1 m2 of lengths half and half - 1 around a
      // junction that no orbit word contains.
      if (g.size() < static_cast<std::size_t>(full) - 1) {
        r.fail("geodesic '" + word_str(p, g) + "' to face " + std::to_string(f) +
               " matches neither tail shape");
        continue;
      }
      Word m1(g.end() - (full - 1), g.end() - (half - 1));
      Word m2(g.end() - (half - 1), g.end());
      bool ok = orbit_contains_subword(p, m1) && orbit_contains_subword(p, m2) &&
                !orbit_contains_subword(p, Word{m1.back(), m2.front()});
      if (!ok)
        r.fail("geodesic '" + word_str(p, g) + "' to face " + std::to_string(f) +
               " matches neither tail shape");
    }
    if (tails.empty()) {
      r.fail("face " + std::to_string(f) + " has no geodesic ending in a half-relator");
      continue;
    }
    ++tail_set_sizes[tails.size()];
    bool paired = false;
    for (const Word& rel : p.relator_orbit) {
      auto [h1, h2] = half_pair(rel);
      std::set<Word> pair{h1, h2};
      if (std::includes(pair.begin(), pair.end(), tails.begin(), tails.end())) {
        paired = true;
        break;
      }
    }
    if (!paired)
      r.fail("half-relator tails of face " + std::to_string(f) +
             " do not fit one orbit word");
  }
  r.stats["exceptional_faces"] = std::to_string(exceptional);
  for (auto& [k, v] : parent_histogram)
    r.stats["parents_" + std::to_string(k)] = std::to_string(v);
  for (auto& [k, v] : tail_set_sizes)
    r.stats["tail_sets_of_size_" + std::to_string(k)] = std::to_string(v);
  return r;
}

SuiteResult suite_faceexc(const Ball& b, std::size_t geodesic_cap) {
  SuiteResult r;
  r.name = "faceexc";
  const Presentation& p = b.presentation();
  const int half = p.half_length();
  FaceTypeOracle types(b);
  std::size_t chains_checked = 0;

  for (FaceId f = 1; f < b.face_count(); ++f) {
    if (!b.is_exceptional(f)) continue;
    const int M = b.dist(f);
    for (const Word& g : b.geodesics(f, geodesic_cap)) {
      if (g.size() < static_cast<std::size_t>(half)) continue;
      Word tail(g.end() - half, g.end());
      int wi = b.matcher().half_match(tail, 0);
      if (wi < 0) continue;  // not a first-kind geodesic
      const Word& rel = p.relator_orbit[static_cast<std::size_t>(wi)];
      Word stem(g.begin(), g.end() - half);
      ++chains_checked;

      // chain[i][0] appends ever shorter prefixes of rel; chain[i][1] appends
      // inverted suffixes. Both start at f (i = 0) and meet at the stem face.
      std::vector<std::array<FaceId, 2>> chain(static_cast<std::size_t>(half) + 1);
      bool resolved = true;
      for (int i = 0; i <= half && resolved; ++i) {
        Word w1 = concat(stem, Word(rel.begin(), rel.begin() + (half - i)));
        Word w2 = concat(stem, invert(Word(rel.begin() + (half + i), rel.end())));
        for (int j = 0; j < 2 && resolved; ++j) {
          auto id = b.find(canonical_form(b.matcher(), j == 0 ? w1 : w2));
          if (!id) {
            r.fail("chain face escaped the ball at face " + std::to_string(f));
            resolved = false;
          } else {
            chain[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *id;
          }
        }
      }
      if (!resolved) continue;
      if (chain[0][0] != f || chain[0][1] != f)
        r.fail("chain does not start at its exceptional face " + std::to_string(f));
      if (chain.back()[0] != chain.back()[1])
        r.fail("chain halves do not meet at the stem face of " + std::to_string(f));
      for (int i = 0; i <= half; ++i)
        for (int j = 0; j < 2; ++j)
          if (b.dist(chain[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) !=
              M - i)
            r.fail("chain face at offset " + std::to_string(i) + " sits at distance " +
                   std::to_string(b.dist(chain[static_cast<std::size_t>(i)]
                                              [static_cast<std::size_t>(j)])) +
                   ", want " + std::to_string(M - i));

      for (int i = 1; i <= half - 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          FaceId d = chain[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          FaceId up = chain[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
          FaceId down = chain[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j)];
          for (Letter a = 0; a < b.letter_count(); ++a) {
            FaceId n = b.neighbor(d, a);
            if (n == up || n == down) continue;
            if (n == kOutsideBall) {
              r.fail("off-chain neighbor left the ball at face " + std::to_string(f));
              continue;
            }
            if (b.dist(n) != M - i + 1) {
              r.fail("off-chain neighbor of a chain face of " + std::to_string(f) +
                     " sits at distance " + std::to_string(b.dist(n)) + ", want " +
                     std::to_string(M - i + 1));
              continue;
            }
            if (!types.recursive(n, i - 1))
              r.fail("off-chain neighbor of a chain face of " + std::to_string(f) +
                     " is not of type (" + std::to_string(i - 1) + ", " +
                     std::to_string(M) + ")");
          }
        }
      }
    }
  }
  r.stats["first_kind_chains"] = std::to_string(chains_checked);
  return r;
}

SuiteResult suite_geodexc2(const Ball& b, std::size_t geodesic_cap) {
  SuiteResult r;
  r.name = "geodexc2";
  const Presentation& p = b.presentation();
  const int half = p.half_length();
  const int full = p.relator_length();
  std::size_t branching = 0;
  std::set<int> rings_verified;

  for (FaceId f = 1; f < b.face_count(); ++f) {
    auto geods = b.geodesics(f, geodesic_cap);
    std::set<Letter> firsts;
    for (const Word& g : geods) firsts.insert(g.front());
    if (firsts.size() < 2) continue;
    ++branching;
    if (firsts.size() > 2) {
      r.fail("face " + std::to_string(f) + " has " + std::to_string(firsts.size()) +
             " distinct first letters, want 2");
      continue;
    }
    int wi = -1;
    for (const Word& g : geods) {
      wi = b.matcher().half_match(g, 0);
      if (wi >= 0) break;
    }
    if (wi < 0) {
      r.fail("no geodesic to face " + std::to_string(f) +
             " starts with a half-relator");
      continue;
    }
    const Word& rel = p.relator_orbit[static_cast<std::size_t>(wi)];
    std::set<Letter> expected{rel.front(),
                              inverse_letter(rel[static_cast<std::size_t>(full) - 1])};
    if (firsts != expected)
      r.fail("first letters at face " + std::to_string(f) +
             " are not the orbit word's outer letters");

    // The branching is carried by one vertex ring of the origin: the ring of
    // rel consists exactly of the prefix faces of both half-words.
    if (!rings_verified.count(wi)) {
      rings_verified.insert(wi);
      std::set<Word> expected_faces;
      for (int i = 0; i <= half; ++i) {
        expected_faces.insert(
            canonical_form(b.matcher(), Word(rel.begin(), rel.begin() + i)));
        expected_faces.insert(canonical_form(
            b.matcher(), invert(Word(rel.begin() + (half + i), rel.end()))));
      }
      auto rings = vertex_rings(b.matcher(), {});
      std::set<Word> ring_faces(
          rings[static_cast<std::size_t>(wi)].faces.begin(),
          rings[static_cast<std::size_t>(wi)].faces.end());
      if (ring_faces != expected_faces)
        r.fail("origin ring of orbit word " + std::to_string(wi) +
               " is not the two prefix fans");
    }
  }
  r.stats["branching_faces"] = std::to_string(branching);
  return r;
}

SuiteResult suite_face_type_equivalence(const Ball& b, int max_k) {
  SuiteResult r;
  r.name = "face-type-equivalence";
  FaceTypeOracle types(b);
  std::size_t agree = 0;
  for (FaceId f = 1; f < b.face_count(); ++f) {
    int kmax = std::min(max_k, b.radius() - b.dist(f));
    for (int k = 0; k <= kmax; ++k) {
      bool rec = types.recursive(f, k);
      bool ext = types.extension(f, k);
      if (rec != ext)
        r.fail("definitions disagree at face " + std::to_string(f) + ", k = " +
               std::to_string(k) + " (counting: " + (rec ? "yes" : "no") +
               ", extension: " + (ext ? "yes" : "no") + ")");
      else
        ++agree;
    }
  }
  r.stats["queries"] = std::to_string(agree);
  return r;
}

SuiteResult suite_metric(const Ball& b, std::uint64_t seed, std::size_t pair_budget,
                         std::size_t symmetry_samples, std::size_t triple_samples) {
  SuiteResult r;
  r.name = "metric";
  const std::size_t n = b.face_count();
  if (n * (n - 1) / 2 > pair_budget) {
    r.fail("ball has " + std::to_string(n * (n - 1) / 2) +
           " face pairs, over the budget of " + std::to_string(pair_budget));
    return r;
  }
  std::size_t pairs = 0;
  for (FaceId i = 0; i < n; ++i) {
    for (FaceId j = i + 1; j < n; ++j) {
      std::size_t d = b.distance(i, j);
      ++pairs;
      if (d == 0) {
        r.fail("distinct faces " + std::to_string(i) + ", " + std::to_string(j) +
               " at distance 0");
        continue;
      }
      std::size_t di = static_cast<std::size_t>(b.dist(i));
      std::size_t dj = static_cast<std::size_t>(b.dist(j));
      if (d > di + dj || d + std::min(di, dj) < std::max(di, dj))
        r.fail("distance " + std::to_string(d) + " between faces " + std::to_string(i) +
               ", " + std::to_string(j) + " violates the radius bounds");
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<FaceId> pick(0, static_cast<FaceId>(n - 1));
  for (std::size_t s = 0; s < symmetry_samples; ++s) {
    FaceId u = pick(rng), v = pick(rng);
    if (b.distance(u, v) != b.distance(v, u))
      r.fail("asymmetric distance between faces " + std::to_string(u) + ", " +
             std::to_string(v));
  }
  for (std::size_t s = 0; s < triple_samples; ++s) {
    FaceId u = pick(rng), v = pick(rng), w = pick(rng);
    if (b.distance(u, w) > b.distance(u, v) + b.distance(v, w))
      r.fail("triangle inequality fails on faces " + std::to_string(u) + ", " +
             std::to_string(v) + ", " + std::to_string(w));
  }
  r.stats["pairs"] = std::to_string(pairs);
  r.stats["symmetry_samples"] = std::to_string(symmetry_samples);
  r.stats["triples"] = std::to_string(triple_samples);
  return r;
}

SuiteResult suite_el_diam(const Ball& b) {
  SuiteResult r;
  r.name = "el-diam";
  std::vector<FaceId> all(b.face_count());
  for (FaceId f = 0; f < b.face_count(); ++f) all[f] = f;
  std::size_t el = set_eloignement(b, 0, all);
  std::size_t diam = set_diameter(b, all);
  if (!(el <= diam && diam <= 2 * el))
    r.fail("el = " + std::to_string(el) + ", diam = " + std::to_string(diam) +
           " violate el <= diam <= 2 el");
  r.stats["el"] = std::to_string(el);
  r.stats["diam"] = std::to_string(diam);
  return r;
}

SuiteResult suite_sphere_reference(const Presentation& p, int radius,
                                   std::size_t budget) {
  SuiteResult r;
  r.name = "sphere-reference";
  Ball fast = Ball::enumerate(p, radius, budget);
  ReferenceBall ref = reference_ball(p, radius, budget);
  for (int s = 0; s <= radius; ++s) {
    if (fast.sphere_size(s) != ref.sphere_size(s))
      r.fail("sphere " + std::to_string(s) + ": fast " +
             std::to_string(fast.sphere_size(s)) + " faces, reference " +
             std::to_string(ref.sphere_size(s)));
    r.stats["sphere_" + std::to_string(s)] = std::to_string(fast.sphere_size(s));
  }
  if (!r.pass) return r;
  // Same sets, not just same sizes.
  std::set<Word> fast_words, ref_words;
  for (FaceId f = 0; f < fast.face_count(); ++f) fast_words.insert(fast.word_of(f));
  for (const Word& w : ref.faces)
    ref_words.insert(canonical_form(fast.matcher(), w));
  if (fast_words != ref_words) r.fail("fast and reference face sets differ");
  return r;
}

std::vector<std::string> all_suite_names() {
  return {"fact1",   "fact2",   "fact3",    "adjacence",
          "parity",  "geodexc", "faceexc",  "geodexc2",
          "face-type-equivalence", "metric", "el-diam", "sphere-reference"};
}

}  // namespace disto

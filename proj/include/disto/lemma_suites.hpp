#pragma once

#include "disto/cayley.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace disto {

// Outcome of one checked statement over an enumerated region. detail holds
// the first counterexample; stats carry observed counts worth reporting even
// on success.
struct SuiteResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::map<std::string, std::string> stats;

  void fail(const std::string& d) {
    if (pass) {
      pass = false;
      detail = d;
    }
  }
};

// Letter combinatorics of the relator orbit (no ball needed).
SuiteResult suite_fact1(const Presentation& p);
SuiteResult suite_fact2(const Presentation& p);
SuiteResult suite_fact3(const Presentation& p);

// Vertex rings around each base face: closure, 4g distinct faces per ring,
// consecutive adjacency, inverse-word rings coincide, and the base face sees
// exactly 4g distinct rings (one per boundary vertex).
SuiteResult suite_adjacence(const RelatorMatcher& m, const std::vector<Word>& bases);

// Neighbors in the dual graph differ in distance by exactly one.
SuiteResult suite_parity(const Ball& b);

// Every geodesic to a multi-geodesic face either ends inside a relator-orbit
// word (last half-relator of letters) or ends in a double block around an
// orbit-external junction; at least one geodesic is of the first kind, and
// the first-kind tails single out one orbit word's two half-words.
SuiteResult suite_geodexc(const Ball& b, std::size_t geodesic_cap = 1u << 16);

// The two face chains flanking a multi-geodesic face: positions, distances,
// and the types (i - 1, M) of their off-chain neighbors.
SuiteResult suite_faceexc(const Ball& b, std::size_t geodesic_cap = 1u << 16);

// Faces whose geodesics split at the first letter: the two first letters are
// an orbit word's first letter and its last letter inverted, some geodesic
// starts with the half-relator, and the branching is carried by one vertex
// ring of the origin.
SuiteResult suite_geodexc2(const Ball& b, std::size_t geodesic_cap = 1u << 16);

// The neighbor-counting and geodesic-extension characterizations of face
// types agree wherever both are defined.
SuiteResult suite_face_type_equivalence(const Ball& b, int max_k = 6);

// Word-metric axioms: positivity and the two-sided distance bounds on all
// face pairs, symmetry on a sample, triangle inequality on random triples.
SuiteResult suite_metric(const Ball& b, std::uint64_t seed, std::size_t pair_budget,
                         std::size_t symmetry_samples, std::size_t triple_samples);

// el <= diam <= 2 el over the ball's face set.
SuiteResult suite_el_diam(const Ball& b);

// Fast enumeration against the pairwise-triviality reference ball: sphere
// sizes and face sets must coincide.
SuiteResult suite_sphere_reference(const Presentation& p, int radius,
                                   std::size_t budget = default_ball_budget());

std::vector<std::string> all_suite_names();

}  // namespace disto

#pragma once

#include "disto/symbolic.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace disto {

// Unit squares of the integer grid, indexed by their lower-left corner:
// square (i, j) is [i, i+1] x [j, j+1]. Compacts are unions of closed unit
// squares.
using GridSquare = std::pair<int, int>;
using SquareSet = std::set<GridSquare>;

// Grid lines live on the half-integer lattice: vertical line index v is
// x = v / 2, horizontal index h is y = h / 2. A closed square (i, j) meets
// vertical lines 2i, 2i+1, 2i+2 and the analogous horizontal ones.
struct GridFootprint {
  SquareSet squares;    // the compact, as squares
  SquareSet met_faces;  // every square sharing at least a point with it
  std::set<int> vlines;
  std::set<int> hlines;
  bool derived = true;  // line sets computed from the squares, not supplied

  int length() const { return static_cast<int>(vlines.size()); }
  int height() const { return static_cast<int>(hlines.size()); }
};

GridFootprint footprint_of(const SquareSet& squares);

// A footprint given by its raw meeting data: the squares met and the exact
// crossed-line index sets (a compact need not cross every line its squares
// span). Lines outside the closed span of the squares are rejected.
GridFootprint footprint_with_lines(const SquareSet& met_faces,
                                   const std::set<int>& vlines,
                                   const std::set<int>& hlines);

// Empty string when the footprint is self-consistent: every recorded line
// runs through the closed span of some square and, for derived footprints,
// line counts match the spans and met_faces is exactly the king-closure.
std::string check_footprint(const GridFootprint& fp);

inline int grid_distance(const GridSquare& a, const GridSquare& b) {
  return std::abs(a.first - b.first) + std::abs(a.second - b.second);
}

int grid_set_diameter(const SquareSet& faces);

// Distance by explicit continuous paths on a small board: a path is a face
// sequence where consecutive faces share a point, and a corner transition
// also meets the two flanking faces (the corner point lies in all four closed
// squares). Cost of a path is the number of faces it meets minus one.
int path_distance_oracle(const GridSquare& a, const GridSquare& b, int board_min,
                         int board_max);

// One compression move shrinks the longer extent by one; once both extents
// are at most 3 the region retracts into the torus fundamental domain.
struct ReductionStep {
  char axis;  // 'x' shrinks length, 'y' shrinks height
  int from;
  int to;
};

struct ReductionPlan {
  std::vector<ReductionStep> steps;
  std::string terminal = "intore";
  int diam = 0;
  SymbolicBound frag_bound;  // 4*C*diam + C'
};

ReductionPlan reduction_plan(int length, int height, int diam);
ReductionPlan reduction_plan(const GridFootprint& fp);

// Random 4-connected union of unit squares, grown square by square.
SquareSet random_blob(std::mt19937_64& rng, int square_count);

}  // namespace disto

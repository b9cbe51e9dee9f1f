#pragma once

#include "disto/rational.hpp"
#include "disto/symbolic.hpp"

#include <map>
#include <string>
#include <vector>

namespace disto {

// Target sequences are 1-based: v[0] holds v_1. Admissible means strictly
// increasing with nonincreasing differences.
bool is_admissible(const std::vector<Rat>& v, std::string* why = nullptr);

// Smallest-effort admissible majorant: a strictness lift (only when needed)
// followed by the exact concave upper hull of the lifted points.
std::vector<Rat> make_admissible(const std::vector<Rat>& v);

// Piecewise-linear increasing map, identity on (-inf, -1], defined up to the
// largest breakpoint. Queries beyond it throw budget_error.
struct PiecewiseMap {
  std::map<Rat, Rat> breaks;  // x -> h(x), both strictly increasing

  Rat domain_max() const;
  Rat evaluate(const Rat& x) const;
};

struct OrbitPerturbation {
  int start;   // integer whose forward orbit hit a lattice point
  int step;    // after how many applications
  Rat x0;      // preimage of the lattice point
  Rat before;  // the integer value h used to take
  Rat after;   // nudged value
};

// The orbit t_0 = 0 < t_1 < ... realizing the targets: t_n = v_n, bumped by
// 2^-n when v_n is an integer, and h maps each t_n to t_{n+1}. Departures
// from the ideal construction are recorded, never silently patched:
//   - displacement_violations: indices where t_{n+1} - t_n grows,
//   - monotonicity_repairs / cap_violations: indices where the bump rule had
//     to be replaced to keep t increasing (pathologically tight targets),
//   - perturbations: micro-breakpoints keeping integer orbits off the lattice.
struct OrbitModel {
  std::vector<Rat> targets;
  std::vector<Rat> orbit;  // t_0 .. t_L
  PiecewiseMap h;
  bool displacement_monotone = true;
  std::vector<int> displacement_violations;
  std::vector<int> monotonicity_repairs;
  std::vector<int> cap_violations;
  std::vector<OrbitPerturbation> perturbations;
};

// integer_horizon: how many applications of h must keep the forward orbits of
// the integers 0..integer_max off the lattice.
OrbitModel build_orbit(const std::vector<Rat>& admissible_targets,
                       int integer_horizon = 0, int integer_max = 0);

// The commutator-length bookkeeping extracted from an l-fold iterate: reach
// values i(j) = floor(h^l(j)), the pivot lambda = i(0) + 1, the first
// self-reaching index N, the per-level counts n_i and the level entry points
// j(i). All derived data is validated; violations throw property_error with
// the offending index.
struct AnnulusSchedule {
  int l = 0;  // 0 when built from an explicit reach table
  int lambda = 0;
  int N = 0;
  int i0 = 0;
  std::vector<int> reach;  // i(j) for j = 0..N
  std::vector<int> n;      // n_i for i = 0..N
  std::vector<int> j_min;  // j(i) for i = i0..N, then the sentinel j(N+1) = N+1

  int j_of(int i) const { return j_min.at(static_cast<std::size_t>(i - i0)); }
  std::vector<std::vector<int>> levels() const;  // A_i for i = i0..N
};

AnnulusSchedule schedule_from_reach(const std::vector<int>& reach);
AnnulusSchedule compute_schedule(const OrbitModel& model, int l, int j_cap = 100000);

// Remaining-crossing trajectory of strip j: L_j(r) for r = 0..lambda-1, via
// the window formula and, independently, via crossing-time thresholds.
std::vector<int> crossing_trajectory(const AnnulusSchedule& s, int j);
std::vector<int> crossing_trajectory_reference(const AnnulusSchedule& s, int j);

// Empty on success: every strip ends at exactly one crossing, decrements are
// unit steps, and the two trajectory computations agree.
std::string verify_final(const AnnulusSchedule& s);

struct LambdaGrowthRow {
  int l = 0;
  Int lambda_l;
  Rat ratio;          // lambda_l / l
  bool bound_holds;   // lambda_l <= v_l + 2^-l + 1
  SymbolicBound exponent_bound;  // (12 * lambda_l - 6) * log(18)
};

std::vector<LambdaGrowthRow> lambda_growth_check(const OrbitModel& m, int l_max);

}  // namespace disto

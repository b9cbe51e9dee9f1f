#include "disto/annulus.hpp"

#include "disto/certificates.hpp"

#include <algorithm>

namespace disto {

bool is_admissible(const std::vector<Rat>& v, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (v.empty()) return fail("target sequence is empty");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1])
      return fail("not strictly increasing at index " + std::to_string(i + 1));
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i] - v[i - 1] > v[i - 1] - v[i - 2])
      return fail("difference increases at index " + std::to_string(i + 1));
  return true;
}

std::vector<Rat> make_admissible(const std::vector<Rat>& v) {
  if (v.empty()) throw usage_error("cannot make an empty sequence admissible");
  if (is_admissible(v)) return v;

  // Strictness lift, applied only when order is broken anywhere.
  std::vector<Rat> lifted = v;
  bool strictly_increasing = true;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) strictly_increasing = false;
  if (!strictly_increasing) {
    Rat prefix_max = v[0];
    for (std::size_t i = 0; i < v.size(); ++i) {
      prefix_max = std::max(prefix_max, v[i]);
      lifted[i] = prefix_max + 1 - pow2(-static_cast<long>(i + 1));
    }
  }

  // Exact concave upper hull over the points (n, lifted_n); evaluating it at
  // the integers yields nonincreasing differences while staying a majorant.
  struct Pt {
    Rat x, y;
  };
  std::vector<Pt> hull;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    Pt c{Rat(static_cast<long>(i + 1)), lifted[i]};
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // Pop b when slope(b, c) >= slope(a, b): b lies on or under chord a-c.
      if ((c.y - b.y) * (b.x - a.x) >= (b.y - a.y) * (c.x - b.x))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(c);
  }
  std::vector<Rat> out(lifted.size());
  std::size_t seg = 0;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    Rat x(static_cast<long>(i + 1));
    while (seg + 1 < hull.size() && hull[seg + 1].x < x) ++seg;
    if (seg + 1 == hull.size()) {
      out[i] = hull[seg].y;
    } else {
      const Pt& a = hull[seg];
      const Pt& b = hull[seg + 1];
      out[i] = a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
    }
  }
  std::string why;
  if (!is_admissible(out, &why))
    throw std::logic_error("admissible completion failed: " + why);
  return out;
}

Rat PiecewiseMap::domain_max() const {
  if (breaks.empty()) throw std::logic_error("empty piecewise map");
  return breaks.rbegin()->first;
}

Rat PiecewiseMap::evaluate(const Rat& x) const {
  if (x <= -1) return x;
  if (breaks.empty() || x > domain_max())
    throw budget_error("orbit model evaluated past its last breakpoint; extend the targets");
  auto hi = breaks.upper_bound(x);
  if (hi == breaks.begin()) throw std::logic_error("piecewise map misses its anchor");
  auto lo = std::prev(hi);
  if (lo->first == x) return lo->second;
  if (hi == breaks.end()) throw std::logic_error("piecewise map domain bookkeeping broke");
  return lo->second +
         (x - lo->first) * (hi->second - lo->second) / (hi->first - lo->first);
}

OrbitModel build_orbit(const std::vector<Rat>& admissible_targets, int integer_horizon,
                       int integer_max) {
  std::string why;
  if (!is_admissible(admissible_targets, &why))
    throw usage_error("targets are not admissible: " + why);

  OrbitModel m;
  m.targets = admissible_targets;
  const std::size_t L = admissible_targets.size();
  m.orbit.assign(L + 1, Rat(0));

  auto pick_non_integer = [](Rat lo, Rat hi) {
    // (lo, hi) nonempty; at most one integer inside when hi - lo <= 1.
    Rat x = (lo + hi) / 2;
    if (is_integer(x)) x = (lo + x) / 2;
    if (is_integer(x)) x = (lo + x) / 2;
    return x;
  };

  for (std::size_t n = 1; n <= L; ++n) {
    const Rat& target = admissible_targets[n - 1];
    Rat bump = is_integer(target) ? pow2(-static_cast<long>(n)) : Rat(0);
    Rat primary = target + bump;
    if (primary > m.orbit[n - 1] && !is_integer(primary)) {
      m.orbit[n] = primary;
      continue;
    }
    // Tight or colliding targets: place t_n just above everything it must
    // clear, preferring to respect the target + 2^-n ceiling.
    Rat lo = std::max(m.orbit[n - 1], target);
    Rat hi = target + pow2(-static_cast<long>(n));
    if (hi <= lo) {
      hi = lo + pow2(-static_cast<long>(n));
      m.cap_violations.push_back(static_cast<int>(n));
    }
    m.orbit[n] = pick_non_integer(lo, hi);
    m.monotonicity_repairs.push_back(static_cast<int>(n));
  }

  for (std::size_t n = 1; n + 1 <= L; ++n) {
    Rat prev = m.orbit[n] - m.orbit[n - 1];
    Rat next = m.orbit[n + 1] - m.orbit[n];
    if (next > prev) m.displacement_violations.push_back(static_cast<int>(n));
  }
  m.displacement_monotone = m.displacement_violations.empty();

  m.h.breaks.emplace(Rat(-1), Rat(-1));
  for (std::size_t n = 0; n + 1 <= L; ++n) m.h.breaks.emplace(m.orbit[n], m.orbit[n + 1]);

  // Keep the forward orbits of small integers off the lattice by nudging the
  // map at each offending preimage. Inserting a breakpoint reroutes other
  // orbits through that segment, so rescan until stable.
  if (integer_horizon > 0) {
    const Rat dom = m.h.domain_max();
    for (int pass = 0; pass < 1000; ++pass) {
      bool perturbed = false;
      for (int i = 0; i <= integer_max && !perturbed; ++i) {
        Rat x(i);
        if (x > dom) break;
        for (int s = 1; s <= integer_horizon; ++s) {
          if (x > dom) break;
          Rat y = m.h.evaluate(x);
          if (!is_integer(y)) {
            x = y;
            continue;
          }
          auto hi = m.h.breaks.upper_bound(x);
          auto lo = std::prev(hi);
          Rat gap = std::min(y - lo->second, hi->second - y);
          Rat delta = std::min(gap, pow2(-(integer_horizon + s))) / 3;
          OrbitPerturbation pert{i, s, x, y, y - delta};
          m.h.breaks.emplace(x, y - delta);
          m.perturbations.push_back(pert);
          perturbed = true;
          break;
        }
      }
      if (!perturbed) break;
      if (pass == 999)
        throw budget_error("integer-orbit perturbation did not stabilize");
    }
    // Final audit: the scan above must have cleared every lattice hit.
    for (int i = 0; i <= integer_max; ++i) {
      Rat x(i);
      for (int s = 1; s <= integer_horizon && x <= m.h.domain_max(); ++s) {
        x = m.h.evaluate(x);
        if (is_integer(x))
          throw std::logic_error("integer orbit still hits the lattice after nudging");
      }
    }
  }
  return m;
}

std::vector<std::vector<int>> AnnulusSchedule::levels() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(N - i0 + 1));
  for (int j = 0; j <= N; ++j)
    if (reach[static_cast<std::size_t>(j)] >= i0)
      out[static_cast<std::size_t>(reach[static_cast<std::size_t>(j)] - i0)].push_back(j);
  return out;
}

AnnulusSchedule schedule_from_reach(const std::vector<int>& reach) {
  if (reach.empty()) throw usage_error("empty reach table");
  AnnulusSchedule s;
  s.N = static_cast<int>(reach.size()) - 1;
  s.reach = reach;
  for (int j = 0; j <= s.N; ++j) {
    if (reach[static_cast<std::size_t>(j)] < j)
      throw property_error("reach dips below its own strip at j = " + std::to_string(j));
    if (j < s.N && reach[static_cast<std::size_t>(j)] == j)
      throw property_error("strip " + std::to_string(j) +
                           " already self-reaches; the table should stop there");
    if (j > 0 && reach[static_cast<std::size_t>(j)] < reach[static_cast<std::size_t>(j) - 1])
      throw property_error("reach decreases at j = " + std::to_string(j));
  }
  if (reach[static_cast<std::size_t>(s.N)] != s.N)
    throw property_error("last strip must self-reach");
  s.lambda = reach[0] + 1;
  s.i0 = reach[0];

  // Entry points j(i); every level in [i0, N] must be populated.
  s.j_min.assign(static_cast<std::size_t>(s.N - s.i0 + 2), -1);
  for (int j = s.N; j >= 0; --j) {
    int i = reach[static_cast<std::size_t>(j)];
    if (i >= s.i0) s.j_min[static_cast<std::size_t>(i - s.i0)] = j;
  }
  s.j_min.back() = s.N + 1;
  for (int i = s.i0; i <= s.N; ++i)
    if (s.j_of(i) < 0)
      throw property_error("no strip reaches level " + std::to_string(i));

  // Crossing counts per strip must be nonincreasing.
  for (int j = 0; j < s.N; ++j) {
    int cj = reach[static_cast<std::size_t>(j)] - j + 1;
    int cn = reach[static_cast<std::size_t>(j) + 1] - (j + 1) + 1;
    if (cn > cj)
      throw property_error("crossing count grows from strip " + std::to_string(j) +
                           " to " + std::to_string(j + 1));
  }

  s.n.assign(static_cast<std::size_t>(s.N) + 1, 1);
  for (int i = s.i0; i <= s.N; ++i) {
    int start = s.j_min[static_cast<std::size_t>(i + 1 - s.i0)] - 1;
    long sum = 0;
    for (int k = start; k <= i - 1; ++k) sum += s.n[static_cast<std::size_t>(k)];
    long ni = static_cast<long>(s.lambda) - sum;
    if (ni < 1)
      throw property_error("round count n_" + std::to_string(i) + " is " +
                           std::to_string(ni) + ", want >= 1");
    s.n[static_cast<std::size_t>(i)] = static_cast<int>(ni);
  }

  // Partial-sum invariant backing n_i >= 1: the rounds spent on levels
  // [j(i), i) never exhaust lambda.
  for (int i = s.i0; i <= s.N; ++i) {
    long sum = 0;
    for (int k = s.j_of(i); k <= i - 1; ++k) sum += s.n[static_cast<std::size_t>(k)];
    if (sum >= s.lambda)
      throw property_error("partial sums reach lambda at level " + std::to_string(i));
  }
  return s;
}

AnnulusSchedule compute_schedule(const OrbitModel& model, int l, int j_cap) {
  if (l < 1) throw usage_error("iterate count must be >= 1");
  std::vector<int> reach;
  for (int j = 0;; ++j) {
    if (j > j_cap) throw budget_error("schedule exceeded the strip cap");
    Rat x(j);
    for (int s = 0; s < l; ++s) x = model.h.evaluate(x);
    Int fl = floor_rat(x);
    if (fl < j)
      throw std::logic_error("iterate moved strip " + std::to_string(j) + " backwards");
    if (fl > j_cap) throw budget_error("reach exceeded the strip cap");
    int i = fl.convert_to<int>();
    reach.push_back(i);
    if (i == j) break;
  }
  AnnulusSchedule s = schedule_from_reach(reach);
  s.l = l;
  return s;
}

std::vector<int> crossing_trajectory(const AnnulusSchedule& s, int j) {
  if (j < 0 || j > s.N) throw usage_error("strip index out of range");
  const int ij = s.reach[static_cast<std::size_t>(j)];
  std::vector<int> out(static_cast<std::size_t>(s.lambda), -1);
  // S(jp) = n_j + ... + n_jp, with the empty sum for jp = j - 1.
  auto S = [&](int jp) {
    long sum = 0;
    for (int k = j; k <= jp; ++k) sum += s.n[static_cast<std::size_t>(k)];
    return sum;
  };
  for (int r = 0; r < s.lambda; ++r) {
    bool placed = false;
    for (int jp = j - 1; jp <= ij - 1; ++jp) {
      long lower = std::max<long>(0, static_cast<long>(s.lambda) - S(jp + 1));
      long upper = static_cast<long>(s.lambda) - S(jp);
      if (lower <= r && r < upper) {
        out[static_cast<std::size_t>(r)] = jp + 2 - j;
        placed = true;
        break;
      }
    }
    if (!placed)
      throw property_error("no crossing window covers round " + std::to_string(r) +
                           " for strip " + std::to_string(j));
  }
  return out;
}

std::vector<int> crossing_trajectory_reference(const AnnulusSchedule& s, int j) {
  if (j < 0 || j > s.N) throw usage_error("strip index out of range");
  const int ij = s.reach[static_cast<std::size_t>(j)];
  const int count = ij - j + 1;
  // Crossing m (the step from level m to m + 1) is handled at round
  // lambda - (n_j + ... + n_{m-1}); afterwards the strip has one crossing less.
  std::vector<long> thresholds;
  for (int m = j; m <= ij; ++m) {
    long sum = 0;
    for (int k = j; k <= m - 1; ++k) sum += s.n[static_cast<std::size_t>(k)];
    thresholds.push_back(static_cast<long>(s.lambda) - sum);
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.lambda));
  for (int r = 0; r < s.lambda; ++r) {
    int done = 0;
    for (long t : thresholds)
      if (t <= r) ++done;
    out.push_back(count - done);
  }
  return out;
}

std::string verify_final(const AnnulusSchedule& s) {
  for (int j = 0; j <= s.N; ++j) {
    std::vector<int> traj, ref;
    try {
      traj = crossing_trajectory(s, j);
      ref = crossing_trajectory_reference(s, j);
    } catch (const property_error& e) {
      return e.what();
    }
    if (traj != ref)
      return "window formula and threshold count disagree for strip " + std::to_string(j);
    if (traj.front() != s.reach[static_cast<std::size_t>(j)] - j + 1)
      return "strip " + std::to_string(j) + " does not start at its crossing count";
    if (traj.back() != 1)
      return "strip " + std::to_string(j) + " ends at " + std::to_string(traj.back()) +
             " crossings, want 1";
    for (std::size_t r = 1; r < traj.size(); ++r) {
      int drop = traj[r - 1] - traj[r];
      if (drop != 0 && drop != 1)
        return "strip " + std::to_string(j) + " drops by " + std::to_string(drop) +
               " at round " + std::to_string(r);
    }
  }
  return "";
}

std::vector<LambdaGrowthRow> lambda_growth_check(const OrbitModel& m, int l_max) {
  std::vector<LambdaGrowthRow> rows;
  const int L = static_cast<int>(m.targets.size());
  for (int l = 1; l <= std::min(l_max, L); ++l) {
    LambdaGrowthRow row;
    row.l = l;
    row.lambda_l = floor_rat(m.orbit[static_cast<std::size_t>(l)]) + 1;
    row.ratio = Rat(row.lambda_l) / l;
    row.bound_holds =
        Rat(row.lambda_l) <= m.targets[static_cast<std::size_t>(l) - 1] + pow2(-l) + 1;
    row.exponent_bound = displacement_exponent_bound(Rat(row.lambda_l));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace disto

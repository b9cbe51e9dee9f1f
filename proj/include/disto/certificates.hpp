#pragma once

#include "disto/rational.hpp"
#include "disto/symbolic.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace disto {

// Fragmentation bounds. Frag(f) counts the elementary factors needed to
// write f; the bounds depend on the supporting surface through the diameter
// or the eloignement of the distorted region, with free constants kept
// symbolic.

// Surfaces with boundary: Frag <= 3 * diam + 3.
inline SymbolicBound frag_bound_with_boundary(const Int& diam) {
  SymbolicBound b;
  b.constant = Rat(3) * diam + 3;
  return b;
}

// Closed surface of genus g >= 2: Frag <= (8g - 2) * max(el - 4g, 0) + C'.
inline SymbolicBound frag_bound_closed(int genus, const Int& el) {
  if (genus < 2) throw usage_error("closed-surface bound needs genus >= 2");
  SymbolicBound b;
  Int excess = std::max<Int>(el - 4 * genus, 0);
  b.constant = Rat(8 * genus - 2) * excess;
  b.add_term("C'", 1);
  return b;
}

// Torus: Frag <= 4 * C * diam + C'.
inline SymbolicBound frag_bound_torus(const Int& diam) {
  SymbolicBound b;
  b.add_term("C", Rat(4) * diam);
  b.add_term("C'", 1);
  return b;
}

// Any surface: Frag >= (diam - 2) / C, recorded against the symbol 1/C.
inline SymbolicBound frag_lower_bound(const Int& diam) {
  SymbolicBound b;
  b.add_term("1/C", Rat(diam) - 2);
  return b;
}

// Classical distortion witnesses: word-length bounds for designated powers.

// Baumslag-Solitar BS(1, p), |p| >= 2: a^(p^n) has length at most 2n + 1.
inline Int baumslag_length_bound(const Int& p, const Int& n) {
  if (abs(p) < 2) throw usage_error("BS(1, p) is undistorted for |p| <= 1");
  if (n < 0) throw usage_error("power index must be >= 0");
  return 2 * n + 1;
}

// Integer Heisenberg group: the central element to the n^2 has length <= 4n.
inline Int heisenberg_length_bound(const Int& n) {
  if (n < 1) throw usage_error("power index must be >= 1");
  return 4 * n;
}

// Conjugator-growth rate lambda turns into the displacement exponent bound
// (12 * lambda - 6) * log(18), natural logarithm.
inline SymbolicBound displacement_exponent_bound(const Rat& lambda) {
  SymbolicBound b;
  b.add_term("log(18)", Rat(12) * lambda - 6);
  return b;
}

inline std::map<std::string, std::pair<Rat, Rat>> known_symbol_enclosures() {
  return {{"log(18)", ln18_interval()}};
}

// Ball diameter control from word lengths: diam <= 2 * l_n * mu + deltaD.
inline Rat diameter_upper_from_word_length(const Rat& l_n, const Rat& mu,
                                           const Rat& deltaD) {
  if (l_n < 0 || mu < 0 || deltaD < 0)
    throw usage_error("diameter bound inputs must be nonnegative");
  return Rat(2) * l_n * mu + deltaD;
}

}  // namespace disto

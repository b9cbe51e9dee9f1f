#pragma once

#include "disto/rational.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace disto {

enum class Verdict { yes, no, indeterminate };

inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "indeterminate";
  }
}

// Eventual growth of a nonnegative sequence: d_n = coeff * n^pow_n * (log n)^pow_log
// with exact rational exponents, plus optionally some leading exact values.
// A model with only the prefix carries no asymptotic information.
struct GrowthModel {
  bool symbolic = true;
  Rat coeff{1};    // > 0
  Rat pow_n{0};    // >= 0
  Rat pow_log{0};
  std::vector<Rat> prefix;

  static GrowthModel prefix_only(std::vector<Rat> values) {
    GrowthModel m;
    m.symbolic = false;
    m.prefix = std::move(values);
    return m;
  }
};

// "c", "n", "n^1/2", "log", "log^-2", "3*n^0.5*log^2" and the obvious
// combinations; exponents and the coefficient are exact rationals.
GrowthModel parse_growth_literal(const std::string& text);
std::string render_growth(const GrowthModel& m);

// Leading asymptotic order n^a (log n)^b (loglog n)^c with a flag for the
// identically-zero function; magnitudes compare lexicographically.
struct AsymOrder {
  bool zero = false;
  Rat a{0};
  Rat b{0};
  int c = 0;

  friend bool operator==(const AsymOrder&, const AsymOrder&) = default;
};

inline AsymOrder order_of(const GrowthModel& m) {
  return {false, m.pow_n, m.pow_log, 0};
}

// Order of d_n * log(d_n). For constant d the product is the constant
// c * log c, identically zero exactly when c = 1.
inline AsymOrder order_of_dlogd(const GrowthModel& m) {
  if (m.pow_n > 0) return {false, m.pow_n, m.pow_log + 1, 0};
  if (m.pow_log != 0) return {false, 0, m.pow_log, 1};
  return {m.coeff == 1, 0, 0, 0};
}

// Does numerator / denominator tend to zero? Equal orders have a nonzero
// limit (the coefficient ratio), so only a strictly smaller order qualifies.
inline bool tends_to_zero(const AsymOrder& num, const AsymOrder& den) {
  if (num.zero) return true;
  auto key = [](const AsymOrder& o) { return std::tie(o.a, o.b, o.c); };
  return key(num) < key(den);
}

inline Verdict criterion_sublinear(const GrowthModel& d) {
  if (!d.symbolic) return Verdict::indeterminate;
  return tends_to_zero(order_of(d), AsymOrder{false, 1, 0, 0}) ? Verdict::yes
                                                               : Verdict::no;
}

inline Verdict criterion_nlogn(const GrowthModel& d) {
  if (!d.symbolic) return Verdict::indeterminate;
  return tends_to_zero(order_of_dlogd(d), AsymOrder{false, 1, 0, 0}) ? Verdict::yes
                                                                     : Verdict::no;
}

inline Verdict criterion_over_weights(const GrowthModel& d, const GrowthModel& w) {
  if (!d.symbolic || !w.symbolic) return Verdict::indeterminate;
  return tends_to_zero(order_of_dlogd(d), order_of(w)) ? Verdict::yes : Verdict::no;
}

}  // namespace disto

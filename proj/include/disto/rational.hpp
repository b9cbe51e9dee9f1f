#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace disto {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Errors that the CLI maps to dedicated exit codes.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A checked property failed; what() carries the counterexample.
struct property_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int floor_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);  // d > 0 by cpp_rational invariant
  Int quo = n / d;
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// 2^e as a rational, e may be negative.
inline Rat pow2(long e) {
  if (e >= 0) return Rat(Int(1) << e, 1);
  return Rat(1, Int(1) << -e);
}

inline std::string rat_str(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

inline double rat_double(const Rat& q) { return q.convert_to<double>(); }

// Accepts "p/q", integers, and plain decimals ("0.5" -> 1/2). Exact only.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw usage_error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Int n(s.substr(0, slash)), d(s.substr(slash + 1));
      if (d == 0) throw usage_error("zero denominator in '" + s + "'");
      return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s), 1);
    std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    bool neg = whole[0] == '-';
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rat r = Rat(Int(whole), 1) + (neg ? -1 : 1) * Rat(Int(frac.empty() ? "0" : frac), scale);
    return r;
  } catch (const std::exception&) {
    throw usage_error("cannot parse rational literal '" + s + "'");
  }
}

// Exact comparison of a*log2(K) with b, for a > 0, K >= 1.
// Returns -1, 0, +1. Zero is only possible when K is a power of two.
// Reduces to the integer comparison K^q <=> 2^p after clearing denominators,
// with a bit-length shortcut so the big power is rarely materialized in full.
inline int cmp_mul_log2(const Rat& a, const Int& K, const Rat& b) {
  if (a <= 0) throw std::invalid_argument("cmp_mul_log2 needs a > 0");
  if (K < 1) throw std::invalid_argument("cmp_mul_log2 needs K >= 1");
  if (K == 1) return b == 0 ? 0 : (b > 0 ? -1 : 1);  // log2(1) = 0
  if (b <= 0) return 1;                              // lhs > 0 >= b
  // Power of two: exact rational log.
  {
    Int t = K;
    unsigned e = 0;
    while ((t & 1) == 0) {
      t >>= 1;
      ++e;
    }
    if (t == 1) {
      Rat lhs = a * e;
      return lhs < b ? -1 : (lhs == b ? 0 : 1);
    }
  }
  // a*log2(K) vs b  <=>  log2(K) vs b/a = p/q  <=>  K^q vs 2^p.
  Rat r = b / a;
  Int p = numerator(r), q = denominator(r);
  // Bit-length bounds: 2^(bits-1) <= K^q < 2^(q*bits). Cheap decisive cases first.
  unsigned long kbits = msb(K) + 1;  // floor(log2 K) + 1
  // K^q has between q*(kbits-1)+1 and q*kbits bits.
  Int lo_bits = q * (Int(kbits) - 1);  // K^q >= 2^lo_bits
  Int hi_bits = q * Int(kbits);        // K^q < 2^hi_bits
  if (lo_bits > p) return 1;
  if (hi_bits <= p) return -1;
  // Boundary band: materialize K^q (exponent gap is < q*1 bits, still fine at our scales).
  if (q > 2'000'000) throw budget_error("cmp_mul_log2: denominator too large for exact check");
  Int pw = boost::multiprecision::pow(K, q.convert_to<unsigned>());
  unsigned long pwbits = msb(pw) + 1;
  Int pwb(pwbits);
  if (pwb - 1 > p) return 1;  // pw >= 2^(pwbits-1) > 2^p
  if (pwb - 1 < p) return -1; // pw < 2^pwbits <= 2^p
  // Same bit length as 2^p: K not a power of two => pw != 2^p exactly.
  Int two_p = Int(1) << p.convert_to<unsigned>();
  return pw < two_p ? -1 : 1;
}

// Certified enclosure of ln(18), wide enough to be safely correct and tight
// enough for reporting. ln(18) = 2.8903717578961646922...
inline std::pair<Rat, Rat> ln18_interval() {
  return {Rat(Int("28903717578961646"), Int("10000000000000000")),
          Rat(Int("28903717578961647"), Int("10000000000000000"))};
}

}  // namespace disto

#include "disto/avila.hpp"

#include <cmath>

namespace disto {

Word avila_word(std::uint64_t n) {
  if (n == 0) throw usage_error("word indices start at 1");
  int l = 63;
  while (!(n >> l)) --l;  // l = floor(log2 n)
  Word w;
  w.reserve(static_cast<std::size_t>(l));
  for (int bit = l - 1; bit >= 0; --bit)
    w.push_back(((n >> bit) & 1) ? Letter(2) : Letter(0));
  return w;
}

std::uint64_t avila_index(const Word& w) {
  if (w.size() >= 63) throw usage_error("word too long to index in 64 bits");
  std::uint64_t m = 0;
  for (Letter l : w) {
    if (l != 0 && l != 2)
      throw std::invalid_argument("enumeration words use positive letters a, b only");
    m = (m << 1) | (l == 2 ? 1u : 0u);
  }
  return (std::uint64_t(1) << w.size()) + m;
}

Int avila_bound(std::uint64_t n) {
  if (n == 0) throw usage_error("word indices start at 1");
  int l = 63;
  while (!(n >> l)) --l;
  return Int(14) * l + 14;
}

Int flatten_index(const Int& i, std::size_t j, const std::vector<Int>& block_sizes) {
  if (j < 1 || j > block_sizes.size())
    throw std::invalid_argument("block column out of range");
  if (i < 1 || i > block_sizes[j - 1])
    throw std::invalid_argument("block row out of range");
  Int idx = i;
  for (std::size_t jj = 0; jj + 1 < j; ++jj) idx += block_sizes[jj];
  return idx;
}

std::pair<Int, std::size_t> unflatten_index(const Int& idx,
                                            const std::vector<Int>& block_sizes) {
  if (idx < 1) throw std::invalid_argument("flattened index out of range");
  Int rest = idx;
  for (std::size_t j = 0; j < block_sizes.size(); ++j) {
    if (rest <= block_sizes[j]) return {rest, j + 1};
    rest -= block_sizes[j];
  }
  throw std::invalid_argument("flattened index out of range");
}

Int SequenceSpec::operator()(const Int& n) const {
  if (n < 1) throw std::invalid_argument("profile sequences are 1-based");
  switch (kind) {
    case Kind::constant:
      return value;
    case Kind::identity:
      return n;
    case Kind::ceil_sqrt: {
      Int r = sqrt(n);
      return r * r == n ? r : r + 1;
    }
    case Kind::table: {
      if (n > static_cast<int>(table.size()))
        throw budget_error("profile table exhausted at index " + n.str());
      return table[n.convert_to<std::size_t>() - 1];
    }
  }
  throw std::logic_error("unhandled sequence kind");
}

std::string SequenceSpec::describe() const {
  switch (kind) {
    case Kind::constant:
      return "const:" + value.str();
    case Kind::identity:
      return "identity";
    case Kind::ceil_sqrt:
      return "ceil-sqrt";
    default:
      return "table[" + std::to_string(table.size()) + "]";
  }
}

namespace {

// lhs = 14 * l * m * (log2(K) + 1) compared against n; true when lhs <= n.
bool condition_holds_exact(const Int& l, int m, const Int& K, const Int& n) {
  if (m == 0) return true;
  Rat a = Rat(14) * l * m;
  Rat b = Rat(n) - a;
  return cmp_mul_log2(a, K, b) <= 0;
}

// -1: clearly holds, +1: clearly fails, 0: too close to call with doubles.
int condition_prefilter(const Int& l, int m, const Int& K, const Int& n) {
  double lhs = 14.0 * l.convert_to<double>() * m *
               (std::log2(K.convert_to<double>()) + 1.0);
  double rhs = n.convert_to<double>();
  double band = 1e-9 * std::max(lhs, rhs) + 1e-12;
  if (lhs < rhs - band) return -1;
  if (lhs > rhs + band) return 1;
  return 0;
}

bool condition_holds(const Int& l, int m, const Int& K, const Int& n) {
  int quick = condition_prefilter(l, m, K, n);
  if (quick != 0) return quick < 0;
  return condition_holds_exact(l, m, K, n);
}

}  // namespace

SigmaResult build_sigma(const SigmaProfile& profile, int count, const Int& horizon) {
  SigmaResult res;
  if (count < 1) throw usage_error("sigma needs at least one position");
  res.sigma.push_back(1);
  Int ksum = profile.k(1);
  for (int m = 1; m < count; ++m) {
    bool found = false;
    for (Int n = res.sigma.back() + 1; n <= horizon; ++n) {
      Int ln = profile.l(n);
      Int K = ksum + profile.k(n);
      if (!condition_holds(ln, m, K, n)) continue;
      SigmaWitness w;
      w.m = m;
      w.sigma = n;
      w.l_sel = ln;
      w.ksum = K;
      if (n - 1 > res.sigma.back()) {
        w.boundary = true;
        w.l_prev = profile.l(n - 1);
        w.kprev = ksum + profile.k(n - 1);
      }
      res.witnesses.push_back(std::move(w));
      res.sigma.push_back(n);
      ksum = K;
      found = true;
      break;
    }
    if (!found) {
      res.blocking_m = m + 1;
      res.reason = "no admissible index for position " + std::to_string(m + 1) +
                   " within horizon " + horizon.str();
      return res;
    }
  }
  res.complete = true;
  return res;
}

std::string verify_sigma(const SigmaResult& r) {
  for (std::size_t i = 1; i < r.sigma.size(); ++i)
    if (r.sigma[i] <= r.sigma[i - 1])
      return "sigma is not strictly increasing at position " + std::to_string(i + 1);
  for (const SigmaWitness& w : r.witnesses) {
    if (!condition_holds_exact(w.l_sel, w.m, w.ksum, w.sigma))
      return "accepted index " + w.sigma.str() + " fails its inequality (m = " +
             std::to_string(w.m) + ")";
    if (w.boundary &&
        condition_holds_exact(w.l_prev, w.m, w.kprev, w.sigma - 1))
      return "index " + Int(w.sigma - 1).str() +
             " already satisfies the inequality, so " + w.sigma.str() +
             " is not minimal (m = " + std::to_string(w.m) + ")";
  }
  return "";
}

}  // namespace disto

#pragma once

#include "disto/rational.hpp"
#include "disto/word.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace disto {

inline GeneratorAlphabet avila_alphabet() { return GeneratorAlphabet{{"a", "b"}}; }

// The n-th word of the binary enumeration: n = 2^L + m with 0 <= m < 2^L maps
// to the L binary digits of m, high bit first, 0 |-> a and 1 |-> b. n = 1 is
// the empty word.
Word avila_word(std::uint64_t n);
std::uint64_t avila_index(const Word& w);

// Conjugating-element length budget for the n-th word: 14 * floor(log2 n) + 14.
Int avila_bound(std::uint64_t n);

// Column-major index into the triangular array of blocks: entry (i, j) with
// 1 <= i <= k[j-1] flattens to i + sum of the first j-1 block sizes.
Int flatten_index(const Int& i, std::size_t j, const std::vector<Int>& block_sizes);
std::pair<Int, std::size_t> unflatten_index(const Int& idx,
                                            const std::vector<Int>& block_sizes);

// A growth profile assigns every index n >= 1 a word length l_n >= 1 and a
// block size k_n >= 1.
struct SequenceSpec {
  enum class Kind { constant, identity, ceil_sqrt, table } kind = Kind::constant;
  Int value{1};
  std::vector<Int> table;  // 1-based: table[n-1]

  Int operator()(const Int& n) const;
  std::string describe() const;
};

struct SigmaProfile {
  SequenceSpec l;
  SequenceSpec k;
};

// One accepted index with the data needed to recheck its defining inequality
// exactly: l_sel * m * (14 * log2(ksum) + 14) <= sigma, and the previous
// candidate fails it.
struct SigmaWitness {
  int m = 0;          // constraints use the count of previously chosen indices
  Int sigma;          // sigma(m + 1)
  Int l_sel;          // l at sigma(m + 1)
  Int ksum;           // k-sum over the first m + 1 chosen indices
  bool boundary = false;  // sigma - 1 was a valid candidate position (> sigma(m))
  Int l_prev, kprev;      // profile data at sigma - 1 when boundary is set
};

struct SigmaResult {
  bool complete = false;
  std::vector<Int> sigma;  // sigma(1), sigma(2), ...
  std::vector<SigmaWitness> witnesses;
  int blocking_m = 0;      // first unplaceable position when !complete
  std::string reason;
};

// Greedy minimal choice of sigma(m+1) > sigma(m) subject to the growth
// inequality; the scan is double-driven with a safety band that falls back to
// exact arithmetic near the boundary.
SigmaResult build_sigma(const SigmaProfile& profile, int count, const Int& horizon);

// Exact recheck of every witness via integer-power comparison; empty string
// on success, else a description of the first failure.
std::string verify_sigma(const SigmaResult& r);

}  // namespace disto

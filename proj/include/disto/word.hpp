#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace disto {

// Letters index into a generator alphabet; generator i occupies letters 2i
// (plain) and 2i+1 (inverse), so inversion is a bit flip and the natural
// integer order a1 < A1 < b1 < B1 < a2 < ... doubles as the shortlex letter
// order.
using Letter = std::int8_t;
using Word = std::vector<Letter>;

inline Letter inverse_letter(Letter l) { return static_cast<Letter>(l ^ 1); }

struct GeneratorAlphabet {
  std::vector<std::string> generator_names;

  int generator_count() const { return static_cast<int>(generator_names.size()); }
  int letter_count() const { return 2 * generator_count(); }

  std::string letter_name(Letter l) const {
    std::string n = generator_names.at(static_cast<size_t>(l >> 1));
    if (l & 1) n[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(n[0])));
    return n;
  }

  // Tokens use case to mark inversion: "a2" is a generator, "A2" its inverse.
  Letter parse_letter(const std::string& token) const {
    if (token.empty()) throw std::invalid_argument("empty letter token");
    std::string lowered = token;
    bool inv = std::isupper(static_cast<unsigned char>(lowered[0])) != 0;
    lowered[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lowered[0])));
    for (int i = 0; i < generator_count(); ++i)
      if (generator_names[static_cast<size_t>(i)] == lowered)
        return static_cast<Letter>(2 * i + (inv ? 1 : 0));
    throw std::invalid_argument("unknown letter token '" + token + "'");
  }
};

inline Word invert(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(inverse_letter(*it));
  return r;
}

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Cancels adjacent inverse pairs until none remain. Single stack pass.
inline Word free_reduce(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (Letter l : w) {
    if (!r.empty() && r.back() == inverse_letter(l))
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

inline bool is_freely_reduced(const Word& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse_letter(w[i - 1])) return false;
  return true;
}

inline Word rotate(const Word& w, size_t k) {
  Word r;
  r.reserve(w.size());
  for (size_t i = 0; i < w.size(); ++i) r.push_back(w[(i + k) % w.size()]);
  return r;
}

inline std::vector<Word> cyclic_permutations(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (size_t k = 0; k < w.size(); ++k) out.push_back(rotate(w, k));
  return out;
}

// Length first, then lexicographic in the letter order.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline std::string format_word(const GeneratorAlphabet& al, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += al.letter_name(l);
  }
  return out;
}

// Space-separated letter tokens; "1" (or empty) denotes the identity.
inline Word parse_word(const GeneratorAlphabet& al, const std::string& text) {
  Word w;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token != "1") w.push_back(al.parse_letter(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == ',' || c == '.') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return w;
}

inline bool contains_subword(const Word& host, const Word& needle) {
  if (needle.empty()) return true;
  if (needle.size() > host.size()) return false;
  for (size_t i = 0; i + needle.size() <= host.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < needle.size(); ++j)
      if (host[i + j] != needle[j]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace disto

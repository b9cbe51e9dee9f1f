#include "disto/rewriter.hpp"

#include "disto/rational.hpp"

#include <algorithm>
#include <set>

namespace disto {

RelatorMatcher::RelatorMatcher(const Presentation& p) : pres_(&p) {
  const int letters = std::max(p.alphabet.letter_count(), 1);
  next_.emplace_back(letters, -1);
  word_at_.push_back(-1);
  for (std::size_t wi = 0; wi < p.relator_orbit.size(); ++wi) {
    std::int32_t node = 0;
    for (Letter l : p.relator_orbit[wi]) {
      std::int32_t& slot = next_[static_cast<std::size_t>(node)][static_cast<std::size_t>(l)];
      if (slot < 0) {
        slot = static_cast<std::int32_t>(next_.size());
        next_.emplace_back(letters, -1);
        word_at_.push_back(static_cast<std::int32_t>(wi));
      }
      node = slot;
      // Depth 1 nodes are shared between orbit words; anything deeper is
      // unique, so the last writer wins harmlessly.
      word_at_[static_cast<std::size_t>(node)] = static_cast<std::int32_t>(wi);
    }
  }
}

std::pair<int, int> RelatorMatcher::longest_match(const Word& w, std::size_t i) const {
  std::int32_t node = 0;
  int len = 0, word = -1;
  for (std::size_t j = i; j < w.size(); ++j) {
    node = next_[static_cast<std::size_t>(node)][static_cast<std::size_t>(w[j])];
    if (node < 0) break;
    ++len;
    word = word_at_[static_cast<std::size_t>(node)];
  }
  return {len, word};
}

int RelatorMatcher::half_match(const Word& w, std::size_t i) const {
  const int half = pres_->half_length();
  if (half == 0 || i + static_cast<std::size_t>(half) > w.size()) return -1;
  std::int32_t node = 0;
  for (int j = 0; j < half; ++j) {
    node = next_[static_cast<std::size_t>(node)][static_cast<std::size_t>(w[i + static_cast<std::size_t>(j)])];
    if (node < 0) return -1;
  }
  return word_at_[static_cast<std::size_t>(node)];
}

std::vector<SubwordMatch> find_simplifiable(const RelatorMatcher& m, const Word& w) {
  const Presentation& p = m.presentation();
  std::vector<SubwordMatch> out;
  if (p.kind != GroupKind::closed_surface) return out;
  const int half = p.half_length();
  std::vector<SubwordMatch> candidates;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto [len, word] = m.longest_match(w, i);
    if (len > half)
      candidates.push_back({i, static_cast<std::size_t>(len), word});
  }
  // Keep inclusion-maximal runs. Per-start lengths are already maximal, so a
  // run can only be swallowed by one starting earlier and reaching further.
  for (const SubwordMatch& c : candidates) {
    bool contained = false;
    for (const SubwordMatch& d : candidates) {
      if (d.start == c.start && d.length == c.length) continue;
      if (d.start <= c.start && d.start + d.length >= c.start + c.length) {
        contained = true;
        break;
      }
    }
    if (!contained) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const SubwordMatch& x, const SubwordMatch& y) {
    if (x.length != y.length) return x.length > y.length;
    return x.start < y.start;
  });
  return out;
}

Word apply_match(const RelatorMatcher& m, const Word& w, const SubwordMatch& match) {
  const Presentation& p = m.presentation();
  const Word& relator = p.relator_orbit.at(static_cast<std::size_t>(match.orbit_index));
  Word replacement = invert(
      Word(relator.begin() + static_cast<std::ptrdiff_t>(match.length), relator.end()));
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(match.start));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(match.start + match.length),
             w.end());
  return free_reduce(out);
}

std::optional<Word> dehn_step(const RelatorMatcher& m, const Word& w) {
  auto matches = find_simplifiable(m, w);
  if (matches.empty()) return std::nullopt;
  return apply_match(m, w, matches.front());
}

Word dehn_reduce(const RelatorMatcher& m, const Word& w) {
  Word cur = free_reduce(w);
  while (true) {
    auto next = dehn_step(m, cur);
    if (!next) return cur;
    cur = std::move(*next);
  }
}

bool is_trivial(const RelatorMatcher& m, const Word& w) {
  return dehn_reduce(m, w).empty();
}

bool equal_elements(const RelatorMatcher& m, const Word& u, const Word& v) {
  return is_trivial(m, free_reduce(concat(u, invert(v))));
}

namespace {

// Explores the flip closure of a Dehn-irreducible word. Returns the shortlex
// least member, or a strictly shorter word if some flip freely cancels (the
// caller then restarts).
struct FlipResult {
  Word word;
  bool shortened = false;
};

FlipResult flip_minimize(const RelatorMatcher& m, const Word& start) {
  const Presentation& p = m.presentation();
  const int half = p.half_length();
  std::set<Word> seen{start};
  std::vector<Word> queue{start};
  Word best = start;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Word u = queue[qi];
    if (u.size() < static_cast<std::size_t>(half)) continue;
    for (std::size_t i = 0; i + static_cast<std::size_t>(half) <= u.size(); ++i) {
      int wi = m.half_match(u, i);
      if (wi < 0) continue;
      const Word& relator = p.relator_orbit[static_cast<std::size_t>(wi)];
      Word repl = invert(Word(relator.begin() + half, relator.end()));
      Word v(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
      v.insert(v.end(), repl.begin(), repl.end());
      v.insert(v.end(), u.begin() + static_cast<std::ptrdiff_t>(i) + half, u.end());
      v = free_reduce(v);
      if (v.size() < u.size()) return {v, true};
      if (!find_simplifiable(m, v).empty()) return {dehn_reduce(m, v), true};
      if (seen.insert(v).second) {
        queue.push_back(v);
        if (shortlex_less(v, best)) best = v;
        if (seen.size() > 200000)
          throw budget_error("flip closure exceeded 200000 words");
      }
    }
  }
  return {best, false};
}

}  // namespace

Word canonical_form(const RelatorMatcher& m, const Word& w) {
  const Presentation& p = m.presentation();
  Word cur = free_reduce(w);
  if (p.kind != GroupKind::closed_surface) return cur;
  while (true) {
    cur = dehn_reduce(m, cur);
    if (cur.size() < static_cast<std::size_t>(p.half_length())) return cur;
    FlipResult r = flip_minimize(m, cur);
    if (!r.shortened) return r.word;
    cur = std::move(r.word);
  }
}

Word canonical_form(const Presentation& p, const Word& w) {
  RelatorMatcher m(p);
  return canonical_form(m, w);
}

bool is_trivial(const Presentation& p, const Word& w) {
  RelatorMatcher m(p);
  return is_trivial(m, w);
}

std::size_t geodesic_distance(const RelatorMatcher& m, const Word& u, const Word& v) {
  return canonical_form(m, free_reduce(concat(invert(u), v))).size();
}

}  // namespace disto

#include "disto/cayley.hpp"

#include "disto/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace disto {

std::size_t default_ball_budget() {
  if (const char* env = std::getenv("DISTO_BALL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw usage_error("DISTO_BALL_BUDGET must be a positive integer");
  }
  return 5'000'000;
}

std::uint64_t Ball::pack(const Word& w) {
  // 5 bits per letter, offset by one so the empty slot is zero. Words longer
  // than 12 letters do not fit; enumerate() caps the radius accordingly.
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    key |= static_cast<std::uint64_t>(w[i] + 1) << (5 * i);
  return key;
}

Ball Ball::enumerate(const Presentation& p, int radius, std::size_t budget) {
  if (radius < 0 || radius > 12)
    throw usage_error("ball radius must lie in [0, 12] (packed face keys)");
  if (p.kind == GroupKind::torus)
    throw usage_error("the torus has no relator model here; use the grid module");
  const int letters = p.alphabet.letter_count();
  if (letters < 2 || letters > 16)
    throw usage_error("ball enumeration supports 1 to 8 generators");

  Ball b;
  b.pres_ = std::make_shared<const Presentation>(p);
  b.matcher_ = std::make_unique<RelatorMatcher>(*b.pres_);
  b.radius_ = radius;
  b.letters_ = letters;

  auto add_face = [&](FaceId prefix_parent, Letter last, int dist) -> FaceId {
    if (b.dist_.size() >= budget)
      throw budget_error("ball budget of " + std::to_string(budget) + " faces exceeded");
    FaceId id = static_cast<FaceId>(b.dist_.size());
    b.dist_.push_back(static_cast<std::uint8_t>(dist));
    b.prefix_parent_.push_back(prefix_parent);
    b.last_letter_.push_back(last);
    b.parents_.emplace_back();
    b.adjacency_.insert(b.adjacency_.end(), static_cast<std::size_t>(letters), kOutsideBall);
    return id;
  };

  add_face(kOutsideBall, -1, 0);
  b.index_.emplace(pack({}), 0);
  b.sphere_first_ = {0, 1};

  for (int r = 0; r < radius; ++r) {
    FaceId first = b.sphere_first_[static_cast<std::size_t>(r)];
    FaceId last = b.sphere_first_[static_cast<std::size_t>(r) + 1];
    for (FaceId x = first; x < last; ++x) {
      Word wx = b.word_of(x);
      for (Letter l = 0; l < letters; ++l) {
        if (!wx.empty() && l == inverse_letter(wx.back())) {
          b.adjacency_[static_cast<std::size_t>(x) * letters + static_cast<std::size_t>(l)] =
              b.prefix_parent_[x];
          continue;
        }
        Word u = wx;
        u.push_back(l);
        Word cf = canonical_form(*b.matcher_, u);
        auto slot = [&]() -> FaceId& {
          return b.adjacency_[static_cast<std::size_t>(x) * letters +
                              static_cast<std::size_t>(l)];
        };
        if (cf.size() == static_cast<std::size_t>(r) + 1) {
          auto it = b.index_.find(pack(cf));
          if (it != b.index_.end()) {
            slot() = it->second;
            b.parents_[it->second].emplace_back(x, l);
          } else {
            // First discovery comes from the shortlex prefix parent, so the
            // candidate word is already canonical.
            if (cf != u)
              throw std::logic_error("ball enumeration discovered a face out of order");
            FaceId id = add_face(x, l, r + 1);
            b.index_.emplace(pack(cf), id);
            b.parents_[id].emplace_back(x, l);
            slot() = id;
          }
        } else if (cf.size() + 1 == static_cast<std::size_t>(r)) {
          auto it = b.index_.find(pack(cf));
          if (it == b.index_.end())
            throw std::logic_error("inward neighbor missing from ball index");
          slot() = it->second;
        } else {
          throw std::logic_error("neighbor distance differs from face distance by != 1");
        }
      }
    }
    b.sphere_first_.push_back(static_cast<FaceId>(b.dist_.size()));
  }

  // Boundary faces only know their inward edges; recover them from parents.
  if (radius > 0) {
    FaceId first = b.sphere_first_[static_cast<std::size_t>(radius)];
    FaceId last = b.sphere_first_[static_cast<std::size_t>(radius) + 1];
    for (FaceId x = first; x < last; ++x)
      for (auto [pf, l] : b.parents_[x])
        b.adjacency_[static_cast<std::size_t>(x) * letters +
                     static_cast<std::size_t>(inverse_letter(l))] = pf;
  }
  return b;
}

Word Ball::word_of(FaceId f) const {
  Word w;
  while (f != 0) {
    w.push_back(last_letter_[f]);
    f = prefix_parent_[f];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<FaceId> Ball::find(const Word& canonical_word) const {
  if (canonical_word.size() > static_cast<std::size_t>(radius_)) return std::nullopt;
  auto it = index_.find(pack(canonical_word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::pair<FaceId, FaceId> Ball::sphere(int r) const {
  if (r < 0 || r > radius_) throw std::out_of_range("sphere radius outside ball");
  return {sphere_first_[static_cast<std::size_t>(r)],
          sphere_first_[static_cast<std::size_t>(r) + 1]};
}

std::size_t Ball::sphere_size(int r) const {
  auto [a, z] = sphere(r);
  return z - a;
}

bool Ball::is_exceptional(FaceId f) const {
  if (f == 0)
    throw std::invalid_argument("exceptionality is undefined for the origin face");
  return parents_[f].size() >= 2;
}

std::size_t Ball::geodesic_count(FaceId f) const {
  if (geodesic_count_.empty()) {
    geodesic_count_.assign(dist_.size(), 0);
    geodesic_count_[0] = 1;
    for (FaceId id = 1; id < dist_.size(); ++id) {
      std::size_t sum = 0;
      for (auto [pf, l] : parents_[id]) {
        (void)l;
        sum += geodesic_count_[pf];
      }
      geodesic_count_[id] = sum;
    }
  }
  return geodesic_count_[f];
}

std::vector<Word> Ball::geodesics(FaceId f, std::size_t cap) const {
  if (geodesic_count(f) > cap)
    throw budget_error("face has " + std::to_string(geodesic_count(f)) +
                       " geodesics, cap is " + std::to_string(cap));
  std::vector<Word> out;
  Word scratch;
  auto rec = [&](auto&& self, FaceId g) -> void {
    if (g == 0) {
      Word w(scratch.rbegin(), scratch.rend());
      out.push_back(std::move(w));
      return;
    }
    for (auto [pf, l] : parents_[g]) {
      scratch.push_back(l);
      self(self, pf);
      scratch.pop_back();
    }
  };
  rec(rec, f);
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::size_t Ball::distance(FaceId u, FaceId v) const {
  return geodesic_distance(*matcher_, word_of(u), word_of(v));
}

FaceId Ball::walk_from_origin(const Word& w) const {
  FaceId cur = 0;
  for (Letter l : w) {
    cur = neighbor(cur, l);
    if (cur == kOutsideBall) return kOutsideBall;
  }
  return cur;
}

std::size_t set_diameter(const Ball& b, const std::vector<FaceId>& faces) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j)
      best = std::max(best, b.distance(faces[i], faces[j]));
  return best;
}

std::size_t set_eloignement(const Ball& b, FaceId base, const std::vector<FaceId>& faces) {
  std::size_t best = 0;
  for (FaceId f : faces) best = std::max(best, b.distance(base, f));
  return best;
}

bool FaceTypeOracle::has_type(FaceId f, int k, int l) {
  const Ball& b = *ball_;
  if (b.dist(f) != l - k) return false;
  if (f == 0) return false;
  std::uint64_t key = (static_cast<std::uint64_t>(f) << 8) | static_cast<std::uint64_t>(k);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  bool result;
  if (k == 0) {
    result = !b.is_exceptional(f);
  } else {
    int off_type = 0;
    for (Letter a = 0; a < b.letter_count(); ++a) {
      FaceId n = b.neighbor(f, a);
      if (n == kOutsideBall)
        throw std::invalid_argument("face type query needs dist(f) + k <= radius");
      if (!has_type(n, k - 1, l)) ++off_type;
    }
    result = off_type == 1;
  }
  memo_.emplace(key, result);
  return result;
}

bool FaceTypeOracle::recursive(FaceId f, int k) {
  const Ball& b = *ball_;
  if (f == 0) throw std::invalid_argument("face types are undefined at the origin");
  if (k < 0 || b.dist(f) + k > b.radius())
    throw std::invalid_argument("face type query needs 0 <= k and dist(f) + k <= radius");
  return has_type(f, k, b.dist(f) + k);
}

bool FaceTypeOracle::extension(FaceId f, int k) {
  const Ball& b = *ball_;
  if (f == 0) throw std::invalid_argument("face types are undefined at the origin");
  if (k < 0 || b.dist(f) + k > b.radius())
    throw std::invalid_argument("face type query needs 0 <= k and dist(f) + k <= radius");
  if (b.is_exceptional(f)) return false;
  Word base = b.word_of(f);
  std::vector<std::pair<FaceId, Letter>> frontier{{f, base.back()}};
  for (int step = 0; step < k; ++step) {
    std::vector<std::pair<FaceId, Letter>> next;
    for (auto [face, last] : frontier) {
      for (Letter l = 0; l < b.letter_count(); ++l) {
        if (l == inverse_letter(last)) continue;
        FaceId nb = b.neighbor(face, l);
        if (nb == kOutsideBall)
          throw std::logic_error("reduced extension left the ball");
        if (nb == 0 || b.is_exceptional(nb)) return false;
        next.emplace_back(nb, l);
      }
    }
    frontier = std::move(next);
  }
  return true;
}

std::vector<VertexRing> vertex_rings(const RelatorMatcher& m, const Word& base) {
  const Presentation& p = m.presentation();
  std::vector<VertexRing> rings;
  rings.reserve(p.relator_orbit.size());
  for (std::size_t wi = 0; wi < p.relator_orbit.size(); ++wi) {
    const Word& rel = p.relator_orbit[wi];
    VertexRing ring;
    ring.orbit_index = static_cast<int>(wi);
    Word cur = free_reduce(base);
    for (Letter l : rel) {
      ring.faces.push_back(canonical_form(m, cur));
      cur.push_back(l);
      cur = free_reduce(cur);
    }
    rings.push_back(std::move(ring));
  }
  return rings;
}

ReferenceBall reference_ball(const Presentation& p, int radius, std::size_t budget) {
  if (radius < 0) throw usage_error("reference ball radius must be >= 0");
  RelatorMatcher m(p);
  const int letters = p.alphabet.letter_count();
  const int gens = p.alphabet.generator_count();

  ReferenceBall rb;
  rb.faces.push_back({});
  rb.dist.push_back(0);
  rb.sphere_first = {0, 1};

  using AbelKey = std::vector<int>;
  auto abel_of = [&](const Word& w) {
    AbelKey k(static_cast<std::size_t>(gens), 0);
    for (Letter l : w) k[static_cast<std::size_t>(l >> 1)] += (l & 1) ? -1 : 1;
    return k;
  };
  using Bucket = std::map<AbelKey, std::vector<std::size_t>>;

  Bucket below;  // sphere r-1
  Bucket cur;    // sphere r
  cur[abel_of({})].push_back(0);

  for (int r = 0; r < radius; ++r) {
    Bucket next;
    std::size_t first = rb.sphere_first[static_cast<std::size_t>(r)];
    std::size_t last = rb.sphere_first[static_cast<std::size_t>(r) + 1];
    for (std::size_t x = first; x < last; ++x) {
      Word wx = rb.faces[x];  // copy: rb.faces may reallocate below
      for (Letter l = 0; l < letters; ++l) {
        if (!wx.empty() && l == inverse_letter(wx.back())) continue;
        Word u = wx;
        u.push_back(l);
        AbelKey key = abel_of(u);
        auto equal_to_any = [&](const Bucket& bucket) -> bool {
          auto it = bucket.find(key);
          if (it == bucket.end()) return false;
          for (std::size_t idx : it->second)
            if (equal_elements(m, u, rb.faces[idx])) return true;
          return false;
        };
        if (equal_to_any(below)) continue;
        if (equal_to_any(next)) continue;
        if (rb.faces.size() >= budget)
          throw budget_error("reference ball budget exceeded");
        next[key].push_back(rb.faces.size());
        rb.faces.push_back(std::move(u));
        rb.dist.push_back(r + 1);
      }
    }
    rb.sphere_first.push_back(rb.faces.size());
    below = std::move(cur);
    cur = std::move(next);
  }
  return rb;
}

}  // namespace disto

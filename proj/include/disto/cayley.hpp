#pragma once

#include "disto/rewriter.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace disto {

using FaceId = std::uint32_t;
inline constexpr FaceId kOutsideBall = 0xffffffffu;

std::size_t default_ball_budget();  // DISTO_BALL_BUDGET env override, else 5e6

// Metric ball around the identity face in the dual tessellation. Faces are
// identified with their shortlex-least geodesic words; ids are assigned
// sphere by sphere in shortlex order, so the layout is deterministic.
//
// The adjacency table covers every face: interior rows are complete, boundary
// rows keep their inward edges and mark the rest as kOutsideBall. Walking a
// word through the table therefore either resolves exactly or certifies that
// some prefix left the ball.
class Ball {
 public:
  static Ball enumerate(const Presentation& p, int radius,
                        std::size_t budget = default_ball_budget());

  const Presentation& presentation() const { return *pres_; }
  const RelatorMatcher& matcher() const { return *matcher_; }
  int radius() const { return radius_; }
  std::size_t face_count() const { return dist_.size(); }
  int letter_count() const { return pres_->alphabet.letter_count(); }

  int dist(FaceId f) const { return dist_[f]; }
  Word word_of(FaceId f) const;
  std::optional<FaceId> find(const Word& canonical_word) const;

  // Sphere r as the id range [first, last).
  std::pair<FaceId, FaceId> sphere(int r) const;
  std::size_t sphere_size(int r) const;

  FaceId neighbor(FaceId f, Letter l) const {
    return adjacency_[static_cast<std::size_t>(f) * static_cast<std::size_t>(letters_) +
                      static_cast<std::size_t>(l)];
  }

  // Every (face, letter) pair one step closer to the origin.
  const std::vector<std::pair<FaceId, Letter>>& parents(FaceId f) const {
    return parents_[f];
  }

  // More than one geodesic reaches f. Undefined for the origin (throws).
  bool is_exceptional(FaceId f) const;

  // All geodesic words from the origin to f; throws budget_error past cap.
  std::vector<Word> geodesics(FaceId f, std::size_t cap = 1u << 20) const;
  std::size_t geodesic_count(FaceId f) const;

  // Word-metric distance between two ball faces (computed by the rewriter,
  // not the adjacency table, so it is usable as an independent cross-check).
  std::size_t distance(FaceId u, FaceId v) const;

  // Applies w to the origin through the adjacency table. kOutsideBall means
  // some prefix exceeded the radius.
  FaceId walk_from_origin(const Word& w) const;

 private:
  Ball() = default;

  std::shared_ptr<const Presentation> pres_;
  std::unique_ptr<RelatorMatcher> matcher_;
  int radius_ = 0;
  int letters_ = 0;

  std::vector<std::uint8_t> dist_;
  std::vector<FaceId> prefix_parent_;
  std::vector<Letter> last_letter_;
  std::vector<std::vector<std::pair<FaceId, Letter>>> parents_;
  std::vector<FaceId> adjacency_;
  std::vector<FaceId> sphere_first_;  // size radius+2, sphere r = [s[r], s[r+1])
  std::unordered_map<std::uint64_t, FaceId> index_;

  mutable std::vector<std::size_t> geodesic_count_;  // lazy, 0 = unknown

  static std::uint64_t pack(const Word& w);
};

// Maximal pairwise distance within a face set.
std::size_t set_diameter(const Ball& b, const std::vector<FaceId>& faces);
// Maximal distance from a base face to the set.
std::size_t set_eloignement(const Ball& b, FaceId base, const std::vector<FaceId>& faces);

// Face types (k, l): a type (0, l) face is non-exceptional at distance l; a
// type (k, l) face sits at distance l - k and all of its neighbors except
// exactly one have type (k - 1, l). The second characterization walks the
// reduced extensions of the face's canonical geodesic and demands that every
// face they visit, up to k letters out, is non-exceptional. Both require
// dist(f) + k <= radius so that the needed adjacency rows exist.
class FaceTypeOracle {
 public:
  explicit FaceTypeOracle(const Ball& b) : ball_(&b) {}

  bool recursive(FaceId f, int k);
  bool extension(FaceId f, int k);

 private:
  bool has_type(FaceId f, int k, int l);

  const Ball* ball_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

// The faces meeting the vertices of a base face's boundary, one ring per
// relator-orbit word: ring step i applies the word's i-th letter. Rings are
// given by canonical words so they can be compared across bases.
struct VertexRing {
  int orbit_index = -1;
  std::vector<Word> faces;  // size = relator length, starts at the base face
};

std::vector<VertexRing> vertex_rings(const RelatorMatcher& m, const Word& base);

// Independent ball enumeration that never calls canonical_form: faces carry
// their first-discovered word and identification is by pairwise triviality
// tests inside letter-exponent buckets. Slow, for cross-validation.
struct ReferenceBall {
  std::vector<Word> faces;
  std::vector<int> dist;
  std::vector<std::size_t> sphere_first;

  std::size_t sphere_size(int r) const {
    return sphere_first[static_cast<std::size_t>(r) + 1] - sphere_first[static_cast<std::size_t>(r)];
  }
};

ReferenceBall reference_ball(const Presentation& p, int radius,
                             std::size_t budget = default_ball_budget());

}  // namespace disto

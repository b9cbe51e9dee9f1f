#include "disto/torus_grid.hpp"

#include "disto/rational.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace disto {

GridFootprint footprint_of(const SquareSet& squares) {
  GridFootprint fp;
  fp.squares = squares;
  for (const auto& [i, j] : squares) {
    for (int di = -1; di <= 1; ++di)
      for (int dj = -1; dj <= 1; ++dj) fp.met_faces.insert({i + di, j + dj});
    for (int v = 0; v <= 2; ++v) fp.vlines.insert(2 * i + v);
    for (int h = 0; h <= 2; ++h) fp.hlines.insert(2 * j + h);
  }
  return fp;
}

GridFootprint footprint_with_lines(const SquareSet& met_faces,
                                   const std::set<int>& vlines,
                                   const std::set<int>& hlines) {
  if (met_faces.empty()) throw usage_error("footprint needs at least one square");
  GridFootprint fp;
  fp.squares = met_faces;
  fp.met_faces = met_faces;
  fp.vlines = vlines;
  fp.hlines = hlines;
  fp.derived = false;
  std::string why = check_footprint(fp);
  if (!why.empty()) throw usage_error("inconsistent footprint data: " + why);
  return fp;
}

std::string check_footprint(const GridFootprint& fp) {
  if (fp.squares.empty())
    return fp.met_faces.empty() && fp.vlines.empty() && fp.hlines.empty()
               ? ""
               : "empty compact with nonempty footprint data";
  for (int v : fp.vlines) {
    bool hit = false;
    for (const auto& [i, j] : fp.squares) {
      (void)j;
      if (v >= 2 * i && v <= 2 * i + 2) {
        hit = true;
        break;
      }
    }
    if (!hit) return "vertical line " + std::to_string(v) + " misses every square";
  }
  for (int h : fp.hlines) {
    bool hit = false;
    for (const auto& [i, j] : fp.squares) {
      (void)i;
      if (h >= 2 * j && h <= 2 * j + 2) {
        hit = true;
        break;
      }
    }
    if (!hit) return "horizontal line " + std::to_string(h) + " misses every square";
  }
  if (!fp.derived) {
    for (const GridSquare& s : fp.squares)
      if (!fp.met_faces.count(s)) return "a listed square is missing from met_faces";
    return "";
  }
  // Derived footprints are a union of closed squares: line sets must be
  // exactly the ones the squares generate, and met_faces the king-closure.
  GridFootprint fresh = footprint_of(fp.squares);
  if (fresh.vlines != fp.vlines || fresh.hlines != fp.hlines)
    return "line sets disagree with the squares";
  if (fresh.met_faces != fp.met_faces) return "met face set is not the king-closure";
  return "";
}

int grid_set_diameter(const SquareSet& faces) {
  int best = 0;
  for (auto it = faces.begin(); it != faces.end(); ++it)
    for (auto jt = std::next(it); jt != faces.end(); ++jt)
      best = std::max(best, grid_distance(*it, *jt));
  return best;
}

int path_distance_oracle(const GridSquare& a, const GridSquare& b, int board_min,
                         int board_max) {
  // Dijkstra over squares. An edge move meets one new face; a corner move
  // meets the target plus both flanking faces, so it costs three. With these
  // weights the continuous-path minimum is realized.
  auto in_board = [&](const GridSquare& s) {
    return s.first >= board_min && s.first <= board_max && s.second >= board_min &&
           s.second <= board_max;
  };
  if (!in_board(a) || !in_board(b))
    throw usage_error("oracle query outside the board");
  std::map<GridSquare, int> dist;
  using Entry = std::pair<int, GridSquare>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[a] = 0;
  pq.push({0, a});
  while (!pq.empty()) {
    auto [d, s] = pq.top();
    pq.pop();
    if (dist[s] < d) continue;
    if (s == b) return d;
    static const int edge[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    static const int corner[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (auto& e : edge) {
      GridSquare nxt{s.first + e[0], s.second + e[1]};
      if (!in_board(nxt)) continue;
      int nd = d + 1;
      auto it = dist.find(nxt);
      if (it == dist.end() || it->second > nd) {
        dist[nxt] = nd;
        pq.push({nd, nxt});
      }
    }
    for (auto& c : corner) {
      GridSquare nxt{s.first + c[0], s.second + c[1]};
      if (!in_board(nxt)) continue;
      int nd = d + 3;
      auto it = dist.find(nxt);
      if (it == dist.end() || it->second > nd) {
        dist[nxt] = nd;
        pq.push({nd, nxt});
      }
    }
  }
  throw std::logic_error("oracle target unreachable on a connected board");
}

ReductionPlan reduction_plan(int length, int height, int diam) {
  ReductionPlan plan;
  while (length > 3) {
    plan.steps.push_back({'x', length, length - 1});
    --length;
  }
  while (height > 3) {
    plan.steps.push_back({'y', height, height - 1});
    --height;
  }
  plan.diam = diam;
  plan.frag_bound.add_term("C", Rat(4) * diam);
  plan.frag_bound.add_term("C'", 1);
  return plan;
}

ReductionPlan reduction_plan(const GridFootprint& fp) {
  return reduction_plan(fp.length(), fp.height(), grid_set_diameter(fp.met_faces));
}

SquareSet random_blob(std::mt19937_64& rng, int square_count) {
  SquareSet blob{{0, 0}};
  std::vector<GridSquare> frontier{{0, 0}};
  static const int edge[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (static_cast<int>(blob.size()) < square_count) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    GridSquare base = frontier[pick(rng)];
    std::uniform_int_distribution<int> dir(0, 3);
    auto& e = edge[dir(rng)];
    GridSquare nxt{base.first + e[0], base.second + e[1]};
    if (blob.insert(nxt).second) frontier.push_back(nxt);
  }
  return blob;
}

}  // namespace disto

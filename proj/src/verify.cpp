#include "verify.hpp"

#include <algorithm>
#include <set>

#include "geometry.hpp"

namespace gridloc {

void GridDrawing::check_shape() const {
  if (dim < 2) throw input_error("drawing dimension must be >= 2");
  if (static_cast<int>(points.size()) != graph.vertex_count())
    throw input_error("drawing must map every vertex to a point");
  for (const auto& p : points)
    if (p.dim() != dim)
      throw input_error("point dimension does not match drawing dimension");
}

bool is_valid_drawing(const GridDrawing& dr) {
  dr.check_shape();
  std::set<GridPoint> seen;
  for (const auto& p : dr.points)
    if (!seen.insert(p).second) return false;  // not injective
  for (auto [u, v] : dr.graph.edges()) {
    for (int w = 0; w < dr.graph.vertex_count(); ++w) {
      if (w == u || w == v) continue;
      if (on_closed_segment(dr.points[w], dr.points[u], dr.points[v]))
        return false;
    }
  }
  return true;
}

BigInt gp(const GridDrawing& dr) {
  dr.check_shape();
  BigInt best = 0;
  for (auto [u, v] : dr.graph.edges()) {
    if (dr.points[u] == dr.points[v])
      throw input_error("edge endpoints drawn at the same point");
    BigInt count = coordinate_gcd(dr.points[u], dr.points[v]) + 1;
    best = std::max(best, count);
  }
  return best;
}

namespace {

Point2<BigInt> as_point2(const GridPoint& p) {
  return {p.coords[0], p.coords[1]};
}

}  // namespace

bool is_planar_drawing(const GridDrawing& dr) {
  dr.check_shape();
  if (dr.dim != 2)
    throw input_error("planarity test supports only dim-2 drawings");
  const auto& edges = dr.graph.edges();
  for (auto [u, v] : edges)
    if (dr.points[u] == dr.points[v]) return false;  // degenerate segment
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      std::optional<Point2<BigInt>> shared;
      int common = -1;
      if (a == c || a == d) common = a;
      if (b == c || b == d) common = b;
      if (common >= 0) shared = as_point2(dr.points[common]);
      if (!segments_meet_safely(as_point2(dr.points[a]), as_point2(dr.points[b]),
                                as_point2(dr.points[c]), as_point2(dr.points[d]),
                                shared))
        return false;
    }
  }
  return true;
}

bool is_proper(const GridDrawing& dr) {
  return is_valid_drawing(dr) && is_planar_drawing(dr) && gp(dr) == 2;
}

std::map<std::vector<BigInt>, std::vector<int>> column_ranks(
    const GridDrawing& dr) {
  dr.check_shape();
  std::map<std::vector<BigInt>, std::vector<int>> ranks;
  for (int v = 0; v < dr.graph.vertex_count(); ++v) {
    std::vector<BigInt> rank(dr.points[v].coords.begin(),
                             dr.points[v].coords.end() - 1);
    ranks[rank].push_back(v);
  }
  return ranks;
}

namespace {

// Small-coordinate exhaustive search over placements, int64 arithmetic.
struct BruteForce {
  const Graph& g;
  int side;                       // box + 1
  std::vector<std::pair<int, int>> pos;  // chosen coordinates per vertex
  std::vector<char> occupied;
  int best;  // current best max-points-per-segment; INT_MAX while none found
  bool found = false;

  BruteForce(const Graph& g, int box)
      : g(g), side(box + 1), pos(g.vertex_count()),
        occupied(side * side, 0), best(1 << 30) {}

  static int igcd(int a, int b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
      int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static bool on_seg(std::pair<int, int> p, std::pair<int, int> a,
                     std::pair<int, int> b) {
    long long cross = (long long)(b.first - a.first) * (p.second - a.second) -
                      (long long)(b.second - a.second) * (p.first - a.first);
    if (cross != 0) return false;
    long long dot = (long long)(p.first - a.first) * (b.first - a.first) +
                    (long long)(p.second - a.second) * (b.second - a.second);
    long long len = (long long)(b.first - a.first) * (b.first - a.first) +
                    (long long)(b.second - a.second) * (b.second - a.second);
    return dot >= 0 && dot <= len;
  }

  void search(int v, int max_pts) {
    if (max_pts >= best) return;  // cannot improve
    if (v == g.vertex_count()) {
      best = max_pts;
      found = true;
      return;
    }
    for (int cell = 0; cell < side * side; ++cell) {
      if (occupied[cell]) continue;
      std::pair<int, int> p{cell % side, cell / side};
      int new_max = max_pts;
      bool ok = true;
      for (int u : g.neighbors(v)) {
        if (u >= v) continue;
        int pts = igcd(p.first - pos[u].first, p.second - pos[u].second) + 1;
        new_max = std::max(new_max, pts);
        if (new_max >= best) {
          ok = false;
          break;
        }
        // no earlier vertex may sit on the new segment
        for (int w = 0; w < v && ok; ++w) {
          if (w == u) continue;
          if (on_seg(pos[w], p, pos[u])) ok = false;
        }
      }
      if (ok) {
        // the new point may not sit on any existing edge segment
        for (auto [a, b] : g.edges()) {
          if (a >= v || b >= v) continue;
          if (on_seg(p, pos[a], pos[b])) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      pos[v] = p;
      occupied[cell] = 1;
      search(v + 1, new_max);
      occupied[cell] = 0;
    }
  }
};

}  // namespace

std::optional<int> min_gp_bruteforce(const Graph& g, int box) {
  if (g.vertex_count() > 5 || box > 4 || box < 0)
    throw budget_error("min_gp_bruteforce is limited to n <= 5, box <= 4");
  if (g.vertex_count() == 0) return 0;
  if ((box + 1) * (box + 1) < g.vertex_count()) return std::nullopt;
  BruteForce bf(g, box);
  // seed: a drawing with no edges has gp 0
  bf.search(0, g.edges().empty() ? 0 : 2);
  if (!bf.found) return std::nullopt;
  return bf.best;
}

}  // namespace gridloc

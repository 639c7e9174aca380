#include "planar.hpp"

#include <algorithm>
#include <set>

#include "geometry.hpp"

namespace gridloc {

namespace {

Point2<Rational> at(const RealEmbedding& e, int v) {
  return {e.points[v].first, e.points[v].second};
}

Rational as_rational(std::pair<Rational, Rational> num_den) {
  Rational q = num_den.first / num_den.second;
  q.canonicalize();
  return q;
}

// Nearest integer to q; .5 ties round up.
BigInt round_to_int(const Rational& q) {
  BigInt num = q.get_num(), den = q.get_den();  // den > 0 canonical
  return floor_div(2 * num + den, 2 * den);
}

}  // namespace

bool is_planar_embedding(const RealEmbedding& e) {
  int n = e.graph.vertex_count();
  if (static_cast<int>(e.points.size()) != n)
    throw input_error("embedding must place every vertex");
  std::set<std::pair<Rational, Rational>> seen;
  for (const auto& p : e.points)
    if (!seen.insert(p).second) return false;
  const auto& edges = e.graph.edges();
  for (auto [u, v] : edges)
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (on_segment2(at(e, w), at(e, u), at(e, v))) return false;
    }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      std::optional<Point2<Rational>> shared;
      if (a == c || a == d) shared = at(e, a);
      if (b == c || b == d) shared = at(e, b);
      if (!segments_meet_safely(at(e, a), at(e, b), at(e, c), at(e, d),
                                shared))
        return false;
    }
  return true;
}

Coloring four_color(const Graph& g, const SearchBudget& budget) {
  if (!is_planar_graph(g)) throw input_error("graph is not planar");
  for (int k = 1; k <= 4; ++k) {
    auto witness = k_color(g, k, budget);
    if (witness) return *witness;
  }
  throw internal_error("planar graph with no four-coloring");
}

Rational min_feature_distance_sq(const RealEmbedding& e) {
  int n = e.graph.vertex_count();
  if (static_cast<int>(e.points.size()) != n)
    throw input_error("embedding must place every vertex");
  const auto& edges = e.graph.edges();

  bool have = false;
  Rational best;
  auto keep = [&](const Rational& q) {
    if (!have || q < best) {
      best = q;
      have = true;
    }
  };

  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      Rational q = as_rational(segment_segment_dist_sq(
          at(e, a), at(e, b), at(e, c), at(e, d)));
      if (q == 0) throw input_error("embedding is not planar");
      keep(q);
    }
  for (auto [u, v] : edges)
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      Rational q =
          as_rational(point_segment_dist_sq(at(e, w), at(e, u), at(e, v)));
      if (q == 0) throw input_error("vertex lies on a non-incident segment");
      keep(q);
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (e.graph.has_edge(u, v)) continue;
      Rational dx = e.points[u].first - e.points[v].first;
      Rational dy = e.points[u].second - e.points[v].second;
      Rational q = dx * dx + dy * dy;
      if (q == 0) throw input_error("two vertices coincide");
      keep(q);
    }
  if (!have) {
    // no vertex-disjoint features at all: fall back to vertex spacing
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        Rational dx = e.points[u].first - e.points[v].first;
        Rational dy = e.points[u].second - e.points[v].second;
        Rational q = dx * dx + dy * dy;
        if (q == 0) throw input_error("two vertices coincide");
        keep(q);
      }
  }
  if (!have) return Rational(1);  // single vertex
  Rational r_sq = best / 4;
  r_sq.canonicalize();
  return r_sq;
}

Rational grid_min_distance_sq_bound(int n) {
  if (n < 2) throw input_error("grid size must be >= 2");
  long long den = 2LL * n * n - 2LL * n + 1;
  return Rational(1, static_cast<long>(den));
}

namespace {

struct CrtTarget {
  BigInt residue;
  BigInt modulus;
};

CrtTarget vertical_target(int color_id, const std::vector<BigInt>& primes) {
  ResidueSystem rs;
  int c2 = color_id & 1;
  rs.constraints.push_back({2, c2});
  rs.constraints.push_back({3, c2});
  for (const BigInt& p : primes)
    rs.constraints.push_back({p, big_mod(BigInt(color_id), p)});
  auto sol = crt_solve(rs);
  return {sol.value, sol.modulus};
}

}  // namespace

GridDrawing properize(const RealEmbedding& e, const Coloring& c,
                      ProperizeReport* report) {
  const Graph& g = e.graph;
  int n = g.vertex_count();
  if (static_cast<int>(e.points.size()) != n)
    throw input_error("embedding must place every vertex");
  if (!is_proper_coloring(g, c))
    throw input_error("coloring is not proper");
  if (c.k > 4) throw input_error("coloring must use at most four colors");
  if (!is_planar_embedding(e))
    throw input_error("input embedding is not planar");

  GridDrawing dr;
  dr.dim = 2;
  dr.graph = g;
  dr.points.resize(n);
  if (n == 0) {
    if (report) *report = ProperizeReport{0, 0, 0, 6, 1, 1};
    return dr;
  }

  auto c1 = [&](int v) { return (c.color[v] >> 1) & 1; };

  Rational r_sq = min_feature_distance_sq(e);
  // horizontal scale: at least twelve grid lines across each safety disk
  BigInt f_scale = ceil_sqrt_rational(144 * r_sq.get_den(), r_sq.get_num());
  if (f_scale < 1) f_scale = 1;

  std::vector<BigInt> xs(n);
  bool placed_all = false;
  for (int attempt = 0; attempt < 64 && !placed_all; ++attempt) {
    placed_all = true;
    // strict bound: (candidate - target)^2 < f^2 r^2
    Rational ball = Rational(f_scale) * Rational(f_scale) * r_sq;
    for (int v = 0; v < n && placed_all; ++v) {
      Rational target = Rational(f_scale) * e.points[v].first;
      BigInt want = c1(v);  // residue mod 6 is the color bit itself
      BigInt base = round_to_int((target - want) / 6);
      bool found = false;
      for (long step = 0; step <= 2'000'000 && !found; ++step) {
        for (int dir = 0; dir < (step == 0 ? 1 : 2); ++dir) {
          BigInt k = (dir == 0) ? BigInt(base + step) : BigInt(base - step);
          BigInt cand = 6 * k + want;
          Rational off = Rational(cand) - target;
          if (off * off >= ball) continue;
          bool clash = false;
          for (int u : g.neighbors(v))
            if (u < v && xs[u] == cand) {
              clash = true;
              break;
            }
          if (clash) continue;
          xs[v] = cand;
          found = true;
          break;
        }
        // both directions out of the ball: stop early
        if (step > 0) {
          Rational lo = Rational(6 * (base - step) + want) - target;
          Rational hi = Rational(6 * (base + step) + want) - target;
          if (lo * lo >= ball && hi * hi >= ball) break;
        }
      }
      if (!found) placed_all = false;
    }
    if (!placed_all) f_scale *= 2;
  }
  if (!placed_all)
    throw internal_error("horizontal snapping found no free line");

  // clearance of the x-snapped, y-stretched embedding
  RealEmbedding mid;
  mid.graph = g;
  mid.points.resize(n);
  for (int v = 0; v < n; ++v)
    mid.points[v] = {Rational(xs[v]),
                     Rational(Rational(f_scale) * e.points[v].second)};
  Rational r2_sq = min_feature_distance_sq(mid);

  // primes occurring in horizontal edge differences
  std::set<BigInt> prime_set;
  for (auto [u, v] : g.edges()) {
    BigInt dx = big_abs(xs[u] - xs[v]);
    if (dx == 0)
      throw internal_error("adjacent vertices share a vertical line");
    for (const BigInt& p : prime_factors(dx))
      if (p >= 5) prime_set.insert(p);
  }
  std::vector<BigInt> primes(prime_set.begin(), prime_set.end());
  BigInt modulus = 6;
  for (const BigInt& p : primes) modulus *= p;

  BigInt g_scale = ceil_sqrt_rational(4 * modulus * modulus * r2_sq.get_den(),
                                      r2_sq.get_num());
  if (g_scale < 1) g_scale = 1;

  std::vector<BigInt> ys(n);
  Rational ball2 = Rational(g_scale) * Rational(g_scale) * r2_sq;
  for (int v = 0; v < n; ++v) {
    auto target_class = vertical_target(c.color[v], primes);
    Rational target = Rational(g_scale) * mid.points[v].second;
    BigInt k = round_to_int((target - target_class.residue) / Rational(modulus));
    BigInt cand = modulus * k + target_class.residue;
    Rational off = Rational(cand) - target;
    if (off * off >= ball2)
      throw internal_error("vertical snapping left the safety disk");
    ys[v] = cand;
  }

  for (int v = 0; v < n; ++v) dr.points[v] = GridPoint{{xs[v], ys[v]}};

  bool primitive_ok = g.edges().empty() || gp(dr) == 2;
  if (!is_valid_drawing(dr) || !is_planar_drawing(dr) || !primitive_ok)
    throw internal_error("snapped drawing failed certification");

  if (report) {
    BigInt minx = xs[0], maxx = xs[0], miny = ys[0], maxy = ys[0];
    for (int v = 1; v < n; ++v) {
      minx = std::min(minx, xs[v]);
      maxx = std::max(maxx, xs[v]);
      miny = std::min(miny, ys[v]);
      maxy = std::max(maxy, ys[v]);
    }
    report->width = maxx - minx;
    report->height = maxy - miny;
    report->prime_count = static_cast<int>(primes.size());
    report->modulus = modulus;
    report->x_scale = f_scale;
    report->y_scale = g_scale;
  }
  return dr;
}

Coloring parity_coloring(const GridDrawing& dr) {
  dr.check_shape();
  if (dr.dim != 2)
    throw input_error("parity coloring is defined for dim-2 drawings");
  Coloring c;
  c.k = 4;
  c.color.resize(dr.graph.vertex_count());
  for (int v = 0; v < dr.graph.vertex_count(); ++v) {
    int x = static_cast<int>(big_mod(dr.points[v].coords[0], 2).get_si());
    int y = static_cast<int>(big_mod(dr.points[v].coords[1], 2).get_si());
    c.color[v] = 2 * x + y;
  }
  return c;
}

}  // namespace gridloc

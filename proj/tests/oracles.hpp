#ifndef GRIDLOC_TEST_ORACLES_HPP
#define GRIDLOC_TEST_ORACLES_HPP

// Independent reference implementations for the test suites. Everything
// here is deliberately naive (scans, full enumerations) and shares no code
// with the library paths it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "graph.hpp"
#include "lattice.hpp"

namespace gridloc::testing {

// Deterministic RNG (splitmix64); the standard distributions are not
// pinned across platforms, so tests draw through these helpers only.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool chance(int num, int den) { return below(den) < num; }
};

// All integer points of the closed segment by scanning the bounding box.
inline std::vector<std::vector<long>> segment_points_scan(
    const std::vector<long>& a, const std::vector<long>& b) {
  std::size_t d = a.size();
  std::vector<long> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = std::min(a[i], b[i]);
    hi[i] = std::max(a[i], b[i]);
  }
  std::vector<std::vector<long>> out;
  std::vector<long> p = lo;
  while (true) {
    // membership: collinear with a->b and inside the box
    bool on = true;
    for (std::size_t i = 0; i < d && on; ++i)
      for (std::size_t j = i + 1; j < d && on; ++j) {
        long long lhs = static_cast<long long>(p[i] - a[i]) * (b[j] - a[j]);
        long long rhs = static_cast<long long>(p[j] - a[j]) * (b[i] - a[i]);
        if (lhs != rhs) on = false;
      }
    if (on) out.push_back(p);
    std::size_t k = 0;
    while (k < d && ++p[k] > hi[k]) {
      p[k] = lo[k];
      ++k;
    }
    if (k == d) break;
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    // order along the segment direction from a to b
    long long tx = 0, ty = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      tx += static_cast<long long>(x[i] - a[i]) * (b[i] - a[i]);
      ty += static_cast<long long>(y[i] - a[i]) * (b[i] - a[i]);
    }
    return tx < ty;
  });
  return out;
}

// Random simple graph with edge probability num/den.
inline Graph random_graph(Rng& rng, int n, int num, int den) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

// All graphs on n vertices up to isomorphism, by extending the list for
// n-1 and deduplicating via the minimum adjacency bitmask over all vertex
// permutations.
std::vector<Graph> all_graphs_up_to_iso(int n);
std::vector<Graph> connected_graphs_up_to_iso(int n);

bool is_connected(const Graph& g);

// Exhaustive chromatic number by enumerating all k^n assignments.
int chromatic_bruteforce(const Graph& g);

// Random planar graph: a random triangulation (repeated vertex insertion
// into faces) with a random subset of edges deleted. Keeps >= 1 edge.
Graph random_planar_graph(Rng& rng, int n, int delete_num, int delete_den);

}  // namespace gridloc::testing

#endif

#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gridloc {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw input_error("vertex count must be nonnegative");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("edge endpoint out of range: {" + std::to_string(u) +
                        "," + std::to_string(v) + "}");
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw input_error("duplicate edge {" + std::to_string(edges[i].first) +
                        "," + std::to_string(edges[i].second) + "}");
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

Graph Graph::induced(const std::vector<int>& vertices,
                     std::vector<int>* old_to_new) const {
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= n_) throw input_error("vertex out of range");
    if (pos[v] != -1) throw input_error("repeated vertex in subgraph set");
    pos[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> sub;
  for (auto [u, v] : edges_)
    if (pos[u] != -1 && pos[v] != -1) sub.push_back({pos[u], pos[v]});
  if (old_to_new) *old_to_new = pos;
  return Graph(static_cast<int>(vertices.size()), std::move(sub));
}

int Coloring::used_colors() const {
  std::set<int> seen(color.begin(), color.end());
  return static_cast<int>(seen.size());
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (c.color[v] < 0 || c.color[v] >= c.k) return false;
  for (auto [u, v] : g.edges())
    if (c.color[u] == c.color[v]) return false;
  return true;
}

int VertexPartition::path_class_count() const {
  int k = 0;
  for (const auto& cls : classes)
    if (cls.kind == ClassKind::Path) ++k;
  return k;
}

bool is_independent_set(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw input_error("vertex out of range in set");
    in[v] = 1;
  }
  for (int v : s)
    for (int w : g.neighbors(v))
      if (in[w]) return false;
  return true;
}

bool is_linear_forest(const Graph& g, const std::vector<int>& s) {
  int n = g.vertex_count();
  std::vector<char> in(n, 0);
  for (int v : s) {
    if (v < 0 || v >= n) throw input_error("vertex out of range in set");
    if (in[v]) throw input_error("repeated vertex in set");
    in[v] = 1;
  }
  // max induced degree <= 2
  int induced_edges = 0;
  for (int v : s) {
    int d = 0;
    for (int w : g.neighbors(v))
      if (in[w]) ++d;
    if (d > 2) return false;
    induced_edges += d;
  }
  induced_edges /= 2;
  // acyclicity via union-find
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v : s)
    for (int w : g.neighbors(v)) {
      if (w <= v || !in[w]) continue;
      int a = find(v), b = find(w);
      if (a == b) return false;
      parent[a] = b;
    }
  // cross-check: a forest on |s| vertices has at most |s|-1 edges
  return induced_edges <= static_cast<int>(s.size()) - 1 || s.empty();
}

PartitionCheck validate_partition(const Graph& g, const VertexPartition& p) {
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    for (int v : p.classes[i].vertices) {
      if (v < 0 || v >= g.vertex_count())
        return {false, "vertex " + std::to_string(v) + " out of range"};
      if (owner[v] != -1)
        return {false, "vertex " + std::to_string(v) + " appears in classes " +
                           std::to_string(owner[v]) + " and " +
                           std::to_string(i)};
      owner[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (owner[v] == -1)
      return {false, "vertex " + std::to_string(v) + " not covered"};
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    const auto& cls = p.classes[i];
    if (cls.kind == ClassKind::Normal) {
      if (!is_independent_set(g, cls.vertices))
        return {false, "class " + std::to_string(i) +
                           " declared normal but not independent"};
    } else {
      if (!is_linear_forest(g, cls.vertices))
        return {false, "class " + std::to_string(i) +
                           " declared path but not a linear forest"};
    }
  }
  return {true, ""};
}

namespace {

struct ColorSearch {
  const Graph& g;
  int k;
  const SearchBudget& budget;
  std::vector<int> order;   // vertices, most constrained first
  std::vector<int> color;   // by original vertex id
  std::int64_t nodes = 0;

  ColorSearch(const Graph& g, int k, const SearchBudget& budget)
      : g(g), k(k), budget(budget), color(g.vertex_count(), -1) {
    order.resize(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return g.degree(a) > g.degree(b);
    });
  }

  bool run(std::size_t idx, int max_used) {
    if (idx == order.size()) return true;
    budget.spend(nodes);
    int v = order[idx];
    // colors beyond max_used+1 are symmetric; never branch on them
    int limit = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (run(idx + 1, std::max(max_used, c))) return true;
      color[v] = -1;
    }
    return false;
  }
};

int greedy_clique_size(const Graph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

int greedy_coloring_bound(const Graph& g) {
  int used = 0;
  std::vector<int> color(g.vertex_count(), -1);
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  for (int v : order) {
    std::vector<char> taken(g.vertex_count() + 1, 0);
    for (int w : g.neighbors(v))
      if (color[w] >= 0) taken[color[w]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace

std::optional<Coloring> k_color(const Graph& g, int k,
                                const SearchBudget& budget) {
  if (k < 0) throw input_error("color count must be nonnegative");
  if (g.vertex_count() == 0) return Coloring{k, {}};
  if (k == 0) return std::nullopt;
  ColorSearch search(g, k, budget);
  if (!search.run(0, -1)) return std::nullopt;
  return Coloring{k, search.color};
}

ChromaticResult chromatic_number(const Graph& g, const SearchBudget& budget) {
  if (g.vertex_count() == 0) return {0, Coloring{0, {}}};
  int lb = std::max(1, greedy_clique_size(g));
  int ub = greedy_coloring_bound(g);
  for (int k = lb; k <= ub; ++k) {
    auto witness = k_color(g, k, budget);
    if (witness) return {k, *witness};
  }
  throw internal_error("chromatic bounds inconsistent");
}

}  // namespace gridloc

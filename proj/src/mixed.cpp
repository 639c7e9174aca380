#include "mixed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gridloc {

bool is_valid_mixed_coloring(const Graph& g, const MixedSpec& spec,
                             const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (c.color[v] < 0 || c.color[v] >= spec.total()) return false;
  for (int cls = 0; cls < spec.total(); ++cls) {
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (c.color[v] == cls) members.push_back(v);
    if (spec.is_path_class(cls)) {
      if (!is_linear_forest(g, members)) return false;
    } else {
      if (!is_independent_set(g, members)) return false;
    }
  }
  return true;
}

namespace {

// Union-find with rollback for the incremental linear-forest checks.
struct RollbackDsu {
  std::vector<int> parent, size;
  std::vector<std::pair<int, int>> log;  // (child, old size of parent)

  explicit RollbackDsu(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    log.push_back({b, size[a]});
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
  std::size_t mark() const { return log.size(); }
  void rollback(std::size_t m) {
    while (log.size() > m) {
      auto [child, old_size] = log.back();
      log.pop_back();
      size[parent[child]] = old_size;
      parent[child] = child;
    }
  }
};

struct MixedSearch {
  const Graph& g;
  MixedSpec spec;
  const SearchBudget& budget;
  std::vector<int> order;
  std::vector<int> color;                 // by vertex, -1 unassigned
  std::vector<std::vector<int>> cls_deg;  // same-class degree per (v, class)
  std::vector<RollbackDsu> forests;       // one per path class
  std::vector<int> twin_prev, twin_next;  // twin chains, -1 when none
  std::int64_t nodes = 0;

  MixedSearch(const Graph& g, const MixedSpec& spec,
              const SearchBudget& budget)
      : g(g), spec(spec), budget(budget), color(g.vertex_count(), -1),
        cls_deg(g.vertex_count(), std::vector<int>(spec.total(), 0)),
        twin_prev(g.vertex_count(), -1), twin_next(g.vertex_count(), -1) {
    for (int i = 0; i < spec.path_colors; ++i)
      forests.emplace_back(g.vertex_count());
    // connected (DFS) order rooted at a highest-degree vertex, so that
    // conflicts surface close to the assignment that caused them
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    order.reserve(n);
    while (static_cast<int>(order.size()) < n) {
      int root = -1;
      for (int v = 0; v < n; ++v)
        if (!seen[v] && (root == -1 || g.degree(v) > g.degree(root)))
          root = v;
      std::vector<int> stack{root};
      seen[root] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : g.neighbors(v))
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
    }
    build_twin_chains();
  }

  // Vertices with the same neighborhood outside themselves (and uniform
  // internal adjacency, so any permutation of the group is an
  // automorphism) may be colored in non-decreasing order along the
  // assignment order; this composes with the first-use class ordering
  // because both describe the lex-least equivalent assignment.
  void build_twin_chains() {
    int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    auto twins = [&](int u, int v) {
      std::vector<int> nu, nv;
      for (int w : g.neighbors(u))
        if (w != v) nu.push_back(w);
      for (int w : g.neighbors(v))
        if (w != u) nv.push_back(w);
      return nu == nv;
    };
    std::vector<int> group(n, -1);
    for (int v = 0; v < n; ++v) {
      if (group[v] != -1) continue;
      group[v] = v;
      std::vector<int> members{v};
      int type = -1;  // 1 = clique group, 0 = independent group
      for (int w = v + 1; w < n; ++w) {
        if (group[w] != -1) continue;
        bool adjacent = g.has_edge(members[0], w);
        if (type != -1 && adjacent != (type == 1)) continue;
        bool ok = true;
        for (int m : members)
          if (!twins(m, w) || g.has_edge(m, w) != adjacent) {
            ok = false;
            break;
          }
        if (ok) {
          type = adjacent ? 1 : 0;
          group[w] = v;
          members.push_back(w);
        }
      }
      if (members.size() < 2) continue;
      std::sort(members.begin(), members.end(),
                [&](int a, int b) { return pos[a] < pos[b]; });
      for (std::size_t i = 1; i < members.size(); ++i) {
        twin_prev[members[i]] = members[i - 1];
        twin_next[members[i - 1]] = members[i];
      }
    }
  }

  bool assignable(int v, int cls) {
    if (twin_prev[v] != -1 && color[twin_prev[v]] != -1 &&
        cls < color[twin_prev[v]])
      return false;
    if (twin_next[v] != -1 && color[twin_next[v]] != -1 &&
        cls > color[twin_next[v]])
      return false;
    if (!spec.is_path_class(cls)) {
      return cls_deg[v][cls] == 0;
    }
    if (cls_deg[v][cls] > 2) return false;
    int fi = cls - spec.normal_colors;
    int roots[3];
    int cnt = 0;
    for (int w : g.neighbors(v)) {
      if (color[w] != cls) continue;
      if (cls_deg[w][cls] >= 2) return false;  // neighbor would exceed deg 2
      int r = forests[fi].find(w);
      for (int t = 0; t < cnt; ++t)
        if (roots[t] == r) return false;  // joining would close a cycle
      roots[cnt++] = r;
    }
    return true;
  }

  void apply(int v, int cls) {
    color[v] = cls;
    for (int w : g.neighbors(v)) cls_deg[w][cls]++;
    if (spec.is_path_class(cls)) {
      int fi = cls - spec.normal_colors;
      for (int w : g.neighbors(v))
        if (color[w] == cls) forests[fi].join(v, w);
    }
  }

  void undo(int v, int cls, std::size_t dsu_mark) {
    color[v] = -1;
    for (int w : g.neighbors(v)) cls_deg[w][cls]--;
    if (spec.is_path_class(cls))
      forests[cls - spec.normal_colors].rollback(dsu_mark);
  }

  bool run(std::size_t idx, int used_normal, int used_path) {
    if (idx == order.size()) return true;
    budget.spend(nodes);
    int v = order[idx];
    for (int cls = 0; cls < spec.total(); ++cls) {
      // first-use symmetry breaking within each kind
      if (!spec.is_path_class(cls) && cls > used_normal) continue;
      if (spec.is_path_class(cls) && cls - spec.normal_colors > used_path)
        continue;
      if (!assignable(v, cls)) continue;
      std::size_t mark = spec.is_path_class(cls)
                             ? forests[cls - spec.normal_colors].mark()
                             : 0;
      apply(v, cls);
      int un = used_normal, up = used_path;
      if (!spec.is_path_class(cls))
        un = std::max(un, cls + 1);
      else
        up = std::max(up, cls - spec.normal_colors + 1);
      if (run(idx + 1, un, up)) return true;
      undo(v, cls, mark);
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> mixed_color(const Graph& g, const MixedSpec& spec,
                                    const SearchBudget& budget) {
  if (spec.normal_colors < 0 || spec.path_colors < 0 || spec.total() < 1)
    throw input_error("need at least one color class");
  if (g.vertex_count() == 0) return Coloring{spec.total(), {}};
  MixedSearch search(g, spec, budget);
  if (!search.run(0, 0, 0)) return std::nullopt;
  Coloring c{spec.total(), search.color};
  if (!is_valid_mixed_coloring(g, spec, c))
    throw internal_error("mixed coloring witness failed certification");
  return c;
}

std::optional<Coloring> mixed_color_bruteforce(const Graph& g,
                                               const MixedSpec& spec) {
  if (spec.normal_colors < 0 || spec.path_colors < 0 || spec.total() < 1)
    throw input_error("need at least one color class");
  int n = g.vertex_count();
  double space = std::pow(static_cast<double>(spec.total()), n);
  if (space > 2e9) throw budget_error("assignment space too large");
  std::vector<int> assign(n, 0);
  while (true) {
    Coloring c{spec.total(), assign};
    if (is_valid_mixed_coloring(g, spec, c)) return c;
    int i = 0;
    while (i < n && ++assign[i] == spec.total()) assign[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

Graph reduce_add_cliques(const Graph& g, const MixedSpec& spec) {
  if (spec.total() < 2 ||
      (spec.normal_colors == 2 && spec.path_colors == 0))
    throw input_error(
        "reduction requires a+b >= 2 and (a,b) different from (2,0)");
  int clique = spec.normal_colors + 2 * spec.path_colors - 1;
  int n = g.vertex_count();
  auto edges = g.edges();
  int next = n;
  for (int v = 0; v < n; ++v) {
    for (int copy = 0; copy < 2; ++copy) {
      int base = next;
      next += clique;
      for (int i = 0; i < clique; ++i) {
        edges.push_back({v, base + i});
        for (int j = i + 1; j < clique; ++j)
          edges.push_back({base + i, base + j});
      }
    }
  }
  return Graph(next, std::move(edges));
}

MixedSpec variant_spec(FormulaVariant variant) {
  return variant == FormulaVariant::OneInThree ? MixedSpec{1, 1}
                                               : MixedSpec{0, 2};
}

Graph variable_gadget(FormulaVariant variant) {
  // Found by exhaustive search over small graphs and certified by
  // verify_variable_gadget; vertices 0 and 1 are the marked pair.
  if (variant == FormulaVariant::OneInThree) {
    return Graph(6, {{0, 1},
                     {0, 2},
                     {0, 4},
                     {0, 5},
                     {1, 2},
                     {1, 3},
                     {1, 5},
                     {2, 3},
                     {2, 4},
                     {3, 4}});
  }
  // both marked vertices joined to a four-cycle on the rest
  return Graph(6, {{0, 1},
                   {0, 2},
                   {0, 3},
                   {0, 4},
                   {0, 5},
                   {1, 2},
                   {1, 3},
                   {1, 4},
                   {1, 5},
                   {2, 4},
                   {2, 5},
                   {3, 4},
                   {3, 5}});
}

FormulaGraph build_formula_graph(const Formula& f, FormulaVariant variant) {
  if (f.num_vars < 1) throw input_error("formula needs at least one variable");
  for (const auto& clause : f.clauses)
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.num_vars)
        throw input_error("literal out of range");
    }

  Graph gadget = variable_gadget(variant);
  int gn = gadget.vertex_count();
  FormulaGraph fg;
  fg.variant = variant;
  fg.spec = variant_spec(variant);

  std::vector<std::pair<int, int>> edges;
  int next = 0;
  for (int k = 0; k < f.num_vars; ++k) {
    int base = next;
    next += gn;
    fg.var_vertex.push_back(base + 0);
    fg.negvar_vertex.push_back(base + 1);
    for (auto [u, v] : gadget.edges()) edges.push_back({base + u, base + v});
  }
  for (const auto& clause : f.clauses) {
    std::array<int, 3> cv{};
    for (int j = 0; j < 3; ++j) cv[j] = next + j;
    next += 3;
    edges.push_back({cv[0], cv[1]});
    edges.push_back({cv[0], cv[2]});
    edges.push_back({cv[1], cv[2]});
    for (int j = 0; j < 3; ++j) {
      int lit = clause[j];
      int target = lit > 0 ? fg.var_vertex[lit - 1]
                           : fg.negvar_vertex[-lit - 1];
      edges.push_back({cv[j], target});
    }
    fg.clause_vertices.push_back(cv);
  }
  fg.graph = Graph(next, std::move(edges));
  return fg;
}

GadgetCheck verify_variable_gadget(const Graph& gadget, int v, int vbar,
                                   const std::vector<int>& attach_points,
                                   FormulaVariant variant) {
  int n = gadget.vertex_count();
  if (n > 20) throw budget_error("gadget too large for exhaustive check");
  if (v < 0 || v >= n || vbar < 0 || vbar >= n || v == vbar)
    throw input_error("marked vertices invalid");
  MixedSpec spec = variant_spec(variant);
  bool seen01 = false, seen10 = false;
  for (long mask = 0; mask < (1L << n); ++mask) {
    Coloring c{2, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) c.color[i] = (mask >> i) & 1;
    if (!is_valid_mixed_coloring(gadget, spec, c)) continue;
    if (c.color[v] == c.color[vbar])
      return {false, "marked vertices can receive equal colors"};
    if (c.color[v] == 0 && c.color[vbar] == 1) seen01 = true;
    if (c.color[v] == 1 && c.color[vbar] == 0) seen10 = true;
    for (int x : attach_points) {
      if (!spec.is_path_class(c.color[x])) continue;  // normal forces alone
      int deg = 0;
      for (int w : gadget.neighbors(x))
        if (c.color[w] == c.color[x]) ++deg;
      if (deg != 2)
        return {false,
                "attachment vertex " + std::to_string(x) +
                    " not saturated in some coloring"};
    }
  }
  if (!seen01 || !seen10)
    return {false, "some marked color pattern does not extend"};
  return {true, ""};
}

std::vector<bool> decode_assignment(const FormulaGraph& fg,
                                    const Coloring& c) {
  if (!is_valid_mixed_coloring(fg.graph, fg.spec, c))
    throw input_error("coloring is not valid for the reduction graph");
  std::vector<bool> assign(fg.var_vertex.size());
  for (std::size_t k = 0; k < fg.var_vertex.size(); ++k) {
    int col = c.color[fg.var_vertex[k]];
    bool truth = fg.variant == FormulaVariant::OneInThree
                     ? fg.spec.is_path_class(col)
                     : col == 1;
    assign[k] = truth;
  }
  return assign;
}

namespace {

bool literal_value(int lit, const std::vector<bool>& a) {
  return lit > 0 ? a[lit - 1] : !a[-lit - 1];
}

}  // namespace

bool satisfies_one_in_three(const Formula& f, const std::vector<bool>& a) {
  for (const auto& clause : f.clauses) {
    int trues = 0;
    for (int lit : clause)
      if (literal_value(lit, a)) ++trues;
    if (trues != 1) return false;
  }
  return true;
}

bool satisfies_nae(const Formula& f, const std::vector<bool>& a) {
  for (const auto& clause : f.clauses) {
    int trues = 0;
    for (int lit : clause)
      if (literal_value(lit, a)) ++trues;
    if (trues == 0 || trues == 3) return false;
  }
  return true;
}

}  // namespace gridloc

#include "columns.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mixed.hpp"

namespace gridloc {

namespace {

// Splits a class inducing a linear forest into its paths, each listed in
// walk order; components ordered by smallest vertex.
std::vector<std::vector<int>> forest_paths(const Graph& g,
                                           const std::vector<int>& cls) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : cls) in[v] = 1;
  auto members = cls;
  std::sort(members.begin(), members.end());
  std::vector<char> done(g.vertex_count(), 0);
  std::vector<std::vector<int>> paths;
  auto in_degree = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v))
      if (in[w]) ++d;
    return d;
  };
  for (int v : members) {
    if (done[v] || in_degree(v) > 1) continue;  // start at an endpoint
    std::vector<int> path{v};
    done[v] = 1;
    int cur = v, prev = -1;
    while (true) {
      int next = -1;
      for (int w : g.neighbors(cur))
        if (in[w] && w != prev && !done[w]) {
          next = w;
          break;
        }
      if (next == -1) break;
      path.push_back(next);
      done[next] = 1;
      prev = cur;
      cur = next;
    }
    paths.push_back(std::move(path));
  }
  for (int v : members)
    if (!done[v]) throw internal_error("class is not a linear forest");
  return paths;
}

// Proper 2-coloring of a class inducing a forest; both sides nonempty when
// the class has an edge. For edgeless classes, splits in sorted halves.
std::pair<std::vector<int>, std::vector<int>> split_forest_class(
    const Graph& g, const std::vector<int>& cls) {
  bool has_edge = false;
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : cls) in[v] = 1;
  for (int v : cls)
    for (int w : g.neighbors(v))
      if (in[w]) has_edge = true;
  std::vector<int> sorted = cls;
  std::sort(sorted.begin(), sorted.end());
  if (!has_edge) {
    std::size_t half = (sorted.size() + 1) / 2;
    return {{sorted.begin(), sorted.begin() + half},
            {sorted.begin() + half, sorted.end()}};
  }
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<int> a, b;
  for (int start : sorted) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      (side[v] == 0 ? a : b).push_back(v);
      for (int w : g.neighbors(v))
        if (in[w] && side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        }
    }
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {a, b};
}

// Validity of a partially placed plane drawing given as (x, y) pairs;
// vertices with x < 0 are unplaced.
bool partial_plane_valid(const Graph& g,
                         const std::vector<std::pair<BigInt, BigInt>>& pos,
                         const std::vector<char>& placed) {
  for (auto [u, v] : g.edges()) {
    if (!placed[u] || !placed[v]) continue;
    GridPoint a{{pos[u].first, pos[u].second}};
    GridPoint b{{pos[v].first, pos[v].second}};
    if (a == b) return false;
    for (int w = 0; w < g.vertex_count(); ++w) {
      if (w == u || w == v || !placed[w]) continue;
      GridPoint pw{{pos[w].first, pos[w].second}};
      if (on_closed_segment(pw, a, b)) return false;
    }
  }
  std::set<std::pair<BigInt, BigInt>> seen;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (placed[v] && !seen.insert(pos[v]).second) return false;
  return true;
}

}  // namespace

GridDrawing embed_on_columns(const Graph& g, const VertexPartition& p) {
  auto check = validate_partition(g, p);
  if (!check) throw input_error("invalid partition: " + check.reason);
  for (const auto& cls : p.classes)
    if (cls.kind != ClassKind::Path)
      throw input_error("embed_on_columns requires all classes path kind");

  int l = static_cast<int>(p.classes.size());
  std::vector<std::pair<BigInt, BigInt>> pos(g.vertex_count());
  std::vector<char> placed(g.vertex_count(), 0);
  // local layout: paths stacked from 0 inside each column
  std::vector<std::vector<int>> column_order(l);
  for (int i = 0; i < l; ++i)
    for (const auto& path : forest_paths(g, p.classes[i].vertices))
      for (int v : path) column_order[i].push_back(v);

  for (int i = 0; i < l; ++i) {
    long long cap = 10LL * (g.vertex_count() + 1) *
                        (static_cast<long long>(g.edges().size()) + 1) +
                    16;
    bool ok = false;
    for (long long offset = 0; offset <= cap; ++offset) {
      for (std::size_t j = 0; j < column_order[i].size(); ++j) {
        int v = column_order[i][j];
        pos[v] = {BigInt(i), from_int64(offset + static_cast<long long>(j))};
        placed[v] = 1;
      }
      if (partial_plane_valid(g, pos, placed)) {
        ok = true;
        break;
      }
    }
    if (!ok) throw internal_error("column offset search stalled");
  }

  GridDrawing dr;
  dr.dim = 2;
  dr.graph = g;
  dr.points.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    dr.points[v] = GridPoint{{pos[v].first, pos[v].second}};
  if (!is_valid_drawing(dr))
    throw internal_error("embedded drawing failed certification");
  return dr;
}

namespace {

// y-coordinate generators for the rank layouts of the located drawing
enum class YRule { Free, Even, Odd, ZeroMod6, OddNotDiv3 };

long long nth_y(YRule rule, int k) {
  switch (rule) {
    case YRule::Free:
      return k;
    case YRule::Even:
      return 2LL * k;
    case YRule::Odd:
      return 2LL * k + 1;
    case YRule::ZeroMod6:
      return 6LL * k;
    case YRule::OddNotDiv3: {
      // 1, 5, 7, 11, 13, ... : odd and not divisible by three
      long long base = 6LL * (k / 2);
      return base + (k % 2 == 0 ? 1 : 5);
    }
  }
  return k;
}

struct ClassPlacement {
  int class_index;
  int first_rank_coord;  // 0..3
  YRule rule;
};

}  // namespace

GridDrawing locate_on_columns(const Graph& g, const VertexPartition& p,
                              int d) {
  auto check = validate_partition(g, p);
  if (!check) throw input_error("invalid partition: " + check.reason);
  if (d < 2) throw input_error("dimension must be >= 2");
  int l = static_cast<int>(p.classes.size());
  if (l == 0) throw input_error("partition has no classes");
  long long half = 1LL << (d - 1), full = 1LL << d;
  if (l > full)
    throw input_error("too many classes for the dimension");

  std::vector<int> paths, normals;
  for (int i = 0; i < l; ++i)
    (p.classes[i].kind == ClassKind::Path ? paths : normals).push_back(i);

  GridDrawing dr;
  dr.dim = d;
  dr.graph = g;
  dr.points.resize(g.vertex_count());

  auto place_class = [&](int ci, const std::vector<BigInt>& rank,
                         YRule rule) {
    const auto& cls = p.classes[ci];
    std::vector<int> order;
    for (const auto& path : forest_paths(g, cls.vertices))
      for (int v : path) order.push_back(v);
    for (std::size_t k = 0; k < order.size(); ++k) {
      GridPoint pt;
      pt.coords = rank;
      pt.coords.push_back(from_int64(nth_y(rule, static_cast<int>(k))));
      dr.points[order[k]] = std::move(pt);
    }
  };

  if (l <= half) {
    // all rank differences contain a unit coordinate, so every class may
    // be a linear forest and any heights work
    for (int i = 0; i < l; ++i) {
      std::vector<BigInt> rank(d - 1);
      for (int c = 0; c < d - 1; ++c) rank[c] = (i >> (d - 2 - c)) & 1;
      place_class(i, rank, YRule::Free);
    }
  } else {
    if (static_cast<long long>(paths.size()) > full - l)
      throw input_error("too many path classes for the dimension");
    std::size_t pi = 0, ni = 0;
    long long groups = 1LL << (d - 2 >= 0 ? d - 2 : 0);
    std::vector<ClassPlacement> schedule;
    for (long long grp = 0; grp < groups; ++grp) {
      if (pi >= paths.size() && ni >= normals.size()) break;
      std::vector<BigInt> suffix(d - 2);
      for (int c = 0; c < d - 2; ++c)
        suffix[c] = static_cast<int>((grp >> (d - 3 - c)) & 1);
      auto rank_at = [&](int first) {
        std::vector<BigInt> r{BigInt(first)};
        r.insert(r.end(), suffix.begin(), suffix.end());
        return r;
      };
      if (pi < paths.size() && ni < normals.size()) {
        // one linear forest plus one or two independent sets
        place_class(normals[ni++], rank_at(0), YRule::Even);
        place_class(paths[pi++], rank_at(1), YRule::Free);
        if (ni < normals.size())
          place_class(normals[ni++], rank_at(2), YRule::Odd);
      } else if (pi < paths.size()) {
        place_class(paths[pi++], rank_at(0), YRule::Free);
        if (pi < paths.size()) place_class(paths[pi++], rank_at(1), YRule::Free);
      } else {
        place_class(normals[ni++], rank_at(0), YRule::ZeroMod6);
        if (ni < normals.size()) place_class(normals[ni++], rank_at(1), YRule::Even);
        if (ni < normals.size()) place_class(normals[ni++], rank_at(2), YRule::Odd);
        if (ni < normals.size())
          place_class(normals[ni++], rank_at(3), YRule::OddNotDiv3);
      }
    }
    if (pi < paths.size() || ni < normals.size())
      throw internal_error("rank groups exhausted before classes");
  }

  if (!is_valid_drawing(dr) || (!g.edges().empty() && gp(dr) != 2))
    throw internal_error("located drawing failed certification");
  return dr;
}

VertexPartition partition_from_located(const GridDrawing& dr, int d, int l) {
  dr.check_shape();
  if (dr.dim != d) throw input_error("dimension does not match drawing");
  if (!is_valid_drawing(dr)) throw input_error("drawing is not valid");
  if (!dr.graph.edges().empty() && gp(dr) != 2)
    throw input_error("drawing is not primitive");
  auto ranks = column_ranks(dr);
  if (static_cast<int>(ranks.size()) != l)
    throw input_error("drawing does not use exactly l columns");
  long long full = 1LL << d;
  if (l < 1 || l > full)
    throw input_error("column count out of range for the dimension");
  long long budget = full - l;

  // congruence classes of ranks mod 2
  std::map<std::vector<BigInt>, std::vector<const std::vector<int>*>> groups;
  for (const auto& [rank, verts] : ranks) {
    std::vector<BigInt> key(rank.size());
    for (std::size_t c = 0; c < rank.size(); ++c) key[c] = big_mod(rank[c], 2);
    groups[key].push_back(&verts);
  }

  std::vector<PartitionClass> classes;
  for (const auto& [key, columns] : groups) {
    if (columns.size() >= 2) {
      // primitivity makes each parity side independent
      std::vector<int> even, odd;
      for (const auto* verts : columns)
        for (int v : *verts)
          (big_mod(dr.points[v].coords[d - 1], 2) == 0 ? even : odd)
              .push_back(v);
      if (!even.empty()) classes.push_back({ClassKind::Normal, even});
      if (!odd.empty()) classes.push_back({ClassKind::Normal, odd});
    } else {
      classes.push_back({ClassKind::Path, *columns[0]});
    }
  }

  auto path_count = [&] {
    int k = 0;
    for (const auto& c : classes)
      if (c.kind == ClassKind::Path) ++k;
    return k;
  };

  // trade path classes for pairs of normal classes until within budget
  while (path_count() > budget) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].kind != ClassKind::Path) continue;
      auto [a, b] = split_forest_class(dr.graph, classes[i].vertices);
      classes.erase(classes.begin() + static_cast<long>(i));
      if (!a.empty()) classes.push_back({ClassKind::Normal, a});
      if (!b.empty()) classes.push_back({ClassKind::Normal, b});
      break;
    }
  }
  // split largest classes until there are exactly l
  while (static_cast<int>(classes.size()) < l) {
    std::size_t pick = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].vertices.size() < 2) continue;
      if (pick == classes.size() ||
          classes[i].vertices.size() > classes[pick].vertices.size())
        pick = i;
    }
    if (pick == classes.size())
      throw internal_error("cannot reach the requested class count");
    PartitionClass cls = classes[pick];
    classes.erase(classes.begin() + static_cast<long>(pick));
    if (cls.kind == ClassKind::Normal) {
      std::vector<int> sorted = cls.vertices;
      std::sort(sorted.begin(), sorted.end());
      std::size_t half_sz = (sorted.size() + 1) / 2;
      classes.push_back(
          {ClassKind::Normal,
           std::vector<int>(sorted.begin(), sorted.begin() + half_sz)});
      classes.push_back(
          {ClassKind::Normal,
           std::vector<int>(sorted.begin() + half_sz, sorted.end())});
    } else {
      auto [a, b] = split_forest_class(dr.graph, cls.vertices);
      if (a.empty() || b.empty())
        throw internal_error("forest split produced an empty side");
      classes.push_back({ClassKind::Normal, a});
      classes.push_back({ClassKind::Normal, b});
    }
  }

  VertexPartition out{classes};
  auto check = validate_partition(dr.graph, out);
  if (!check || static_cast<int>(out.classes.size()) != l ||
      out.path_class_count() > budget)
    throw internal_error("recovered partition failed certification: " +
                         check.reason);
  return out;
}

VertexPartition split_path_colors(const VertexPartition& p, const Graph& g,
                                  int d) {
  auto check = validate_partition(g, p);
  if (!check) throw input_error("invalid partition: " + check.reason);
  for (const auto& cls : p.classes)
    if (cls.kind != ClassKind::Path)
      throw input_error("split_path_colors expects all classes path kind");
  if (d < 2) throw input_error("dimension must be >= 2");
  int l = static_cast<int>(p.classes.size());
  long long half = 1LL << (d - 1), full = 1LL << d;
  if (l > full) throw input_error("class count out of range");
  if (l <= half) return p;  // already locatable as-is

  int to_split = static_cast<int>(l - half);
  // split the largest classes first
  std::vector<int> order(l);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return p.classes[a].vertices.size() > p.classes[b].vertices.size();
  });
  std::vector<char> split(l, 0);
  for (int i = 0; i < to_split; ++i) split[order[i]] = 1;

  VertexPartition out;
  for (int i = 0; i < l; ++i) {
    if (!split[i]) {
      out.classes.push_back(p.classes[i]);
      continue;
    }
    auto [a, b] = split_forest_class(g, p.classes[i].vertices);
    if (!a.empty()) out.classes.push_back({ClassKind::Normal, a});
    if (!b.empty()) out.classes.push_back({ClassKind::Normal, b});
  }
  return out;
}

int min_locating_dimension(const VertexPartition& p) {
  int l = static_cast<int>(p.classes.size());
  int paths = p.path_class_count();
  for (int d = 2;; ++d) {
    long long half = 1LL << (d - 1), full = 1LL << d;
    if (l <= half) return d;
    if (l <= full && paths <= full - l) return d;
  }
}

GridDrawing transfer_to_plane(const GridDrawing& dr) {
  dr.check_shape();
  if (!is_valid_drawing(dr)) throw input_error("drawing is not valid");
  auto ranks = column_ranks(dr);

  std::vector<std::pair<BigInt, BigInt>> pos(dr.graph.vertex_count());
  std::vector<char> placed(dr.graph.vertex_count(), 0);
  int x = 0;
  for (const auto& [rank, verts] : ranks) {
    long long cap = 10LL * (dr.graph.vertex_count() + 1) *
                        (static_cast<long long>(dr.graph.edges().size()) + 1) +
                    16;
    bool ok = false;
    for (long long offset = 0; offset <= cap; ++offset) {
      for (int v : verts) {
        pos[v] = {BigInt(x),
                  BigInt(dr.points[v].coords[dr.dim - 1] + from_int64(offset))};
        placed[v] = 1;
      }
      if (partial_plane_valid(dr.graph, pos, placed)) {
        ok = true;
        break;
      }
    }
    if (!ok) throw internal_error("column shift search stalled");
    ++x;
  }

  GridDrawing out;
  out.dim = 2;
  out.graph = dr.graph;
  out.points.resize(dr.graph.vertex_count());
  for (int v = 0; v < dr.graph.vertex_count(); ++v)
    out.points[v] = GridPoint{{pos[v].first, pos[v].second}};
  if (!is_valid_drawing(out))
    throw internal_error("transferred drawing failed certification");
  return out;
}

LovaszPartition lovasz_partition(const Graph& g,
                                 const std::vector<int>& caps) {
  int m = static_cast<int>(caps.size());
  if (m < 1) throw input_error("need at least one part");
  long long cap_sum = 0;
  for (int k : caps) {
    if (k < 0) throw input_error("degree caps must be nonnegative");
    cap_sum += k;
  }
  if (cap_sum < g.max_degree() - m + 1)
    throw input_error("caps too small: need sum >= maxdeg - m + 1");

  int n = g.vertex_count();
  std::vector<int> part(n, 0);
  std::vector<std::vector<int>> deg_in(n, std::vector<int>(m, 0));
  for (auto [u, v] : g.edges()) {
    deg_in[u][0]++;
    deg_in[v][0]++;
  }
  auto potential = [&] {
    std::vector<long long> edges(m, 0), sizes(m, 0);
    for (int v = 0; v < n; ++v) sizes[part[v]]++;
    for (auto [u, v] : g.edges())
      if (part[u] == part[v]) edges[part[u]]++;
    long long phi = 0;
    for (int i = 0; i < m; ++i)
      phi += edges[i] - static_cast<long long>(caps[i]) * sizes[i];
    return phi;
  };

  LovaszPartition result;
  result.initial_potential = potential();
  long long guard = 4LL * (g.edges().size() + 1) * (cap_sum + m + 1) *
                        (n + 1) + 64;
  while (true) {
    int v = -1;
    for (int u = 0; u < n && v < 0; ++u)
      if (deg_in[u][part[u]] >= caps[part[u]] + 1) v = u;
    if (v < 0) break;
    int target = -1;
    for (int j = 0; j < m && target < 0; ++j)
      if (j != part[v] && deg_in[v][j] <= caps[j]) target = j;
    if (target < 0) throw internal_error("no valid move exists");
    int from = part[v];
    part[v] = target;
    for (int w : g.neighbors(v)) {
      deg_in[w][from]--;
      deg_in[w][target]++;
    }
    if (++result.moves > guard)
      throw internal_error("partition search stalled");
  }
  result.final_potential = potential();
  result.parts.assign(m, {});
  for (int v = 0; v < n; ++v) result.parts[part[v]].push_back(v);
  return result;
}

namespace {

// Base case: maxdeg <= 3 graphs split into two linear forests, following
// a three-coloring repair with an exact fallback.
std::pair<std::vector<int>, std::vector<int>> linear_forest_pair(
    const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> in_b(n, 0);

  // components: complete graphs on four vertices get a fixed split, the
  // rest start from a 3-coloring
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = comps;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u))
        if (comp[w] == -1) {
          comp[w] = comps;
          stack.push_back(w);
        }
    }
    ++comps;
  }
  std::vector<std::vector<int>> members(comps);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

  bool tried = true;
  for (int ci = 0; ci < comps && tried; ++ci) {
    auto& verts = members[ci];
    bool is_k4 = verts.size() == 4;
    if (is_k4)
      for (std::size_t a = 0; a < verts.size() && is_k4; ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
          if (!g.has_edge(verts[a], verts[b])) {
            is_k4 = false;
            break;
          }
    if (is_k4) {
      in_b[verts[2]] = in_b[verts[3]] = 1;
      continue;
    }
    Graph sub = g.induced(verts);
    auto coloring = k_color(sub, 3);
    if (!coloring) {
      tried = false;  // exact fallback below
      break;
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (coloring->color[i] == 2) in_b[verts[i]] = 1;
  }

  auto degree_in = [&](int v, char side) {
    int d = 0;
    for (int w : g.neighbors(v))
      if (in_b[w] == side) ++d;
    return d;
  };
  auto break_cycles = [&](char side) {
    // move the smallest vertex of any remaining cycle to the other side
    while (true) {
      std::vector<int> state(n, 0);  // 0 unseen, 1 active, 2 done
      std::vector<int> parent(n, -1);
      int cycle_vertex = -1;
      for (int s = 0; s < n && cycle_vertex < 0; ++s) {
        if (in_b[s] != side || state[s]) continue;
        std::vector<int> stack{s};
        while (!stack.empty() && cycle_vertex < 0) {
          int v = stack.back();
          if (state[v] == 0) {
            state[v] = 1;
            for (int w : g.neighbors(v)) {
              if (in_b[w] != side || w == parent[v]) continue;
              if (state[w] == 1) {
                cycle_vertex = std::min(v, w);
                break;
              }
              if (state[w] == 0) {
                parent[w] = v;
                stack.push_back(w);
              }
            }
          } else {
            state[v] = 2;
            stack.pop_back();
          }
        }
      }
      if (cycle_vertex < 0) break;
      in_b[cycle_vertex] = static_cast<char>(1 - side);
    }
  };

  if (tried) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int v = 0; v < n; ++v)
        if (!in_b[v] && degree_in(v, 0) >= 3) {
          in_b[v] = 1;
          moved = true;
        }
    }
    break_cycles(0);
    // one back-repair pass for the other side
    bool back = true;
    while (back) {
      back = false;
      for (int v = 0; v < n; ++v)
        if (in_b[v] && degree_in(v, 1) >= 3) {
          in_b[v] = 0;
          back = true;
        }
    }
    break_cycles(1);
  }

  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) (in_b[v] ? b : a).push_back(v);
  if (tried && is_linear_forest(g, a) && is_linear_forest(g, b))
    return {a, b};

  // exact fallback: search a coloring with two path classes
  auto mc = mixed_color(g, MixedSpec{0, 2});
  if (!mc) throw internal_error("maxdeg <= 3 graph has no two-forest split");
  a.clear();
  b.clear();
  for (int v = 0; v < n; ++v) (mc->color[v] == 0 ? a : b).push_back(v);
  return {a, b};
}

}  // namespace

VertexPartition degree_partition(const Graph& g, int d) {
  if (d < 1) throw input_error("dimension parameter must be >= 1");
  long long bound = (1LL << (d + 1)) - 1;
  if (g.max_degree() > bound)
    throw input_error("maximum degree exceeds 2^(d+1)-1");

  if (d == 1) {
    auto [a, b] = linear_forest_pair(g);
    VertexPartition p;
    p.classes.push_back({ClassKind::Path, a});
    p.classes.push_back({ClassKind::Path, b});
    return p;
  }

  int cap = (1 << d) - 1;
  auto lov = lovasz_partition(g, {cap, cap});
  VertexPartition out;
  for (const auto& side : lov.parts) {
    Graph sub = g.induced(side);
    VertexPartition rec = degree_partition(sub, d - 1);
    for (const auto& cls : rec.classes) {
      std::vector<int> lifted;
      for (int v : cls.vertices) lifted.push_back(side[v]);
      out.classes.push_back({ClassKind::Path, lifted});
    }
  }
  auto check = validate_partition(g, out);
  if (!check ||
      static_cast<int>(out.classes.size()) != (1 << d))
    throw internal_error("degree partition failed certification: " +
                         check.reason);
  return out;
}

}  // namespace gridloc

#include <doctest.h>

#include "columns.hpp"
#include "mixed.hpp"
#include "oracles.hpp"

using namespace gridloc;
using gridloc::testing::Rng;

namespace {

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

// Random graph paired with a partition that is valid by construction: the
// classes are chosen first and in-class edges violating the class kind are
// dropped.
struct Instance {
  Graph g;
  VertexPartition p;
};

Instance random_valid_partition(Rng& rng, int n, int classes,
                                ClassKind kind_all) {
  std::vector<int> cls(n);
  for (int v = 0; v < n; ++v) cls[v] = rng.below(classes);
  std::vector<std::pair<int, int>> edges;
  Graph full = gridloc::testing::random_graph(rng, n, 1, 2);
  VertexPartition p;
  for (int i = 0; i < classes; ++i) p.classes.push_back({kind_all, {}});
  for (int v = 0; v < n; ++v) p.classes[cls[v]].vertices.push_back(v);
  for (auto [u, v] : full.edges()) {
    if (cls[u] != cls[v]) {
      edges.push_back({u, v});
      continue;
    }
    if (kind_all == ClassKind::Normal) continue;  // drop in-class edges
    // keep the edge only if the class stays a linear forest
    edges.push_back({u, v});
    Graph trial(n, edges);
    if (!is_linear_forest(trial, p.classes[cls[u]].vertices)) edges.pop_back();
  }
  return {Graph(n, edges), p};
}

}  // namespace

TEST_CASE("embedding a path on one column") {
  VertexPartition p;
  p.classes = {{ClassKind::Path, {0, 1, 2, 3}}};
  GridDrawing dr = embed_on_columns(path_graph(4), p);
  CHECK(is_valid_drawing(dr));
  REQUIRE(column_ranks(dr).size() == 1);
  for (int v = 0; v < 4; ++v) {
    CHECK(dr.points[v].coords[0] == 0);
    CHECK(dr.points[v].coords[1] == v);
  }
}

TEST_CASE("embedding complete graphs on two columns") {
  VertexPartition p;
  p.classes = {{ClassKind::Path, {0, 1}}, {ClassKind::Path, {2, 3}}};
  GridDrawing dr = embed_on_columns(complete(4), p);
  CHECK(is_valid_drawing(dr));
  CHECK(column_ranks(dr).size() == 2);
}

TEST_CASE("planar graphs embed on three columns via a path 3-coloring") {
  Rng rng(97);
  for (int iter = 0; iter < 5; ++iter) {
    Graph g = gridloc::testing::random_planar_graph(rng, 8 + iter, 1, 4);
    auto coloring = mixed_color(g, MixedSpec{0, 3});
    REQUIRE(coloring.has_value());  // planar graphs take three path colors
    VertexPartition p;
    p.classes = {{ClassKind::Path, {}}, {ClassKind::Path, {}},
                 {ClassKind::Path, {}}};
    for (int v = 0; v < g.vertex_count(); ++v)
      p.classes[coloring->color[v]].vertices.push_back(v);
    GridDrawing dr = embed_on_columns(g, p);
    CHECK(is_valid_drawing(dr));
    CHECK(column_ranks(dr).size() <= 3);
  }
}

TEST_CASE("embedding rejects invalid partitions") {
  VertexPartition p;
  p.classes = {{ClassKind::Path, {0, 1, 2}}};
  CHECK_THROWS_AS(embed_on_columns(complete(3), p), Error);  // triangle class
  VertexPartition q;
  q.classes = {{ClassKind::Normal, {0}}, {ClassKind::Normal, {1}}};
  CHECK_THROWS_AS(embed_on_columns(Graph(2, {{0, 1}}), q), Error);
}

TEST_CASE("random path partitions embed on exactly their class count") {
  Rng rng(101);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 4 + rng.below(8);
    int l = 1 + rng.below(4);
    auto inst = random_valid_partition(rng, n, l, ClassKind::Path);
    // classes may be empty; empty classes still occupy a rank
    GridDrawing dr = embed_on_columns(inst.g, inst.p);
    CHECK(is_valid_drawing(dr));
    std::set<BigInt> xs;
    for (int v = 0; v < n; ++v) xs.insert(dr.points[v].coords[0]);
    int nonempty = 0;
    for (const auto& cls : inst.p.classes)
      if (!cls.vertices.empty()) ++nonempty;
    CHECK(static_cast<int>(xs.size()) == nonempty);
    // class i sits on rank i
    for (std::size_t i = 0; i < inst.p.classes.size(); ++i)
      for (int v : inst.p.classes[i].vertices)
        CHECK(dr.points[v].coords[0] == static_cast<long>(i));
  }
}

TEST_CASE("locating the five-clique on three columns in three dimensions") {
  VertexPartition p;
  p.classes = {{ClassKind::Path, {0, 1}}, {ClassKind::Path, {2, 3}},
               {ClassKind::Path, {4}}};
  GridDrawing dr = locate_on_columns(complete(5), p, 3);
  CHECK(dr.dim == 3);
  CHECK(is_valid_drawing(dr));
  CHECK(gp(dr) == 2);
  CHECK(column_ranks(dr).size() == 3);
}

TEST_CASE("locating two path classes in the plane") {
  VertexPartition p;
  p.classes = {{ClassKind::Path, {0, 1}}, {ClassKind::Path, {2, 3}}};
  GridDrawing dr = locate_on_columns(complete(4), p, 2);
  CHECK(is_valid_drawing(dr));
  CHECK(gp(dr) == 2);
  CHECK(column_ranks(dr).size() == 2);
}

TEST_CASE("locating mixed partitions stays primitive") {
  Rng rng(7);
  int done = 0;
  while (done < 20) {
    int n = 4 + rng.below(7);
    auto inst = random_valid_partition(rng, n, 3, ClassKind::Normal);
    bool any_empty = false;
    for (const auto& c : inst.p.classes) any_empty |= c.vertices.empty();
    if (any_empty) continue;
    // one path class + two normal classes, l = 3, d = 2
    inst.p.classes[0].kind = ClassKind::Path;
    GridDrawing dr = locate_on_columns(inst.g, inst.p, 2);
    CHECK(is_valid_drawing(dr));
    if (!inst.g.edges().empty()) CHECK(gp(dr) == 2);
    // round trip: the recovered partition has the same class count and
    // stays within the path budget
    VertexPartition rec = partition_from_located(dr, 2, 3);
    CHECK(validate_partition(inst.g, rec).ok);
    CHECK(rec.classes.size() == 3);
    CHECK(rec.path_class_count() <= 1);
    ++done;
  }
}

TEST_CASE("columns of any valid drawing induce linear forests") {
  Rng rng(67);
  int done = 0;
  while (done < 20) {
    int n = 4 + rng.below(8);
    int l = 1 + rng.below(4);
    auto inst = random_valid_partition(rng, n, l, ClassKind::Path);
    GridDrawing dr = embed_on_columns(inst.g, inst.p);
    for (const auto& [rank, verts] : column_ranks(dr))
      CHECK(is_linear_forest(inst.g, verts));
    ++done;
  }
}

TEST_CASE("locating five to eight classes in three dimensions") {
  Rng rng(131);
  for (int l = 5; l <= 8; ++l) {
    int budget = 8 - l;
    int done = 0;
    while (done < 8) {
      int n = l + rng.below(8);
      int paths = rng.below(budget + 1);
      std::vector<int> cls(n);
      for (int v = 0; v < n; ++v) cls[v] = v < l ? v : rng.below(l);
      VertexPartition p;
      for (int i = 0; i < l; ++i)
        p.classes.push_back(
            {i < paths ? ClassKind::Path : ClassKind::Normal, {}});
      for (int v = 0; v < n; ++v) p.classes[cls[v]].vertices.push_back(v);
      std::vector<std::pair<int, int>> edges;
      Graph full = gridloc::testing::random_graph(rng, n, 1, 2);
      for (auto [u, v] : full.edges()) {
        if (cls[u] != cls[v]) {
          edges.push_back({u, v});
          continue;
        }
        if (p.classes[cls[u]].kind == ClassKind::Normal) continue;
        edges.push_back({u, v});
        Graph trial(n, edges);
        if (!is_linear_forest(trial, p.classes[cls[u]].vertices))
          edges.pop_back();
      }
      Graph g(n, edges);
      GridDrawing dr = locate_on_columns(g, p, 3);
      CHECK(dr.dim == 3);
      CHECK(is_valid_drawing(dr));
      if (!g.edges().empty()) CHECK(gp(dr) == 2);
      CHECK(column_ranks(dr).size() == static_cast<std::size_t>(l));
      // ranks stay inside {0..3} x {0,1}
      for (const auto& [rank, verts] : column_ranks(dr)) {
        CHECK(rank[0] >= 0);
        CHECK(rank[0] <= 3);
        CHECK(rank[1] >= 0);
        CHECK(rank[1] <= 1);
      }
      VertexPartition rec = partition_from_located(dr, 3, l);
      CHECK(validate_partition(g, rec).ok);
      CHECK(static_cast<int>(rec.classes.size()) == l);
      CHECK(rec.path_class_count() <= budget);
      ++done;
    }
  }
}

TEST_CASE("recovery splits path classes down to the budget") {
  // seven columns in three dimensions leave a budget of one path class;
  // three column ranks are isolated in the congruence classes mod 2, so
  // two of them must be split into normal pairs
  Graph g(14, {});
  GridDrawing dr;
  dr.dim = 3;
  dr.graph = g;
  std::vector<std::pair<long, long>> ranks = {{0, 0}, {2, 0}, {4, 0}, {2, 2},
                                              {1, 0}, {0, 1}, {1, 1}};
  for (int c = 0; c < 7; ++c)
    for (int k = 0; k < 2; ++k)
      dr.points.push_back(
          GridPoint{{BigInt(ranks[c].first), BigInt(ranks[c].second),
                     BigInt(k)}});
  REQUIRE(is_valid_drawing(dr));
  VertexPartition rec = partition_from_located(dr, 3, 7);
  CHECK(validate_partition(g, rec).ok);
  CHECK(rec.classes.size() == 7);
  CHECK(rec.path_class_count() <= 1);
}

TEST_CASE("locate_on_columns rejects over-budget partitions") {
  // l = 4, d = 2 allows no path classes at all
  VertexPartition p;
  p.classes = {{ClassKind::Path, {0, 1}},
               {ClassKind::Normal, {2}},
               {ClassKind::Normal, {3}},
               {ClassKind::Normal, {4}}};
  CHECK_THROWS_AS(locate_on_columns(path_graph(5), p, 2), Error);
}

TEST_CASE("partition recovery from located drawings") {
  // two-column drawing of K4: both columns become path classes
  VertexPartition p;
  p.classes = {{ClassKind::Path, {0, 1}}, {ClassKind::Path, {2, 3}}};
  GridDrawing dr = locate_on_columns(complete(4), p, 2);
  VertexPartition rec = partition_from_located(dr, 2, 2);
  CHECK(validate_partition(complete(4), rec).ok);
  CHECK(rec.classes.size() == 2);
  CHECK(rec.path_class_count() <= 2);

  // round trip through the located five-clique drawing
  VertexPartition p5;
  p5.classes = {{ClassKind::Path, {0, 1}}, {ClassKind::Path, {2, 3}},
                {ClassKind::Path, {4}}};
  GridDrawing d5 = locate_on_columns(complete(5), p5, 3);
  VertexPartition rec5 = partition_from_located(d5, 3, 3);
  CHECK(validate_partition(complete(5), rec5).ok);
  CHECK(rec5.classes.size() == 3);
  CHECK(rec5.path_class_count() <= (1 << 3) - 3);
}

TEST_CASE("rank-congruent columns produce normal classes") {
  // columns 0 and 2 are congruent mod 2; their parity classes must be
  // independent in any primitive drawing
  Graph g3(5, {{0, 2}, {1, 3}, {2, 4}});
  GridDrawing dr3;
  dr3.dim = 2;
  dr3.graph = g3;
  dr3.points = {GridPoint{{0, 0}}, GridPoint{{0, 1}}, GridPoint{{2, 3}},
                GridPoint{{2, 2}}, GridPoint{{1, 0}}};
  REQUIRE(is_valid_drawing(dr3));
  REQUIRE(gp(dr3) == 2);
  VertexPartition rec = partition_from_located(dr3, 2, 3);
  CHECK(validate_partition(g3, rec).ok);
  CHECK(rec.path_class_count() <= 1);
  // vertices of the two congruent columns all sit in normal classes
  for (const auto& cls : rec.classes) {
    if (cls.kind != ClassKind::Normal) continue;
    for (int v : cls.vertices) CHECK(v != 4);
  }
}

TEST_CASE("splitting path colors reaches a locatable shape") {
  Rng rng(59);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 4 + rng.below(7);
    int l = 3 + rng.below(2);  // 3 or 4 path classes, d = 2 range
    auto inst = random_valid_partition(rng, n, l, ClassKind::Path);
    VertexPartition split = split_path_colors(inst.p, inst.g, 2);
    CHECK(static_cast<int>(split.classes.size()) <=
          2 * l - 2);  // split bound: 2l - 2^(d-1) classes
    CHECK(validate_partition(inst.g, split).ok);
    int dim = min_locating_dimension(split);
    GridDrawing dr = locate_on_columns(inst.g, split, dim);
    CHECK(is_valid_drawing(dr));
    if (!inst.g.edges().empty()) CHECK(gp(dr) == 2);
  }

  // two path classes in the plane stay unchanged
  VertexPartition p;
  p.classes = {{ClassKind::Path, {0, 1}}, {ClassKind::Path, {2, 3}}};
  VertexPartition same = split_path_colors(p, complete(4), 2);
  CHECK(same.classes.size() == 2);
  CHECK(same.path_class_count() == 2);
}

TEST_CASE("transfer to the plane") {
  VertexPartition p5;
  p5.classes = {{ClassKind::Path, {0, 1}}, {ClassKind::Path, {2, 3}},
                {ClassKind::Path, {4}}};
  GridDrawing d5 = locate_on_columns(complete(5), p5, 3);
  GridDrawing flat = transfer_to_plane(d5);
  CHECK(flat.dim == 2);
  CHECK(is_valid_drawing(flat));
  CHECK(column_ranks(flat).size() == 3);

  // one column: unchanged up to the rank value
  VertexPartition p1;
  p1.classes = {{ClassKind::Path, {0, 1, 2, 3}}};
  GridDrawing one = embed_on_columns(path_graph(4), p1);
  GridDrawing moved = transfer_to_plane(one);
  CHECK(is_valid_drawing(moved));
  CHECK(column_ranks(moved).size() == 1);

  Rng rng(83);
  for (int iter = 0; iter < 10; ++iter) {
    auto inst = random_valid_partition(rng, 6 + rng.below(4), 3,
                                       ClassKind::Normal);
    inst.p.classes[0].kind = ClassKind::Path;
    GridDrawing dr = locate_on_columns(inst.g, inst.p, 2);
    GridDrawing f = transfer_to_plane(dr);
    CHECK(is_valid_drawing(f));
  }
}

TEST_CASE("degree-capped partitions") {
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto r = lovasz_partition(c5, {1, 1});
  REQUIRE(r.parts.size() == 2);
  for (const auto& part : r.parts) {
    Graph sub = c5.induced(part);
    CHECK(sub.max_degree() <= 1);
  }
  CHECK(r.moves <= r.initial_potential - r.final_potential);

  auto k3 = lovasz_partition(complete(3), {1, 0});
  Graph sub0 = complete(3).induced(k3.parts[0]);
  Graph sub1 = complete(3).induced(k3.parts[1]);
  CHECK(sub0.max_degree() <= 1);
  CHECK(sub1.max_degree() <= 0);

  auto empty = lovasz_partition(Graph(4, {}), {0, 0});
  CHECK(empty.parts[0].size() + empty.parts[1].size() == 4);

  CHECK_THROWS_AS(lovasz_partition(complete(6), {1, 1}), Error);
}

TEST_CASE("degree caps hold on random instances") {
  Rng rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 3 + rng.below(8);
    Graph g = gridloc::testing::random_graph(rng, n, 1, 2);
    int m = 2 + rng.below(2);
    // caps meeting the hypothesis
    std::vector<int> caps(m, 0);
    int need = g.max_degree() - m + 1;
    for (int i = 0; need > 0; i = (i + 1) % m) {
      caps[i]++;
      --need;
    }
    auto r = lovasz_partition(g, caps);
    for (int i = 0; i < m; ++i) {
      Graph sub = g.induced(r.parts[i]);
      CHECK(sub.max_degree() <= caps[i]);
    }
    CHECK(r.moves <= r.initial_potential - r.final_potential);
  }
}

TEST_CASE("partitions into linear forests by maximum degree") {
  VertexPartition k4 = degree_partition(complete(4), 1);
  REQUIRE(k4.classes.size() == 2);
  CHECK(k4.classes[0].vertices.size() == 2);
  CHECK(validate_partition(complete(4), k4).ok);

  VertexPartition pet = degree_partition(petersen(), 1);
  REQUIRE(pet.classes.size() == 2);
  CHECK(validate_partition(petersen(), pet).ok);
  for (const auto& cls : pet.classes)
    CHECK(is_linear_forest(petersen(), cls.vertices));

  Rng rng(29);
  for (int iter = 0; iter < 15; ++iter) {
    int n = 5 + rng.below(8);
    Graph g = gridloc::testing::random_graph(rng, n, 1, 2);
    if (g.max_degree() > 7) continue;
    VertexPartition p = degree_partition(g, 2);
    CHECK(p.classes.size() == 4);
    CHECK(validate_partition(g, p).ok);
    for (const auto& cls : p.classes)
      CHECK(is_linear_forest(g, cls.vertices));
  }

  CHECK_THROWS_AS(degree_partition(complete(6), 1), Error);  // maxdeg 5 > 3
}

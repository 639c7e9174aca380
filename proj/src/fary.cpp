// Planarity testing and the straight-line grid embedding, built on the
// Boost.Graph planar tool chain.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>

#include "planar.hpp"

namespace gridloc {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.vertex_count());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return bg;
}

void reindex_edges(BoostGraph& bg) {
  auto index = boost::get(boost::edge_index, bg);
  int count = 0;
  for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei)
    boost::put(index, *ei, count++);
}

using EmbeddingStorage =
    std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>;

bool compute_embedding(BoostGraph& bg, EmbeddingStorage& storage) {
  storage.assign(boost::num_vertices(bg), {});
  return boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = &storage[0]);
}

}  // namespace

bool is_planar_graph(const Graph& g) {
  if (g.vertex_count() <= 4) {
    // K_5 is the smallest non-planar graph
    return g.vertex_count() < 5;
  }
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

RealEmbedding fary_embed(const Graph& g) {
  int n = g.vertex_count();
  if (!is_planar_graph(g)) throw input_error("graph is not planar");

  RealEmbedding out;
  out.graph = g;
  out.points.resize(n);
  if (n == 0) return out;
  if (n == 1) {
    out.points[0] = {0, 0};
    return out;
  }
  if (n == 2) {
    out.points[0] = {0, 0};
    out.points[1] = {1, 0};
    return out;
  }

  BoostGraph bg = to_boost(g);
  reindex_edges(bg);
  boost::make_connected(bg);
  reindex_edges(bg);

  EmbeddingStorage embedding;
  if (!compute_embedding(bg, embedding))
    throw internal_error("augmented graph lost planarity");
  boost::make_biconnected_planar(bg, &embedding[0]);
  reindex_edges(bg);
  if (!compute_embedding(bg, embedding))
    throw internal_error("biconnected augmentation lost planarity");
  boost::make_maximal_planar(bg, &embedding[0]);
  reindex_edges(bg);
  if (!compute_embedding(bg, embedding))
    throw internal_error("triangulation lost planarity");

  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> ordering;
  boost::planar_canonical_ordering(bg, &embedding[0],
                                   std::back_inserter(ordering));

  struct Coord {
    std::size_t x, y;
  };
  std::vector<Coord> coords(boost::num_vertices(bg));
  auto drawing = boost::make_iterator_property_map(
      coords.begin(), boost::get(boost::vertex_index, bg));
  boost::chrobak_payne_straight_line_drawing(bg, embedding, ordering.begin(),
                                             ordering.end(), drawing);

  for (int v = 0; v < n; ++v)
    out.points[v] = {Rational(static_cast<long>(coords[v].x)),
                     Rational(static_cast<long>(coords[v].y))};

  if (!is_planar_embedding(out))
    throw internal_error("straight-line embedding failed certification");
  return out;
}

}  // namespace gridloc

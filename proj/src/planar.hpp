#ifndef GRIDLOC_PLANAR_HPP
#define GRIDLOC_PLANAR_HPP

#include <utility>
#include <vector>

#include "verify.hpp"

namespace gridloc {

// Straight-line planar embedding with exact rational coordinates.
struct RealEmbedding {
  Graph graph;
  std::vector<std::pair<Rational, Rational>> points;
};

bool is_planar_graph(const Graph& g);

// Exact check that the embedding is an injective straight-line plane
// drawing: no vertex on a non-incident segment, no two segments meeting
// outside a shared endpoint.
bool is_planar_embedding(const RealEmbedding& e);

// Straight-line planar embedding on integer coordinates inside an
// O(n) x O(n) box (connect, biconnect, triangulate, canonical ordering,
// shift method). Rejects non-planar inputs.
RealEmbedding fary_embed(const Graph& g);

// Exact proper coloring with at most four colors (existence guaranteed for
// planar inputs); returns a coloring with exactly chi(g) colors.
Coloring four_color(const Graph& g, const SearchBudget& budget = {});

// Squared safety radius: the square of half the minimum distance between
// vertex-disjoint features (segment pairs, vertex-to-non-incident-segment,
// non-adjacent vertex pairs). Every vertex may move anywhere within this
// radius without breaking planarity or validity.
Rational min_feature_distance_sq(const RealEmbedding& e);

// Squared form of the grid clearance lower bound 1/sqrt(2n^2-2n+1) for an
// n x n grid.
Rational grid_min_distance_sq_bound(int n);

struct ProperizeReport {
  BigInt width;
  BigInt height;
  int prime_count = 0;
  BigInt modulus;       // the combined vertical modulus
  BigInt x_scale;
  BigInt y_scale;
};

// Snaps a planar embedding to a proper (valid + planar + gp = 2) integer
// drawing whose coordinates reproduce the coloring mod 2 and mod 3; edge
// differences stay coprime through per-prime color residues. The result is
// certified before it is returned.
GridDrawing properize(const RealEmbedding& e, const Coloring& c,
                      ProperizeReport* report = nullptr);

// Coordinates mod 2 as a four-valued coloring; proper whenever the
// drawing is primitive.
Coloring parity_coloring(const GridDrawing& dr);

}  // namespace gridloc

#endif

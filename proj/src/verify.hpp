#ifndef GRIDLOC_VERIFY_HPP
#define GRIDLOC_VERIFY_HPP

#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "lattice.hpp"

namespace gridloc {

// A grid drawing: injective vertex -> grid point map for a graph. The
// verification operations below judge, with exact arithmetic, which of the
// drawing properties hold.
struct GridDrawing {
  int dim = 2;
  Graph graph;
  std::vector<GridPoint> points;  // indexed by vertex

  void check_shape() const;  // dimensions consistent, one point per vertex
};

// No vertex point lies on the closed segment of a non-incident edge, and
// the vertex map is injective.
bool is_valid_drawing(const GridDrawing& dr);

// Maximum number of grid points on any edge segment; 0 for edgeless
// graphs by convention (monotone under edge addition).
BigInt gp(const GridDrawing& dr);

// Straight-line planarity for dim-2 drawings: no two edge segments meet
// except at a shared endpoint vertex. Exact integer tests.
bool is_planar_drawing(const GridDrawing& dr);

// Valid + planar + every segment carries exactly two grid points.
bool is_proper(const GridDrawing& dr);

// Groups vertices by the first dim-1 coordinates.
std::map<std::vector<BigInt>, std::vector<int>> column_ranks(
    const GridDrawing& dr);

// Minimum gp over all valid drawings of g inside [0,box]^2, or nullopt when
// no valid drawing fits. Exhaustive; desk scale only (n <= 5, box <= 4).
std::optional<int> min_gp_bruteforce(const Graph& g, int box);

}  // namespace gridloc

#endif

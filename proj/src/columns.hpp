#ifndef GRIDLOC_COLUMNS_HPP
#define GRIDLOC_COLUMNS_HPP

#include <vector>

#include "verify.hpp"

namespace gridloc {

// Drawing on exactly |classes| consecutive columns 0..l-1 of the plane;
// class i occupies column i, path-adjacent vertices on consecutive last
// coordinates. All classes must be path kind.
GridDrawing embed_on_columns(const Graph& g, const VertexPartition& p);

// Primitive (gp = 2) drawing on l columns in Z^d with ranks inside
// {0..3} x {0,1}^(d-2). Accepts l <= 2^d; for l > 2^(d-1) at most 2^d - l
// classes may be path kind.
GridDrawing locate_on_columns(const Graph& g, const VertexPartition& p,
                              int d);

// Recovers a partition (at most 2^d - l path classes, the rest normal)
// from a primitive valid drawing on l columns, via the congruence classes
// of the column ranks mod 2.
VertexPartition partition_from_located(const GridDrawing& dr, int d, int l);

// Splits path classes into pairs of normal classes until the partition can
// be located; used to trade columns for primitivity.
VertexPartition split_path_colors(const VertexPartition& p, const Graph& g,
                                  int d);

// Smallest dimension in which locate_on_columns accepts the partition.
int min_locating_dimension(const VertexPartition& p);

// Flattens a valid drawing on l columns (any dimension) to the plane:
// column k of the sorted rank order becomes rank k, per-column vertical
// shifts keep the drawing valid. Primitivity is not preserved in general.
GridDrawing transfer_to_plane(const GridDrawing& dr);

struct LovaszPartition {
  std::vector<std::vector<int>> parts;
  long long moves = 0;
  long long initial_potential = 0;
  long long final_potential = 0;
};

// Partition into m parts with max induced degree of part i at most caps[i];
// requires sum(caps) >= maxdeg(g) - m + 1. Local search on the potential
// sum_i (e(G[V_i]) - caps_i * |V_i|), which every move strictly decreases.
LovaszPartition lovasz_partition(const Graph& g,
                                 const std::vector<int>& caps);

// Partition into 2^d linear forests for graphs with maxdeg <= 2^(d+1)-1.
VertexPartition degree_partition(const Graph& g, int d);

}  // namespace gridloc

#endif

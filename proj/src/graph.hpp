#ifndef GRIDLOC_GRAPH_HPP
#define GRIDLOC_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace gridloc {

// Simple undirected graph on vertices 0..n-1. Edges are stored canonically
// (u < v, sorted, no duplicates); construction validates the invariants.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  // Subgraph induced by `vertices`; fills old-id -> new-id positions.
  Graph induced(const std::vector<int>& vertices,
                std::vector<int>* old_to_new = nullptr) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct Coloring {
  int k = 0;                // number of available colors
  std::vector<int> color;   // color[v] in [0, k)

  int used_colors() const;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

enum class ClassKind { Normal, Path };

struct PartitionClass {
  ClassKind kind;
  std::vector<int> vertices;
};

struct VertexPartition {
  std::vector<PartitionClass> classes;

  int path_class_count() const;
};

bool is_independent_set(const Graph& g, const std::vector<int>& s);

// True iff the induced subgraph on s is acyclic with maximum degree <= 2,
// i.e. a disjoint union of paths.
bool is_linear_forest(const Graph& g, const std::vector<int>& s);

struct PartitionCheck {
  bool ok;
  std::string reason;  // empty when ok

  explicit operator bool() const { return ok; }
};

// Checks that the classes partition V and each satisfies its declared kind.
PartitionCheck validate_partition(const Graph& g, const VertexPartition& p);

// Exact k-colorability with a witness; nullopt when no k-coloring exists.
std::optional<Coloring> k_color(const Graph& g, int k,
                                const SearchBudget& budget = {});

struct ChromaticResult {
  int chi;
  Coloring witness;
};

// Exact chromatic number by branch and bound (clique lower bound, greedy
// upper bound). Deterministic; throws a Budget error rather than guessing.
ChromaticResult chromatic_number(const Graph& g,
                                 const SearchBudget& budget = {});

}  // namespace gridloc

#endif

#ifndef GRIDLOC_MIXED_HPP
#define GRIDLOC_MIXED_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace gridloc {

// A mixed coloring uses `normal_colors` classes that must induce
// independent sets and `path_colors` classes that must induce linear
// forests. Class ids 0..normal_colors-1 are normal, the rest path.
struct MixedSpec {
  int normal_colors = 0;
  int path_colors = 0;

  int total() const { return normal_colors + path_colors; }
  bool is_path_class(int c) const { return c >= normal_colors; }
};

bool is_valid_mixed_coloring(const Graph& g, const MixedSpec& spec,
                             const Coloring& c);

// Exact decision with a witness: backtracking with incremental degree and
// cycle pruning. "nullopt" is certified by exhausted search; running out
// of budget raises instead.
std::optional<Coloring> mixed_color(const Graph& g, const MixedSpec& spec,
                                    const SearchBudget& budget = {});

// Independent oracle: plain enumeration of all (a+b)^n assignments.
std::optional<Coloring> mixed_color_bruteforce(const Graph& g,
                                               const MixedSpec& spec);

// Joins two disjoint cliques K_{a+2b-1} to every vertex; the result is
// (a,b)-colorable iff g is (a+b)-colorable.
Graph reduce_add_cliques(const Graph& g, const MixedSpec& spec);

struct Formula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;  // literals +v / -v, 1-based
};

enum class FormulaVariant { OneInThree, NotAllEqual };

MixedSpec variant_spec(FormulaVariant variant);

// The shipped variable gadget for the variant, with marked vertices 0 and
// 1 standing for the variable and its negation.
Graph variable_gadget(FormulaVariant variant);

struct FormulaGraph {
  Graph graph;
  FormulaVariant variant;
  MixedSpec spec;
  std::vector<int> var_vertex;     // vertex of v_k per variable
  std::vector<int> negvar_vertex;  // vertex of the negation per variable
  std::vector<std::array<int, 3>> clause_vertices;
};

// The reduction graph: a triangle per clause, a variable gadget per
// variable, literal vertices wired to the matching gadget vertex.
FormulaGraph build_formula_graph(const Formula& f, FormulaVariant variant);

struct GadgetCheck {
  bool ok;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Exhaustively certifies the gadget contract: marked vertices are forced
// heterochromatic, both patterns extend to full colorings, and a marked
// vertex with a path-kind color always carries in-gadget same-class degree
// exactly two, so any same-class attachment is impossible.
GadgetCheck verify_variable_gadget(const Graph& gadget, int v, int vbar,
                                   const std::vector<int>& attach_points,
                                   FormulaVariant variant);

// Truth assignment from a valid coloring of the reduction graph.
std::vector<bool> decode_assignment(const FormulaGraph& fg,
                                    const Coloring& c);

// Satisfaction checks for the two 3SAT variants.
bool satisfies_one_in_three(const Formula& f, const std::vector<bool>& a);
bool satisfies_nae(const Formula& f, const std::vector<bool>& a);

}  // namespace gridloc

#endif

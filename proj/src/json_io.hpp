#ifndef GRIDLOC_JSON_IO_HPP
#define GRIDLOC_JSON_IO_HPP

// File formats. All unbounded integers travel as decimal strings; JSON
// numbers are used only where values are guaranteed small (vertex ids,
// counts, dimensions). Emission is byte-deterministic for fixed inputs.

#include <string>

#include "locator.hpp"
#include "mixed.hpp"
#include "planar.hpp"
#include "verify.hpp"

namespace gridloc {

Graph parse_graph_json(const std::string& text);
std::string emit_graph_json(const Graph& g);

VertexPartition parse_partition_json(const std::string& text);
std::string emit_partition_json(const VertexPartition& p);

Coloring parse_coloring_json(const std::string& text);
std::string emit_coloring_json(const Coloring& c);

GridDrawing parse_drawing_json(const std::string& text);
std::string emit_drawing_json(const GridDrawing& dr);

std::string emit_family_json(const ColumnFamily& fam);

// DIMACS CNF with exactly three literals per clause. A comment line of the
// form "c variant: one-in-three" or "c variant: nae" selects the variant;
// parse_variant applies the same strings to CLI flags.
struct DimacsFile {
  Formula formula;
  std::optional<FormulaVariant> variant;
};

DimacsFile parse_dimacs(const std::string& text);
FormulaVariant parse_variant(const std::string& name);

std::string emit_formula_graph_json(const FormulaGraph& fg);

}  // namespace gridloc

#endif

#include "json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace gridloc {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON document");
  return j;
}

int get_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw input_error(std::string("missing or non-integer field \"") + field +
                      "\"");
  return j[field].get<int>();
}

BigInt get_bigint(const json& j, const std::string& where) {
  if (!j.is_string())
    throw input_error("expected a decimal string at " + where);
  auto parsed = parse_decimal(j.get<std::string>());
  if (!parsed)
    throw input_error("not a decimal integer at " + where + ": \"" +
                      j.get<std::string>() + "\"");
  return *parsed;
}

std::vector<std::pair<int, int>> get_edges(const json& j) {
  if (!j.contains("edges") || !j["edges"].is_array())
    throw input_error("missing \"edges\" array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw input_error("each edge must be a pair of vertex ids");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return edges;
}

}  // namespace

Graph parse_graph_json(const std::string& text) {
  json j = parse_or_throw(text);
  return Graph(get_int(j, "n"), get_edges(j));
}

std::string emit_graph_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

VertexPartition parse_partition_json(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.contains("classes") || !j["classes"].is_array())
    throw input_error("missing \"classes\" array");
  VertexPartition p;
  for (const auto& cls : j["classes"]) {
    if (!cls.contains("kind") || !cls["kind"].is_string())
      throw input_error("class needs a \"kind\" of \"path\" or \"normal\"");
    std::string kind = cls["kind"].get<std::string>();
    if (kind != "path" && kind != "normal")
      throw input_error("unknown class kind \"" + kind + "\"");
    if (!cls.contains("vertices") || !cls["vertices"].is_array())
      throw input_error("class needs a \"vertices\" array");
    PartitionClass out;
    out.kind = kind == "path" ? ClassKind::Path : ClassKind::Normal;
    for (const auto& v : cls["vertices"]) {
      if (!v.is_number_integer())
        throw input_error("class vertices must be integers");
      out.vertices.push_back(v.get<int>());
    }
    p.classes.push_back(std::move(out));
  }
  return p;
}

std::string emit_partition_json(const VertexPartition& p) {
  json j;
  j["classes"] = json::array();
  for (const auto& cls : p.classes) {
    json c;
    c["kind"] = cls.kind == ClassKind::Path ? "path" : "normal";
    c["vertices"] = cls.vertices;
    j["classes"].push_back(c);
  }
  return j.dump();
}

Coloring parse_coloring_json(const std::string& text) {
  json j = parse_or_throw(text);
  Coloring c;
  c.k = get_int(j, "k");
  if (!j.contains("colors") || !j["colors"].is_array())
    throw input_error("missing \"colors\" array");
  for (const auto& v : j["colors"]) {
    if (!v.is_number_integer()) throw input_error("colors must be integers");
    c.color.push_back(v.get<int>());
  }
  return c;
}

std::string emit_coloring_json(const Coloring& c) {
  json j;
  j["k"] = c.k;
  j["colors"] = c.color;
  return j.dump();
}

GridDrawing parse_drawing_json(const std::string& text) {
  json j = parse_or_throw(text);
  GridDrawing dr;
  dr.dim = get_int(j, "dim");
  int n = get_int(j, "n");
  dr.graph = Graph(n, get_edges(j));
  if (!j.contains("points") || !j["points"].is_object())
    throw input_error("missing \"points\" object");
  dr.points.resize(n);
  std::vector<char> seen(n, 0);
  for (const auto& [key, value] : j["points"].items()) {
    int v;
    try {
      std::size_t pos = 0;
      v = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw input_error("point key \"" + key + "\" is not a vertex id");
    }
    if (v < 0 || v >= n)
      throw input_error("point key \"" + key + "\" out of range");
    if (!value.is_array())
      throw input_error("point " + key + " must be a coordinate array");
    GridPoint p;
    for (std::size_t i = 0; i < value.size(); ++i)
      p.coords.push_back(
          get_bigint(value[i], "points." + key + "[" + std::to_string(i) + "]"));
    dr.points[v] = std::move(p);
    seen[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v])
      throw input_error("vertex " + std::to_string(v) + " has no point");
  dr.check_shape();
  return dr;
}

std::string emit_drawing_json(const GridDrawing& dr) {
  json j;
  j["dim"] = dr.dim;
  j["n"] = dr.graph.vertex_count();
  j["edges"] = json::array();
  for (auto [u, v] : dr.graph.edges()) j["edges"].push_back({u, v});
  json points = json::object();
  for (int v = 0; v < dr.graph.vertex_count(); ++v) {
    json coords = json::array();
    for (const auto& x : dr.points[v].coords) coords.push_back(to_decimal(x));
    points[std::to_string(v)] = coords;
  }
  j["points"] = points;
  return j.dump();
}

std::string emit_family_json(const ColumnFamily& fam) {
  json j;
  j["s"] = fam.s;
  j["d"] = fam.d;
  j["modulus"] = to_decimal(fam.modulus);
  json fixups = json::array();
  for (long p : fam.fixup_primes) fixups.push_back(p);
  j["fixupPrimes"] = fixups;
  json cols = json::array();
  for (std::size_t i = 0; i < fam.columns.size(); ++i) {
    const auto& col = fam.columns[i];
    json cj;
    cj["index"] = static_cast<int>(i);
    json rank = json::array();
    for (const auto& r : col.rank) rank.push_back(to_decimal(r));
    cj["rank"] = rank;
    json residues = json::array();
    for (const auto& con : col.last_coord.constraints) {
      json rj;
      rj["modulus"] = to_decimal(con.modulus);
      rj["residue"] = to_decimal(con.residue);
      residues.push_back(rj);
    }
    cj["residues"] = residues;
    json fx = json::array();
    for (const auto& con : col.fixups) {
      json rj;
      rj["prime"] = to_decimal(con.modulus);
      rj["residue"] = to_decimal(con.residue);
      fx.push_back(rj);
    }
    cj["fixups"] = fx;
    cols.push_back(cj);
  }
  j["columns"] = cols;
  return j.dump();
}

DimacsFile parse_dimacs(const std::string& text) {
  DimacsFile out;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  int expected_clauses = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') {
      auto pos = line.find("variant:");
      if (pos != std::string::npos) {
        std::string name = line.substr(pos + 8);
        name.erase(0, name.find_first_not_of(" \t"));
        auto end = name.find_last_not_of(" \t\r");
        if (end != std::string::npos) name.erase(end + 1);
        out.variant = parse_variant(name);
      }
      continue;
    }
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, cnf;
      int vars, clauses;
      if (!(ls >> p >> cnf >> vars >> clauses) || cnf != "cnf")
        throw input_error("malformed DIMACS header: " + line);
      out.formula.num_vars = vars;
      expected_clauses = clauses;
      header = true;
      continue;
    }
    if (!header) throw input_error("clause before DIMACS header");
    std::vector<int> lits;
    int lit;
    while (ls >> lit) {
      if (lit == 0) break;
      lits.push_back(lit);
    }
    if (lits.empty()) continue;
    if (lits.size() != 3)
      throw input_error("every clause needs exactly three literals, got " +
                        std::to_string(lits.size()));
    for (int l : lits)
      if (std::abs(l) > out.formula.num_vars)
        throw input_error("literal out of range: " + std::to_string(l));
    out.formula.clauses.push_back({lits[0], lits[1], lits[2]});
  }
  if (!header) throw input_error("missing DIMACS header");
  if (expected_clauses >= 0 &&
      expected_clauses != static_cast<int>(out.formula.clauses.size()))
    throw input_error("clause count does not match header");
  return out;
}

FormulaVariant parse_variant(const std::string& name) {
  if (name == "one-in-three") return FormulaVariant::OneInThree;
  if (name == "nae") return FormulaVariant::NotAllEqual;
  throw input_error("unknown variant \"" + name +
                    "\" (want one-in-three or nae)");
}

std::string emit_formula_graph_json(const FormulaGraph& fg) {
  json j;
  json graph = json::parse(emit_graph_json(fg.graph));
  j["graph"] = graph;
  j["variant"] = fg.variant == FormulaVariant::OneInThree ? "one-in-three"
                                                          : "nae";
  j["normalColors"] = fg.spec.normal_colors;
  j["pathColors"] = fg.spec.path_colors;
  j["variableVertices"] = fg.var_vertex;
  j["negatedVertices"] = fg.negvar_vertex;
  json cls = json::array();
  for (const auto& cv : fg.clause_vertices)
    cls.push_back({cv[0], cv[1], cv[2]});
  j["clauseVertices"] = cls;
  return j.dump();
}

}  // namespace gridloc

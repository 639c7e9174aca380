// The extern-C surface of the shared library. Every entry point parses its
// JSON inputs, runs the core, and wraps the outcome in an owned result
// object; C++ exceptions never cross this boundary.

#include "gridloc.h"

#include <string>

#include <json.hpp>

#include "columns.hpp"
#include "json_io.hpp"
#include "locator.hpp"
#include "mixed.hpp"
#include "planar.hpp"
#include "svg.hpp"
#include "verify.hpp"

struct gridloc_result {
  gridloc_status status = GRIDLOC_OK;
  std::string output;
  std::string error;
  bool has_output = false;
};

namespace {

using nlohmann::json;
using namespace gridloc;

gridloc_result* make_ok(std::string output) {
  auto* r = new gridloc_result;
  r->status = GRIDLOC_OK;
  r->output = std::move(output);
  r->has_output = true;
  return r;
}

gridloc_result* make_none(std::string output) {
  auto* r = new gridloc_result;
  r->status = GRIDLOC_NONE;
  r->output = std::move(output);
  r->has_output = true;
  return r;
}

template <typename Fn>
gridloc_result* guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    auto* r = new gridloc_result;
    switch (e.kind()) {
      case ErrorKind::Input:
        r->status = GRIDLOC_ERR_INPUT;
        break;
      case ErrorKind::Budget:
        r->status = GRIDLOC_ERR_BUDGET;
        break;
      case ErrorKind::Internal:
        r->status = GRIDLOC_ERR_INTERNAL;
        break;
    }
    r->error = e.what();
    return r;
  } catch (const std::exception& e) {
    auto* r = new gridloc_result;
    r->status = GRIDLOC_ERR_INTERNAL;
    r->error = e.what();
    return r;
  }
}

std::string require(const char* text, const char* what) {
  if (!text) throw input_error(std::string("missing ") + what);
  return text;
}

gridloc_result* mixed_result(const MixedSpec& spec,
                             const std::optional<Coloring>& witness) {
  json out;
  out["normalColors"] = spec.normal_colors;
  out["pathColors"] = spec.path_colors;
  if (!witness) {
    out["colorable"] = false;
    return make_none(out.dump());
  }
  out["colorable"] = true;
  out["coloring"] = json::parse(emit_coloring_json(*witness));
  return make_ok(out.dump());
}

}  // namespace

extern "C" {

gridloc_status gridloc_result_status(const gridloc_result* r) {
  return r ? r->status : GRIDLOC_ERR_INPUT;
}

const char* gridloc_result_output(const gridloc_result* r) {
  return r && r->has_output ? r->output.c_str() : nullptr;
}

const char* gridloc_result_error(const gridloc_result* r) {
  return r && !r->error.empty() ? r->error.c_str() : nullptr;
}

void gridloc_result_free(gridloc_result* r) { delete r; }

const char* gridloc_version(void) { return "0.1.0"; }

gridloc_result* gridloc_verify(const char* drawing_json, const char* check) {
  return guarded([&]() -> gridloc_result* {
    GridDrawing dr = parse_drawing_json(require(drawing_json, "drawing"));
    std::string mode = check ? check : "valid";
    bool result;
    if (mode == "valid")
      result = is_valid_drawing(dr);
    else if (mode == "planar")
      result = is_planar_drawing(dr);
    else if (mode == "proper")
      result = is_proper(dr);
    else
      throw input_error("unknown check \"" + mode +
                        "\" (want valid, planar or proper)");
    json out;
    out["check"] = mode;
    out["result"] = result;
    out["gp"] = to_decimal(gp(dr));
    return result ? make_ok(out.dump()) : make_none(out.dump());
  });
}

gridloc_result* gridloc_gp(const char* drawing_json) {
  return guarded([&]() -> gridloc_result* {
    GridDrawing dr = parse_drawing_json(require(drawing_json, "drawing"));
    json out;
    out["gp"] = to_decimal(gp(dr));
    return make_ok(out.dump());
  });
}

gridloc_result* gridloc_column_ranks(const char* drawing_json) {
  return guarded([&]() -> gridloc_result* {
    GridDrawing dr = parse_drawing_json(require(drawing_json, "drawing"));
    auto ranks = column_ranks(dr);
    json cols = json::array();
    for (const auto& [rank, verts] : ranks) {
      json c;
      json r = json::array();
      for (const auto& x : rank) r.push_back(to_decimal(x));
      c["rank"] = r;
      c["vertices"] = verts;
      cols.push_back(c);
    }
    json out;
    out["columns"] = cols;
    return make_ok(out.dump());
  });
}

gridloc_result* gridloc_min_gp_bruteforce(const char* graph_json, long box) {
  return guarded([&]() -> gridloc_result* {
    Graph g = parse_graph_json(require(graph_json, "graph"));
    auto r = min_gp_bruteforce(g, static_cast<int>(box));
    json out;
    if (!r) {
      out["min_gp"] = nullptr;
      return make_none(out.dump());
    }
    out["min_gp"] = *r;
    return make_ok(out.dump());
  });
}

gridloc_result* gridloc_locate(const char* graph_json,
                               const char* coloring_json, long q, long d) {
  return guarded([&]() -> gridloc_result* {
    Graph g = parse_graph_json(require(graph_json, "graph"));
    Coloring c;
    if (coloring_json) {
      c = parse_coloring_json(coloring_json);
    } else {
      long long s = 1;
      for (long t = 0; t < d; ++t) {
        s *= q;
        if (s > 1'000'000) throw input_error("q^d too large");
      }
      auto witness = k_color(g, static_cast<int>(s));
      if (!witness) {
        json out;
        out["locatable"] = false;
        return make_none(out.dump());
      }
      c = *witness;
    }
    GridDrawing dr =
        locate_from_coloring(g, c, static_cast<int>(q), static_cast<int>(d));
    return make_ok(emit_drawing_json(dr));
  });
}

gridloc_result* gridloc_modular_coloring(const char* drawing_json, long q) {
  return guarded([&]() -> gridloc_result* {
    GridDrawing dr = parse_drawing_json(require(drawing_json, "drawing"));
    return make_ok(emit_coloring_json(modular_coloring(dr, static_cast<int>(q))));
  });
}

gridloc_result* gridloc_columns_family(long s, long d,
                                       const char* fixup_primes_json) {
  return guarded([&]() -> gridloc_result* {
    ColumnFamily fam;
    if (!fixup_primes_json) {
      fam = build_column_family_auto(s, static_cast<int>(d));
    } else {
      json j = json::parse(fixup_primes_json, nullptr, false);
      if (j.is_discarded() || !j.is_array())
        throw input_error("fixup primes must be a JSON array");
      std::vector<long> primes;
      for (const auto& p : j) {
        if (!p.is_number_integer())
          throw input_error("fixup primes must be integers");
        primes.push_back(p.get<long>());
      }
      fam = build_column_family(s, static_cast<int>(d), primes);
    }
    return make_ok(emit_family_json(fam));
  });
}

gridloc_result* gridloc_embed_columns(const char* graph_json,
                                      const char* partition_json) {
  return guarded([&]() -> gridloc_result* {
    Graph g = parse_graph_json(require(graph_json, "graph"));
    VertexPartition p =
        parse_partition_json(require(partition_json, "partition"));
    return make_ok(emit_drawing_json(embed_on_columns(g, p)));
  });
}

gridloc_result* gridloc_locate_columns(const char* graph_json,
                                       const char* partition_json, long d) {
  return guarded([&]() -> gridloc_result* {
    Graph g = parse_graph_json(require(graph_json, "graph"));
    VertexPartition p =
        parse_partition_json(require(partition_json, "partition"));
    return make_ok(
        emit_drawing_json(locate_on_columns(g, p, static_cast<int>(d))));
  });
}

gridloc_result* gridloc_partition_from_located(const char* drawing_json,
                                               long d, long l) {
  return guarded([&]() -> gridloc_result* {
    GridDrawing dr = parse_drawing_json(require(drawing_json, "drawing"));
    return make_ok(emit_partition_json(partition_from_located(
        dr, static_cast<int>(d), static_cast<int>(l))));
  });
}

gridloc_result* gridloc_transfer_to_plane(const char* drawing_json) {
  return guarded([&]() -> gridloc_result* {
    GridDrawing dr = parse_drawing_json(require(drawing_json, "drawing"));
    return make_ok(emit_drawing_json(transfer_to_plane(dr)));
  });
}

gridloc_result* gridloc_mixed_color(const char* graph_json, long normal_colors,
                                    long path_colors) {
  return guarded([&]() -> gridloc_result* {
    Graph g = parse_graph_json(require(graph_json, "graph"));
    MixedSpec spec{static_cast<int>(normal_colors),
                   static_cast<int>(path_colors)};
    return mixed_result(spec, mixed_color(g, spec));
  });
}

gridloc_result* gridloc_mixed_color_oracle(const char* graph_json,
                                           long normal_colors,
                                           long path_colors) {
  return guarded([&]() -> gridloc_result* {
    Graph g = parse_graph_json(require(graph_json, "graph"));
    MixedSpec spec{static_cast<int>(normal_colors),
                   static_cast<int>(path_colors)};
    return mixed_result(spec, mixed_color_bruteforce(g, spec));
  });
}

gridloc_result* gridloc_reduce_cliques(const char* graph_json,
                                       long normal_colors, long path_colors) {
  return guarded([&]() -> gridloc_result* {
    Graph g = parse_graph_json(require(graph_json, "graph"));
    MixedSpec spec{static_cast<int>(normal_colors),
                   static_cast<int>(path_colors)};
    return make_ok(emit_graph_json(reduce_add_cliques(g, spec)));
  });
}

gridloc_result* gridloc_formula_graph(const char* dimacs_text,
                                      const char* variant) {
  return guarded([&]() -> gridloc_result* {
    DimacsFile file = parse_dimacs(require(dimacs_text, "DIMACS text"));
    FormulaVariant v;
    if (variant)
      v = parse_variant(variant);
    else if (file.variant)
      v = *file.variant;
    else
      throw input_error(
          "variant not given (flag or \"c variant:\" comment required)");
    return make_ok(emit_formula_graph_json(build_formula_graph(file.formula, v)));
  });
}

gridloc_result* gridloc_chromatic(const char* graph_json) {
  return guarded([&]() -> gridloc_result* {
    Graph g = parse_graph_json(require(graph_json, "graph"));
    auto r = chromatic_number(g);
    json out;
    out["chi"] = r.chi;
    out["coloring"] = json::parse(emit_coloring_json(r.witness));
    return make_ok(out.dump());
  });
}

gridloc_result* gridloc_proper(const char* graph_json, int with_report) {
  return guarded([&]() -> gridloc_result* {
    Graph g = parse_graph_json(require(graph_json, "graph"));
    Coloring c = four_color(g);
    RealEmbedding e = fary_embed(g);
    ProperizeReport report;
    GridDrawing dr = properize(e, c, &report);
    if (!with_report) return make_ok(emit_drawing_json(dr));
    json out = json::parse(emit_drawing_json(dr));
    json rj;
    rj["width"] = to_decimal(report.width);
    rj["height"] = to_decimal(report.height);
    rj["primeCount"] = report.prime_count;
    rj["modulus"] = to_decimal(report.modulus);
    rj["xScale"] = to_decimal(report.x_scale);
    rj["yScale"] = to_decimal(report.y_scale);
    out["report"] = rj;
    return make_ok(out.dump());
  });
}

gridloc_result* gridloc_render_svg(const char* drawing_json) {
  return guarded([&]() -> gridloc_result* {
    GridDrawing dr = parse_drawing_json(require(drawing_json, "drawing"));
    return make_ok(render_drawing_svg(dr));
  });
}

}  // extern "C"

// gridloc command line front end. All functionality goes through the
// shared library's C API; this binary only handles files, flags and exit
// codes (0 success/true, 1 false/none, 2 input error, 3 budget exceeded,
// 4 internal failure).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridloc.h"

namespace {

using nlohmann::json;

struct ResultDeleter {
  void operator()(gridloc_result* r) const { gridloc_result_free(r); }
};
using Result = std::unique_ptr<gridloc_result, ResultDeleter>;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(2);
  }
  out << text;
}

// Prints the document (stdout or --out) and converts the status into the
// process exit code.
int finish(Result r, const std::string& out_path,
           const std::string& svg_path = "") {
  gridloc_status st = gridloc_result_status(r.get());
  const char* output = gridloc_result_output(r.get());
  const char* error = gridloc_result_error(r.get());
  if (error) std::cerr << "error: " << error << "\n";
  if (output) {
    if (out_path.empty())
      std::cout << output << "\n";
    else
      spill(out_path, std::string(output) + "\n");
  }
  if (!svg_path.empty() && output && st == GRIDLOC_OK) {
    Result svg(gridloc_render_svg(output));
    if (gridloc_result_status(svg.get()) == GRIDLOC_OK)
      spill(svg_path, gridloc_result_output(svg.get()));
    else if (gridloc_result_error(svg.get()))
      std::cerr << "warning: no SVG: " << gridloc_result_error(svg.get())
                << "\n";
  }
  return static_cast<int>(st);
}

// Deterministic generator for the oracle corpus mode.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % n); }
};

std::string random_graph_json(Rng& rng, int n, int num, int den) {
  json j;
  j["n"] = n;
  j["edges"] = json::array();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(den) < num) j["edges"].push_back({u, v});
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact grid drawings of graphs"};
  app.require_subcommand(1);

  std::string graph_path, drawing_path, partition_path, coloring_path;
  std::string cnf_path, out_path, svg_path, check = "valid", variant, mode;
  long q = 2, dim = 2, s = 4, box = 2, a = 0, b = 0;
  bool with_report = false;
  long random_count = 0, random_n = 6;
  std::uint64_t seed = 1;

  auto* verify = app.add_subcommand("verify", "judge a drawing");
  verify->add_option("--drawing", drawing_path)->required();
  verify->add_option("--check", check, "valid | planar | proper");
  verify->add_option("--out", out_path);
  verify->add_option("--svg", svg_path);

  auto* gp_cmd = app.add_subcommand("gp", "grid points on the worst segment");
  gp_cmd->add_option("--drawing", drawing_path)->required();
  gp_cmd->add_option("--out", out_path);

  auto* locate = app.add_subcommand("locate", "draw with bounded segments");
  locate->add_option("--graph", graph_path)->required();
  locate->add_option("--coloring", coloring_path);
  locate->add_option("--q", q)->required();
  locate->add_option("--d", dim)->required();
  locate->add_option("--out", out_path);
  locate->add_option("--svg", svg_path);

  auto* family = app.add_subcommand("columns-family", "emit the column family");
  family->add_option("--s", s)->required();
  family->add_option("--d", dim);
  family->add_option("--out", out_path);

  auto* embed = app.add_subcommand("embed-columns",
                                   "draw on one column per class");
  embed->add_option("--graph", graph_path)->required();
  embed->add_option("--partition", partition_path)->required();
  embed->add_option("--out", out_path);
  embed->add_option("--svg", svg_path);

  auto* loc_cols = app.add_subcommand("locate-columns",
                                      "primitive drawing on few columns");
  loc_cols->add_option("--graph", graph_path)->required();
  loc_cols->add_option("--partition", partition_path)->required();
  loc_cols->add_option("--d", dim)->required();
  loc_cols->add_option("--out", out_path);
  loc_cols->add_option("--svg", svg_path);

  auto* mixed = app.add_subcommand("mixed-color", "exact (a,b)-coloring");
  mixed->add_option("--graph", graph_path)->required();
  mixed->add_option("--a", a)->required();
  mixed->add_option("--b", b)->required();
  mixed->add_option("--out", out_path);

  auto* reduce = app.add_subcommand("reduce-cliques",
                                    "colorability-to-mixed reduction graph");
  reduce->add_option("--graph", graph_path)->required();
  reduce->add_option("--a", a)->required();
  reduce->add_option("--b", b)->required();
  reduce->add_option("--out", out_path);

  auto* formula = app.add_subcommand("formula-graph",
                                     "satisfiability reduction graph");
  formula->add_option("--cnf", cnf_path)->required();
  formula->add_option("--variant", variant, "one-in-three | nae");
  formula->add_option("--out", out_path);

  auto* proper = app.add_subcommand("proper",
                                    "proper drawing of a planar graph");
  proper->add_option("--graph", graph_path)->required();
  proper->add_flag("--report", with_report, "attach size metrics");
  proper->add_option("--out", out_path);
  proper->add_option("--svg", svg_path);

  auto* oracle = app.add_subcommand("oracle", "brute-force reference answers");
  oracle->add_option("--mode", mode, "mixed | min-gp | chromatic")->required();
  oracle->add_option("--graph", graph_path);
  oracle->add_option("--a", a);
  oracle->add_option("--b", b);
  oracle->add_option("--box", box);
  oracle->add_option("--random", random_count,
                     "generate a corpus and compare against the solver");
  oracle->add_option("--n", random_n, "vertices per random graph");
  oracle->add_option("--seed", seed, "corpus seed");
  oracle->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) {
    std::string text = slurp(drawing_path);
    return finish(Result(gridloc_verify(text.c_str(), check.c_str())),
                  out_path, svg_path);
  }
  if (gp_cmd->parsed()) {
    std::string text = slurp(drawing_path);
    Result r(gridloc_gp(text.c_str()));
    if (gridloc_result_status(r.get()) == GRIDLOC_OK && out_path.empty()) {
      json j = json::parse(gridloc_result_output(r.get()));
      std::cout << j["gp"].get<std::string>() << "\n";
      return 0;
    }
    return finish(std::move(r), out_path);
  }
  if (locate->parsed()) {
    std::string graph = slurp(graph_path);
    std::string coloring;
    const char* coloring_ptr = nullptr;
    if (!coloring_path.empty()) {
      coloring = slurp(coloring_path);
      coloring_ptr = coloring.c_str();
    }
    return finish(Result(gridloc_locate(graph.c_str(), coloring_ptr, q, dim)),
                  out_path, svg_path);
  }
  if (family->parsed())
    return finish(Result(gridloc_columns_family(s, dim, nullptr)), out_path);
  if (embed->parsed()) {
    std::string graph = slurp(graph_path), part = slurp(partition_path);
    return finish(Result(gridloc_embed_columns(graph.c_str(), part.c_str())),
                  out_path, svg_path);
  }
  if (loc_cols->parsed()) {
    std::string graph = slurp(graph_path), part = slurp(partition_path);
    return finish(
        Result(gridloc_locate_columns(graph.c_str(), part.c_str(), dim)),
        out_path, svg_path);
  }
  if (mixed->parsed()) {
    std::string graph = slurp(graph_path);
    return finish(Result(gridloc_mixed_color(graph.c_str(), a, b)), out_path);
  }
  if (reduce->parsed()) {
    std::string graph = slurp(graph_path);
    return finish(Result(gridloc_reduce_cliques(graph.c_str(), a, b)),
                  out_path);
  }
  if (formula->parsed()) {
    std::string cnf = slurp(cnf_path);
    return finish(
        Result(gridloc_formula_graph(
            cnf.c_str(), variant.empty() ? nullptr : variant.c_str())),
        out_path);
  }
  if (proper->parsed()) {
    std::string graph = slurp(graph_path);
    return finish(Result(gridloc_proper(graph.c_str(), with_report ? 1 : 0)),
                  out_path, svg_path);
  }
  if (oracle->parsed()) {
    if (mode == "mixed" && random_count > 0) {
      // corpus mode: the exhaustive oracle against the backtracking solver
      Rng rng{seed};
      int agree = 0;
      for (long i = 0; i < random_count; ++i) {
        std::string graph =
            random_graph_json(rng, static_cast<int>(random_n), 1, 2);
        Result fast(gridloc_mixed_color(graph.c_str(), a, b));
        Result slow(gridloc_mixed_color_oracle(graph.c_str(), a, b));
        gridloc_status sf = gridloc_result_status(fast.get());
        gridloc_status ss = gridloc_result_status(slow.get());
        if (sf >= GRIDLOC_ERR_INPUT || ss >= GRIDLOC_ERR_INPUT) {
          std::cerr << "error: oracle run failed\n";
          return 2;
        }
        if (sf == ss) ++agree;
      }
      json report;
      report["instances"] = random_count;
      report["agreements"] = agree;
      std::string text = report.dump();
      if (out_path.empty())
        std::cout << text << "\n";
      else
        spill(out_path, text + "\n");
      return agree == random_count ? 0 : 1;
    }
    if (graph_path.empty()) {
      std::cerr << "error: oracle needs --graph or --random\n";
      return 2;
    }
    std::string graph = slurp(graph_path);
    if (mode == "mixed")
      return finish(Result(gridloc_mixed_color_oracle(graph.c_str(), a, b)),
                    out_path);
    if (mode == "min-gp")
      return finish(Result(gridloc_min_gp_bruteforce(graph.c_str(), box)),
                    out_path);
    if (mode == "chromatic")
      return finish(Result(gridloc_chromatic(graph.c_str())), out_path);
    std::cerr << "error: unknown oracle mode \"" << mode << "\"\n";
    return 2;
  }
  return 2;
}

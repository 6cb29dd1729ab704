// Command-line front end: validate, dist, curve, matrix, mds.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lmtt/error.hpp"
#include "lmtt/geometry.hpp"
#include "lmtt/io.hpp"
#include "lmtt/workbench.hpp"

namespace {

lmtt::MethodSpec method_spec(const std::string& method, std::size_t samples) {
  lmtt::MethodSpec spec;
  spec.method = method == "approx" ? lmtt::Method::approx : lmtt::Method::exact;
  spec.samples = samples;
  return spec;
}

// Writes to `path`, or stdout when it is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw lmtt::Error(lmtt::ErrorKind::Io, "cannot write " + path);
  write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labeled merge tree transform distance between embedded planar graphs"};
  app.require_subcommand(1);

  std::string graph_a;
  std::string graph_b;
  std::string method = "exact";
  std::size_t samples = 1000;
  std::string out_path;
  bool crossings = false;

  auto* validate = app.add_subcommand("validate", "Check a graph file");
  validate->add_option("graph", graph_a, "Graph JSON file")->required();
  validate->add_flag("--crossings", crossings, "Also reject crossing edges");

  auto* dist = app.add_subcommand("dist", "Distance between two graphs");
  dist->add_option("g1", graph_a, "First graph JSON file")->required();
  dist->add_option("g2", graph_b, "Second graph JSON file")->required();
  dist->add_option("--method", method, "exact or approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  dist->add_option("--samples", samples, "Sample count for approx")->check(CLI::Range(2, 100000000));

  std::size_t resolution = 16;
  auto* curve = app.add_subcommand("curve", "Sample the per-direction distance function");
  curve->add_option("g1", graph_a, "First graph JSON file")->required();
  curve->add_option("g2", graph_b, "Second graph JSON file")->required();
  curve->add_option("--resolution", resolution, "Interior samples per critical arc");
  curve->add_option("--out", out_path, "CSV output path (default stdout)");

  std::vector<std::string> inputs;
  std::size_t jobs = 1;
  auto* matrix = app.add_subcommand("matrix", "Pairwise distance matrix");
  matrix->add_option("inputs", inputs, "A directory of *.json graphs, or graph files")->required();
  matrix->add_option("--method", method, "exact or approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  matrix->add_option("--samples", samples, "Sample count for approx")->check(CLI::Range(2, 100000000));
  matrix->add_option("--out", out_path, "CSV output path (default stdout)");
  matrix->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string matrix_path;
  std::size_t dim = 2;
  auto* mds = app.add_subcommand("mds", "Classical MDS of a distance matrix CSV");
  mds->add_option("matrix", matrix_path, "Distance matrix CSV")->required();
  mds->add_option("--dim", dim, "Target dimension")->check(CLI::PositiveNumber);
  mds->add_option("--out", out_path, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      const auto g = lmtt::load_graph(graph_a, crossings ? lmtt::CrossingCheck::check
                                                         : lmtt::CrossingCheck::skip);
      fmt::print("ok: {} vertices, {} edges, {} extremal\n", g.vertex_count(), g.edge_count(),
                 lmtt::extremal_set(g).size());
    } else if (*dist) {
      const auto g1 = lmtt::load_graph(graph_a);
      const auto g2 = lmtt::load_graph(graph_b);
      const auto result = lmtt::compute_distance(g1, g2, method_spec(method, samples));
      fmt::print("distance={:.17g}\nmethod={}\n", result.distance, method);
      if (result.method == lmtt::Method::approx) {
        fmt::print("samples={}\nerror_bound={:.17g}\n", result.samples, result.error_bound);
      }
    } else if (*curve) {
      const auto g1 = lmtt::load_graph(graph_a);
      const auto g2 = lmtt::load_graph(graph_b);
      const auto samples_out = lmtt::distance_curve(g1, g2, resolution);
      emit(out_path, [&](std::ostream& os) { lmtt::write_curve_csv(os, samples_out); });
    } else if (*matrix) {
      const auto paths = lmtt::expand_graph_inputs(inputs);
      const auto dm = lmtt::pairwise_matrix(paths, method_spec(method, samples), jobs);
      emit(out_path, [&](std::ostream& os) { lmtt::write_matrix_csv(os, dm); });
    } else if (*mds) {
      std::ifstream in(matrix_path);
      if (!in) throw lmtt::Error(lmtt::ErrorKind::Io, "cannot open " + matrix_path);
      const auto dm = lmtt::read_matrix_csv(in, matrix_path);
      const auto coords = lmtt::classical_mds(dm, dim);
      emit(out_path, [&](std::ostream& os) { lmtt::write_mds_csv(os, coords); });
    }
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}

#include "lmtt/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "lmtt/error.hpp"
#include "lmtt/workbench.hpp"

namespace lmtt {

namespace {

using nlohmann::json;

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

[[noreturn]] void parse_fail(std::string_view origin, const std::string& what) {
  throw Error(ErrorKind::ParseError, fmt::format("{}: {}", origin, what));
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& cell, std::string_view origin, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    parse_fail(origin, fmt::format("line {}: '{}' is not a number", line, cell));
  }
}

}  // namespace

EmbeddedGraph parse_graph(std::string_view text, std::string_view origin, CrossingCheck crossings) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(origin, fmt::format("line {}: {}", line_of(text, e.byte), e.what()));
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    parse_fail(origin, "expected an object with \"vertices\" and \"edges\"");
  }
  const json& jv = doc["vertices"];
  const json& je = doc["edges"];
  if (!jv.is_array() || !je.is_array()) parse_fail(origin, "\"vertices\" and \"edges\" must be arrays");

  std::vector<Point2> vertices;
  vertices.reserve(jv.size());
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const json& p = jv[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      parse_fail(origin, fmt::format("vertex {} must be an [x, y] number pair", i));
    }
    vertices.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  std::vector<Edge> edges;
  edges.reserve(je.size());
  for (std::size_t i = 0; i < je.size(); ++i) {
    const json& e = je[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      parse_fail(origin, fmt::format("edge {} must be a [u, v] integer pair", i));
    }
    auto u = e[0].get<long long>();
    auto v = e[1].get<long long>();
    if (u < 0 || v < 0) {
      throw Error(ErrorKind::BadEdgeIndex, fmt::format("{}: edge {} has a negative index", origin, i));
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }

  EmbeddedGraph graph(std::move(vertices), std::move(edges));
  try {
    validate(graph, crossings);
  } catch (const Error& e) {
    throw Error(e.kind(), fmt::format("{}: {}", origin, e.message()));
  }
  return graph;
}

EmbeddedGraph load_graph(const std::filesystem::path& path, CrossingCheck crossings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, fmt::format("cannot open {}", path.string()));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_graph(text, path.string(), crossings);
}

std::string graph_to_json(const EmbeddedGraph& graph) {
  json vertices = json::array();
  for (Point2 p : graph.vertices()) vertices.push_back({p.x, p.y});
  json edges = json::array();
  for (Edge e : graph.edges()) edges.push_back({e.u, e.v});
  return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}}.dump();
}

std::vector<std::filesystem::path> expand_graph_inputs(std::span<const std::string> inputs) {
  namespace fs = std::filesystem;
  if (inputs.size() == 1 && fs::is_directory(inputs[0])) {
    std::vector<fs::path> out;
    for (const auto& entry : fs::directory_iterator(inputs[0])) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  return {inputs.begin(), inputs.end()};
}

void write_matrix_csv(std::ostream& out, const DistanceMatrix& matrix) {
  const std::size_t n = matrix.names.size();
  for (std::size_t i = 0; i < n; ++i) out << (i ? "," : "") << matrix.names[i];
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? "," : "") << fmt::format("{:.17g}", matrix.values(i, j));
    out << '\n';
  }
}

DistanceMatrix read_matrix_csv(std::istream& in, std::string_view origin) {
  std::string line;
  if (!std::getline(in, line)) parse_fail(origin, "empty matrix file");
  DistanceMatrix out;
  out.names = split_csv(line);
  const std::size_t n = out.names.size();
  out.values = SquareMatrix<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) parse_fail(origin, fmt::format("expected {} rows, found {}", n, i));
    auto cells = split_csv(line);
    if (cells.size() != n) {
      parse_fail(origin, fmt::format("line {}: expected {} values, found {}", i + 2, n, cells.size()));
    }
    for (std::size_t j = 0; j < n; ++j) out.values(i, j) = parse_number(cells[j], origin, i + 2);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out.values(i, i) != 0.0) parse_fail(origin, fmt::format("diagonal entry {} is not zero", i));
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(out.values(i, j) - out.values(j, i)) > 1e-9) {
        parse_fail(origin, fmt::format("matrix is not symmetric at ({}, {})", i, j));
      }
      if (out.values(i, j) < 0.0) parse_fail(origin, fmt::format("negative distance at ({}, {})", i, j));
    }
  }
  return out;
}

void write_curve_csv(std::ostream& out, std::span<const CurveSample> curve) {
  out << "omega,distance\n";
  for (const CurveSample& s : curve) out << fmt::format("{:.17g},{:.17g}\n", s.omega, s.distance);
}

void write_mds_csv(std::ostream& out, const EmbeddingCoords& coords) {
  const std::size_t dim = coords.coords.empty() ? 0 : coords.coords.front().size();
  out << "name";
  for (std::size_t k = 1; k <= dim; ++k) out << ",c" << k;
  out << '\n';
  for (std::size_t i = 0; i < coords.names.size(); ++i) {
    out << coords.names[i];
    for (double c : coords.coords[i]) out << fmt::format(",{:.17g}", c);
    out << '\n';
  }
}

}  // namespace lmtt

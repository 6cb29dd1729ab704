#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lmtt/geometry.hpp"

namespace lmtt {

struct DistanceMatrix;
struct EmbeddingCoords;
struct CurveSample;

/// Graph JSON: {"vertices": [[x, y], ...], "edges": [[u, v], ...]}, 0-based.
/// Validation failures are rethrown with `origin` in the message.
EmbeddedGraph parse_graph(std::string_view text, std::string_view origin = "<input>",
                          CrossingCheck crossings = CrossingCheck::skip);
EmbeddedGraph load_graph(const std::filesystem::path& path,
                         CrossingCheck crossings = CrossingCheck::skip);
std::string graph_to_json(const EmbeddedGraph& graph);

/// A single directory expands to its *.json files sorted by name; anything
/// else is taken as a list of files.
std::vector<std::filesystem::path> expand_graph_inputs(std::span<const std::string> inputs);

/// Header row of names, then the square body; 17 significant digits.
void write_matrix_csv(std::ostream& out, const DistanceMatrix& matrix);
DistanceMatrix read_matrix_csv(std::istream& in, std::string_view origin = "<input>");

/// Header `omega,distance`.
void write_curve_csv(std::ostream& out, std::span<const CurveSample> curve);

/// Header `name,c1,...,cd`.
void write_mds_csv(std::ostream& out, const EmbeddingCoords& coords);

}  // namespace lmtt

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lmtt/distance.hpp"
#include "lmtt/geometry.hpp"
#include "lmtt/matrix.hpp"

namespace lmtt {

struct MethodSpec {
  Method method = Method::exact;
  std::size_t samples = 1000;
};

LmttResult compute_distance(const EmbeddedGraph& g1, const EmbeddedGraph& g2,
                            const MethodSpec& spec);

struct DistanceMatrix {
  std::vector<std::string> names;
  SquareMatrix<double> values;
};

/// All unordered pairs, computed on up to `jobs` threads. Output does not
/// depend on scheduling.
DistanceMatrix pairwise_matrix(std::span<const std::string> names,
                               std::span<const EmbeddedGraph> graphs, const MethodSpec& spec,
                               std::size_t jobs = 1);

/// Loads every file first (any failure aborts the batch, naming the path);
/// names are file stems.
DistanceMatrix pairwise_matrix(std::span<const std::filesystem::path> paths,
                               const MethodSpec& spec, std::size_t jobs = 1);

struct EmbeddingCoords {
  std::vector<std::string> names;
  std::vector<std::vector<double>> coords;  // one `dim`-vector per item
};

/// Classical (Torgerson) MDS. Negative eigenvalues are clamped to zero and
/// each axis is flipped so its largest-magnitude coordinate is positive.
/// Throws Error(DimensionTooLarge) if dim > size - 1.
EmbeddingCoords classical_mds(const DistanceMatrix& matrix, std::size_t dim = 2);

struct CurveSample {
  double omega = 0.0;
  double distance = 0.0;
};

/// F sampled at `resolution` interior points of every critical arc plus both
/// arc ends (offset inward), sorted by omega in [0, 2pi).
std::vector<CurveSample> distance_curve(const EmbeddedGraph& g1, const EmbeddedGraph& g2,
                                        std::size_t resolution);

}  // namespace lmtt

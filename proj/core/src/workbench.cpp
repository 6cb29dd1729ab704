#include "lmtt/workbench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "lmtt/directions.hpp"
#include "lmtt/error.hpp"
#include "lmtt/io.hpp"
#include "lmtt/pairing.hpp"

namespace lmtt {

LmttResult compute_distance(const EmbeddedGraph& g1, const EmbeddedGraph& g2,
                            const MethodSpec& spec) {
  return spec.method == Method::exact ? lmtt_exact(g1, g2) : lmtt_approx(g1, g2, spec.samples);
}

DistanceMatrix pairwise_matrix(std::span<const std::string> names,
                               std::span<const EmbeddedGraph> graphs, const MethodSpec& spec,
                               std::size_t jobs) {
  if (names.size() != graphs.size()) {
    throw Error(ErrorKind::InvalidArgument, "names and graphs differ in length");
  }
  const std::size_t n = graphs.size();
  DistanceMatrix out{{names.begin(), names.end()}, SquareMatrix<double>(n)};

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> results(pairs.size(), 0.0);
  std::vector<std::exception_ptr> failures(pairs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) {
      try {
        results[k] = compute_distance(graphs[pairs[k].first], graphs[pairs[k].second], spec).distance;
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(pairs.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    out.values(i, j) = results[k];
    out.values(j, i) = results[k];
  }
  return out;
}

DistanceMatrix pairwise_matrix(std::span<const std::filesystem::path> paths, const MethodSpec& spec,
                               std::size_t jobs) {
  if (paths.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two graph files");
  std::vector<std::string> names;
  std::vector<EmbeddedGraph> graphs;
  for (const auto& path : paths) {
    names.push_back(path.stem().string());
    graphs.push_back(load_graph(path));
  }
  return pairwise_matrix(names, graphs, spec, jobs);
}

std::vector<CurveSample> distance_curve(const EmbeddedGraph& g1, const EmbeddedGraph& g2,
                                        std::size_t resolution) {
  const PairLabeling pairing = build_pair_labeling(g1, g2);
  const DirectionPartition arcs = critical_partition(pairing.g1, pairing.g2);
  std::vector<CurveSample> out;
  for (std::size_t k = 0; k < arcs.arc_count(); ++k) {
    const Arc arc = arcs.arc(k);
    const double inset = std::min(1e-9, 1e-3 * arc.length());
    std::vector<double> angles{arc.start + inset};
    for (std::size_t j = 1; j <= resolution; ++j) {
      angles.push_back(arc.start + arc.length() * static_cast<double>(j) /
                                       static_cast<double>(resolution + 1));
    }
    angles.push_back(arc.end - inset);
    for (double w : angles) {
      const double omega = normalize_angle(w);
      out.push_back({omega, direction_distance(pairing, omega)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CurveSample& a, const CurveSample& b) { return a.omega < b.omega; });
  return out;
}

}  // namespace lmtt

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "lmtt/error.hpp"
#include "lmtt/workbench.hpp"

namespace lmtt {

EmbeddingCoords classical_mds(const DistanceMatrix& matrix, std::size_t dim) {
  const std::size_t n = matrix.values.size();
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "MDS dimension must be at least 1");
  if (n == 0 || dim > n - 1) {
    throw Error(ErrorKind::DimensionTooLarge,
                "cannot embed " + std::to_string(n) + " items in " + std::to_string(dim) +
                    " dimensions");
  }
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd sq(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      double d = matrix.values(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      sq(i, j) = d * d;
    }
  }
  // B = -1/2 J D^2 J with J the centering matrix.
  const Eigen::VectorXd row_mean = sq.rowwise().mean();
  const Eigen::RowVectorXd col_mean = sq.colwise().mean();
  const double grand = sq.mean();
  Eigen::MatrixXd b = sq;
  b.colwise() -= row_mean;
  b.rowwise() -= col_mean;
  b.array() += grand;
  b *= -0.5;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidArgument, "eigendecomposition did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  EmbeddingCoords out{matrix.names, std::vector<std::vector<double>>(n, std::vector<double>(dim))};
  for (std::size_t k = 0; k < dim; ++k) {
    const Eigen::Index col = size - 1 - static_cast<Eigen::Index>(k);
    const double scale = std::sqrt(std::max(values(col), 0.0));
    Eigen::VectorXd axis = vectors.col(col) * scale;
    Eigen::Index peak = 0;
    for (Eigen::Index i = 1; i < size; ++i) {
      if (std::abs(axis(i)) > std::abs(axis(peak))) peak = i;
    }
    if (axis(peak) < 0.0) axis = -axis;
    for (Eigen::Index i = 0; i < size; ++i) out.coords[static_cast<std::size_t>(i)][k] = axis(i) + 0.0;
  }
  return out;
}

}  // namespace lmtt

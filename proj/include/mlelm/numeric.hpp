#pragma once

#include <optional>

#include <Eigen/Core>

#include "mlelm/errors.hpp"

namespace mlelm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Moore-Penrose pseudoinverse via thin SVD. Singular values at or below the
// tolerance count as zero. Without an explicit tolerance the usual
// max(rows, cols) * sigma_max * machine-epsilon cutoff applies, which keeps
// rank-deficient inputs well behaved.
Matrix pseudoinverse(const Matrix& a, std::optional<double> rank_tolerance = std::nullopt);

// Minimum-norm least-squares solution of H * beta = Y, computed as
// pinv(H) * Y. Requires H.rows() == Y.rows().
Matrix solve_output_weights(const Matrix& hidden_outputs, const Matrix& targets,
                            std::optional<double> rank_tolerance = std::nullopt);

}  // namespace mlelm

#include "mlelm/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SVD>

namespace mlelm {

namespace {

void require_finite(const Matrix& a, const char* what) {
    if (!a.allFinite()) {
        throw NumericError(std::string(what) + " contains non-finite entries");
    }
}

}  // namespace

Matrix pseudoinverse(const Matrix& a, std::optional<double> rank_tolerance) {
    if (a.rows() == 0 || a.cols() == 0) {
        throw InvalidArgument("pseudoinverse: matrix must be nonempty");
    }
    require_finite(a, "pseudoinverse: input");
    if (rank_tolerance && (!std::isfinite(*rank_tolerance) || *rank_tolerance < 0.0)) {
        throw InvalidArgument("pseudoinverse: rank tolerance must be a nonnegative real");
    }

    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw NumericError("pseudoinverse: SVD failed to converge");
    }

    const Vector& sigma = svd.singularValues();
    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    const double tol = rank_tolerance.value_or(static_cast<double>(std::max(a.rows(), a.cols())) *
                                               sigma_max * std::numeric_limits<double>::epsilon());

    Vector inverted = Vector::Zero(sigma.size());
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > tol) {
            inverted(i) = 1.0 / sigma(i);
        }
    }
    return svd.matrixV() * inverted.asDiagonal() * svd.matrixU().transpose();
}

Matrix solve_output_weights(const Matrix& hidden_outputs, const Matrix& targets,
                            std::optional<double> rank_tolerance) {
    if (hidden_outputs.rows() != targets.rows()) {
        throw InvalidArgument("solve_output_weights: row counts differ (" +
                              std::to_string(hidden_outputs.rows()) + " vs " +
                              std::to_string(targets.rows()) + ")");
    }
    require_finite(targets, "solve_output_weights: targets");
    return pseudoinverse(hidden_outputs, rank_tolerance) * targets;
}

}  // namespace mlelm

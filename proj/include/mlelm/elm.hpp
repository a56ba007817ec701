#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mlelm/labels.hpp"
#include "mlelm/numeric.hpp"

namespace mlelm {

enum class Activation { sigmoid, tanh, sine, hardlimit };

std::string_view activation_name(Activation activation);
Activation activation_from_name(std::string_view name);

// Scalar activation value; the matrix kernels use vectorized equivalents.
double activation_value(Activation activation, double z);

// Random hidden layer: N' units, weights and biases drawn i.i.d. uniform on
// [init_low, init_high) from a generator derived from (seed, purpose tag).
struct HiddenLayerConfig {
    std::size_t hidden_count = 0;  // N', required
    Activation activation = Activation::sigmoid;
    double init_low = -1.0;
    double init_high = 1.0;
    std::uint64_t seed = 0;
};

struct HiddenLayer {
    Matrix input_weights;  // N' x n
    Vector biases;         // N'
};

// Where a model's random layer came from; persisted alongside the weights.
struct ModelProvenance {
    std::uint64_t seed = 0;
    double init_low = -1.0;
    double init_high = 1.0;
};

// A frozen trained classifier. Immutable once constructed; safe to share
// across threads for prediction.
class ElmModel {
public:
    ElmModel(Matrix input_weights, Vector biases, Matrix output_weights, Activation activation,
             ModelProvenance provenance);

    Eigen::Index hidden_count() const noexcept { return input_weights_.rows(); }
    Eigen::Index feature_count() const noexcept { return input_weights_.cols(); }
    Eigen::Index label_count() const noexcept { return output_weights_.cols(); }

    const Matrix& input_weights() const noexcept { return input_weights_; }
    const Vector& biases() const noexcept { return biases_; }
    const Matrix& output_weights() const noexcept { return output_weights_; }
    Activation activation() const noexcept { return activation_; }
    const ModelProvenance& provenance() const noexcept { return provenance_; }

private:
    Matrix input_weights_;   // N' x n
    Vector biases_;          // N'
    Matrix output_weights_;  // N' x L (beta)
    Activation activation_;
    ModelProvenance provenance_;
};

// Deterministic by seed: the same config and feature count always produce
// bit-identical weights and biases.
HiddenLayer init_hidden_layer(const HiddenLayerConfig& config, std::size_t feature_count);

// H: entry (k, i) = g(w_i . x_k + b_i) for instance k and hidden unit i.
Matrix hidden_output_matrix(const Matrix& input_weights, const Vector& biases, Activation activation,
                            const Matrix& inputs);
Matrix hidden_output_matrix(const ElmModel& model, const Matrix& inputs);

// Builds the random hidden layer, encodes the targets bipolar, and solves
// the output weights as the minimum-norm least-squares solution.
ElmModel train(const Matrix& inputs, std::span<const LabelSet> labels, const HiddenLayerConfig& config,
               std::optional<double> rank_tolerance = std::nullopt);

// Raw scores H(X) * beta, one row per instance.
Matrix predict_raw(const ElmModel& model, const Matrix& inputs);

// Thresholded prediction: decode_bipolar(bipolar_step(predict_raw(...))).
std::vector<LabelSet> predict_labels(const ElmModel& model, const Matrix& inputs);

}  // namespace mlelm

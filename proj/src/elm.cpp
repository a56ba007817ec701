#include "mlelm/elm.hpp"

#include <cmath>
#include <string>

#include "mlelm/rng.hpp"

namespace mlelm {

std::string_view activation_name(Activation activation) {
    switch (activation) {
        case Activation::sigmoid: return "sigmoid";
        case Activation::tanh: return "tanh";
        case Activation::sine: return "sine";
        case Activation::hardlimit: return "hardlimit";
    }
    throw InvalidArgument("activation_name: unknown activation");
}

Activation activation_from_name(std::string_view name) {
    if (name == "sigmoid") return Activation::sigmoid;
    if (name == "tanh") return Activation::tanh;
    if (name == "sine") return Activation::sine;
    if (name == "hardlimit") return Activation::hardlimit;
    throw InvalidArgument("unknown activation '" + std::string(name) +
                          "' (expected sigmoid, tanh, sine or hardlimit)");
}

double activation_value(Activation activation, double z) {
    switch (activation) {
        case Activation::sigmoid: return 1.0 / (1.0 + std::exp(-z));
        case Activation::tanh: return std::tanh(z);
        case Activation::sine: return std::sin(z);
        case Activation::hardlimit: return z >= 0.0 ? 1.0 : 0.0;
    }
    throw InvalidArgument("activation_value: unknown activation");
}

ElmModel::ElmModel(Matrix input_weights, Vector biases, Matrix output_weights, Activation activation,
                   ModelProvenance provenance)
    : input_weights_(std::move(input_weights)),
      biases_(std::move(biases)),
      output_weights_(std::move(output_weights)),
      activation_(activation),
      provenance_(provenance) {
    if (biases_.size() != input_weights_.rows() || output_weights_.rows() != input_weights_.rows()) {
        throw InvalidArgument("ElmModel: inconsistent shapes between weights and biases");
    }
    if (!input_weights_.allFinite() || !biases_.allFinite() || !output_weights_.allFinite()) {
        throw NumericError("ElmModel: non-finite parameters");
    }
}

namespace {

void check_config(const HiddenLayerConfig& config) {
    if (config.hidden_count == 0) {
        throw InvalidArgument("hidden layer: hidden_count must be at least 1");
    }
    if (!std::isfinite(config.init_low) || !std::isfinite(config.init_high) ||
        !(config.init_low < config.init_high)) {
        throw InvalidArgument("hidden layer: init range is empty");
    }
}

}  // namespace

HiddenLayer init_hidden_layer(const HiddenLayerConfig& config, std::size_t feature_count) {
    check_config(config);
    if (feature_count == 0) {
        throw InvalidArgument("hidden layer: feature count must be at least 1");
    }
    const auto rows = static_cast<Eigen::Index>(config.hidden_count);
    const auto cols = static_cast<Eigen::Index>(feature_count);

    HiddenLayer layer;
    layer.input_weights.resize(rows, cols);
    auto weight_stream = rng::derive_stream(config.seed, "elm.input_weights");
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            layer.input_weights(i, j) = rng::next_in(weight_stream, config.init_low, config.init_high);
        }
    }

    layer.biases.resize(rows);
    auto bias_stream = rng::derive_stream(config.seed, "elm.biases");
    for (Eigen::Index i = 0; i < rows; ++i) {
        layer.biases(i) = rng::next_in(bias_stream, config.init_low, config.init_high);
    }
    return layer;
}

Matrix hidden_output_matrix(const Matrix& input_weights, const Vector& biases, Activation activation,
                            const Matrix& inputs) {
    if (inputs.cols() != input_weights.cols()) {
        throw InvalidArgument("hidden_output_matrix: input has " + std::to_string(inputs.cols()) +
                              " features, layer expects " + std::to_string(input_weights.cols()));
    }
    Matrix z = inputs * input_weights.transpose();
    z.rowwise() += biases.transpose();
    Matrix h;
    switch (activation) {
        case Activation::sigmoid:
            h = ((-z.array()).exp() + 1.0).inverse().matrix();
            break;
        case Activation::tanh:
            h = z.array().tanh().matrix();
            break;
        case Activation::sine:
            h = z.array().sin().matrix();
            break;
        case Activation::hardlimit:
            h = (z.array() >= 0.0).cast<double>().matrix();
            break;
    }
    if (!h.allFinite()) {
        throw NumericError("hidden_output_matrix: non-finite activation output");
    }
    return h;
}

Matrix hidden_output_matrix(const ElmModel& model, const Matrix& inputs) {
    return hidden_output_matrix(model.input_weights(), model.biases(), model.activation(), inputs);
}

ElmModel train(const Matrix& inputs, std::span<const LabelSet> labels, const HiddenLayerConfig& config,
               std::optional<double> rank_tolerance) {
    check_config(config);
    if (inputs.rows() == 0) {
        throw InvalidArgument("train: empty training set");
    }
    if (inputs.cols() == 0) {
        throw InvalidArgument("train: training set has no features");
    }
    if (static_cast<std::size_t>(inputs.rows()) != labels.size()) {
        throw InvalidArgument("train: " + std::to_string(inputs.rows()) + " instances but " +
                              std::to_string(labels.size()) + " label sets");
    }
    if (!inputs.allFinite()) {
        throw NumericError("train: features contain non-finite values");
    }

    const std::uint32_t label_count = labels[0].label_space_size();
    const Matrix targets = encode_bipolar(labels, label_count).to_real();

    HiddenLayer layer = init_hidden_layer(config, static_cast<std::size_t>(inputs.cols()));
    const Matrix hidden = hidden_output_matrix(layer.input_weights, layer.biases, config.activation, inputs);
    Matrix beta = solve_output_weights(hidden, targets, rank_tolerance);

    return ElmModel(std::move(layer.input_weights), std::move(layer.biases), std::move(beta),
                    config.activation, ModelProvenance{config.seed, config.init_low, config.init_high});
}

Matrix predict_raw(const ElmModel& model, const Matrix& inputs) {
    if (inputs.cols() != model.feature_count()) {
        throw InvalidArgument("predict: input has " + std::to_string(inputs.cols()) +
                              " features, model expects " + std::to_string(model.feature_count()));
    }
    if (inputs.rows() == 0) {
        return Matrix(0, model.label_count());
    }
    return hidden_output_matrix(model, inputs) * model.output_weights();
}

std::vector<LabelSet> predict_labels(const ElmModel& model, const Matrix& inputs) {
    return decode_bipolar(bipolar_step(predict_raw(model, inputs)));
}

}  // namespace mlelm

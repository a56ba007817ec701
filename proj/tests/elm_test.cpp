#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "mlelm/elm.hpp"
#include "mlelm/metrics.hpp"
#include "mlelm/model_io.hpp"
#include "support/generators.hpp"
#include "support/temp_dir.hpp"

using namespace mlelm;

namespace {

bool bitwise_equal(const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

// Linear-threshold labels over random inputs; the generating rule is the
// ground truth the trained model must recover.
struct SyntheticTask {
    Matrix inputs;
    std::vector<LabelSet> labels;
};

SyntheticTask make_task(std::mt19937_64& gen, std::size_t rows, std::size_t features,
                        std::uint32_t label_count) {
    SyntheticTask task;
    task.inputs = generators::random_matrix(gen, static_cast<Eigen::Index>(rows),
                                            static_cast<Eigen::Index>(features));
    const Matrix directions = generators::random_matrix(gen, static_cast<Eigen::Index>(label_count),
                                                        static_cast<Eigen::Index>(features));
    std::vector<std::uint32_t> members;
    for (std::size_t i = 0; i < rows; ++i) {
        members.clear();
        for (std::uint32_t j = 0; j < label_count; ++j) {
            if (directions.row(j).dot(task.inputs.row(static_cast<Eigen::Index>(i))) > 0.0) {
                members.push_back(j);
            }
        }
        task.labels.emplace_back(members, label_count);
    }
    return task;
}

}  // namespace

TEST_SUITE("elm") {

TEST_CASE("activation names round-trip and reject unknowns") {
    for (Activation a : {Activation::sigmoid, Activation::tanh, Activation::sine, Activation::hardlimit}) {
        CHECK(activation_from_name(activation_name(a)) == a);
    }
    CHECK_THROWS_AS(activation_from_name("relu"), InvalidArgument);
}

TEST_CASE("hidden layer initialization is deterministic by seed") {
    HiddenLayerConfig config;
    config.hidden_count = 16;
    config.seed = 99;
    const HiddenLayer first = init_hidden_layer(config, 5);
    const HiddenLayer second = init_hidden_layer(config, 5);
    CHECK(bitwise_equal(first.input_weights, second.input_weights));
    CHECK((first.biases.array() == second.biases.array()).all());

    config.seed = 100;
    const HiddenLayer third = init_hidden_layer(config, 5);
    CHECK_FALSE(bitwise_equal(first.input_weights, third.input_weights));
}

TEST_CASE("hidden layer shapes follow the config") {
    HiddenLayerConfig config;
    config.hidden_count = 3;
    const HiddenLayer layer = init_hidden_layer(config, 2);
    CHECK(layer.input_weights.rows() == 3);
    CHECK(layer.input_weights.cols() == 2);
    CHECK(layer.biases.size() == 3);
}

TEST_CASE("hidden layer draws are uniform on the init range") {
    HiddenLayerConfig config;
    config.hidden_count = 1000;
    config.seed = 4242;
    const HiddenLayer layer = init_hidden_layer(config, 100);  // 1e5 weight draws
    CHECK(layer.input_weights.minCoeff() >= -1.0);
    CHECK(layer.input_weights.maxCoeff() <= 1.0);
    CHECK(std::abs(layer.input_weights.mean()) <= 0.02);
    CHECK(layer.biases.minCoeff() >= -1.0);
    CHECK(layer.biases.maxCoeff() <= 1.0);
}

TEST_CASE("hidden layer config validation") {
    HiddenLayerConfig config;
    config.hidden_count = 0;
    CHECK_THROWS_AS(init_hidden_layer(config, 3), InvalidArgument);
    config.hidden_count = 2;
    config.init_low = 1.0;
    config.init_high = 1.0;
    CHECK_THROWS_AS(init_hidden_layer(config, 3), InvalidArgument);
}

TEST_CASE("hidden output matrix matches scalar evaluation") {
    Matrix weights(1, 2);
    weights << 1.0, 0.0;
    Vector biases(1);
    biases << 1.0;
    Matrix inputs(1, 2);
    inputs << 2.0, 5.0;
    const Matrix h = hidden_output_matrix(weights, biases, Activation::sigmoid, inputs);
    CHECK(h(0, 0) == doctest::Approx(1.0 / (1.0 + std::exp(-3.0))).epsilon(1e-12));
    CHECK(h(0, 0) == doctest::Approx(0.95257).epsilon(1e-4));
}

TEST_CASE("zero weights and biases pin the activation at its origin value") {
    const Matrix weights = Matrix::Zero(4, 3);
    const Vector biases = Vector::Zero(4);
    std::mt19937_64 gen(5);
    const Matrix inputs = generators::random_matrix(gen, 6, 3);
    CHECK((hidden_output_matrix(weights, biases, Activation::sigmoid, inputs).array() == 0.5).all());
    CHECK((hidden_output_matrix(weights, biases, Activation::tanh, inputs).array() == 0.0).all());
}

TEST_CASE("hidden output matrix rejects feature mismatches") {
    const Matrix weights = Matrix::Zero(2, 3);
    const Vector biases = Vector::Zero(2);
    CHECK_THROWS_AS(hidden_output_matrix(weights, biases, Activation::sigmoid, Matrix::Zero(1, 4)),
                    InvalidArgument);
}

TEST_CASE("training is deterministic end to end") {
    std::mt19937_64 gen(800);
    const SyntheticTask task = make_task(gen, 40, 6, 3);
    HiddenLayerConfig config;
    config.hidden_count = 25;
    config.seed = 31;
    const ElmModel first = train(task.inputs, task.labels, config);
    const ElmModel second = train(task.inputs, task.labels, config);
    CHECK(bitwise_equal(first.input_weights(), second.input_weights()));
    CHECK(bitwise_equal(first.output_weights(), second.output_weights()));
    CHECK(bitwise_equal(predict_raw(first, task.inputs), predict_raw(second, task.inputs)));
    CHECK(predict_labels(first, task.inputs) == predict_labels(second, task.inputs));
}

TEST_CASE("training input validation") {
    HiddenLayerConfig config;
    config.hidden_count = 4;
    const std::vector<LabelSet> labels{LabelSet({0}, 2)};
    CHECK_THROWS_AS(train(Matrix(0, 3), {}, config), InvalidArgument);
    CHECK_THROWS_AS(train(Matrix::Ones(2, 3), labels, config), InvalidArgument);  // length mismatch
    const std::vector<LabelSet> inconsistent{LabelSet({0}, 2), LabelSet({0}, 3)};
    CHECK_THROWS_AS(train(Matrix::Ones(2, 3), inconsistent, config), InvalidArgument);
    Matrix bad = Matrix::Ones(1, 3);
    bad(0, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(train(bad, labels, config), NumericError);
}

TEST_CASE("constant labels are reproduced on the training inputs") {
    std::mt19937_64 gen(900);
    const Matrix inputs = generators::random_matrix(gen, 30, 4);
    const std::vector<LabelSet> labels(30, LabelSet({0}, 2));
    HiddenLayerConfig config;
    config.hidden_count = 10;
    config.seed = 7;
    const ElmModel model = train(inputs, labels, config);
    const auto predicted = predict_labels(model, inputs);
    for (const LabelSet& set : predicted) {
        CHECK(set == LabelSet({0}, 2));
    }
}

TEST_CASE("square hidden matrix interpolates the training targets") {
    std::mt19937_64 gen(901);
    const SyntheticTask task = make_task(gen, 20, 5, 3);
    HiddenLayerConfig config;
    config.hidden_count = 20;  // N' = N
    config.seed = 3;
    const ElmModel model = train(task.inputs, task.labels, config);
    const Matrix targets = encode_bipolar(task.labels, 3).to_real();
    const Matrix hidden = hidden_output_matrix(model, task.inputs);
    const double residual = (hidden * model.output_weights() - targets).norm();
    CHECK(residual <= 1e-6 * targets.norm());
    // Raw outputs sit near the bipolar targets, so thresholding recovers them.
    CHECK(predict_labels(model, task.inputs) == task.labels);
}

TEST_CASE("predict_raw handles empty batches and duplicated rows") {
    std::mt19937_64 gen(902);
    const SyntheticTask task = make_task(gen, 25, 4, 2);
    HiddenLayerConfig config;
    config.hidden_count = 12;
    const ElmModel model = train(task.inputs, task.labels, config);

    const Matrix empty = predict_raw(model, Matrix(0, 4));
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 2);

    Matrix repeated(5, 4);
    for (int i = 0; i < 5; ++i) repeated.row(i) = task.inputs.row(3);
    const Matrix raw = predict_raw(model, repeated);
    for (int i = 1; i < 5; ++i) {
        CHECK((raw.row(i).array() == raw.row(0).array()).all());
    }

    CHECK_THROWS_AS(predict_raw(model, Matrix::Zero(1, 5)), InvalidArgument);
}

TEST_CASE("predict_labels is exactly decode(step(raw))") {
    std::mt19937_64 gen(903);
    const SyntheticTask task = make_task(gen, 30, 5, 4);
    HiddenLayerConfig config;
    config.hidden_count = 15;
    const ElmModel model = train(task.inputs, task.labels, config);
    const auto composed = decode_bipolar(bipolar_step(predict_raw(model, task.inputs)));
    CHECK(predict_labels(model, task.inputs) == composed);
}

TEST_CASE("hand-built model reads signs, with zero counting as present") {
    // Hardlimit at the origin gives h = 1, so raw output equals beta's row.
    Matrix weights = Matrix::Zero(1, 2);
    Vector biases = Vector::Zero(1);
    Matrix beta(1, 3);
    beta << 2.0, -3.0, 0.5;
    const ElmModel model(weights, biases, beta, Activation::hardlimit, {});
    const auto sets = predict_labels(model, Matrix::Zero(1, 2));
    CHECK(sets[0] == LabelSet({0, 2}, 3));

    // tanh at the origin gives h = 0, so the raw output is exactly zero
    // and the tie-at-zero rule marks every label present.
    Matrix zero_beta(1, 3);
    zero_beta << 1.0, 1.0, 1.0;
    const ElmModel zero_model(Matrix::Zero(1, 2), Vector::Zero(1), zero_beta, Activation::tanh, {});
    const Matrix raw = predict_raw(zero_model, Matrix::Zero(1, 2));
    CHECK((raw.array() == 0.0).all());
    CHECK(predict_labels(zero_model, Matrix::Zero(1, 2))[0] == LabelSet({0, 1, 2}, 3));
}

TEST_CASE("output shapes hold for random valid configurations") {
    std::mt19937_64 gen(904);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t hidden = 1 + gen() % 40;
        const std::size_t features = 1 + gen() % 10;
        const std::size_t rows = 1 + gen() % 30;
        const std::uint32_t label_count = 1 + static_cast<std::uint32_t>(gen() % 6);
        const SyntheticTask task = make_task(gen, rows, features, label_count);
        HiddenLayerConfig config;
        config.hidden_count = hidden;
        config.seed = gen();
        const ElmModel model = train(task.inputs, task.labels, config);
        CHECK(model.input_weights().rows() == static_cast<Eigen::Index>(hidden));
        CHECK(model.input_weights().cols() == static_cast<Eigen::Index>(features));
        CHECK(model.output_weights().rows() == static_cast<Eigen::Index>(hidden));
        CHECK(model.output_weights().cols() == static_cast<Eigen::Index>(label_count));
        const Matrix raw = predict_raw(model, task.inputs);
        CHECK(raw.rows() == static_cast<Eigen::Index>(rows));
        CHECK(raw.cols() == static_cast<Eigen::Index>(label_count));
        CHECK(hidden_output_matrix(model, task.inputs).cols() == static_cast<Eigen::Index>(hidden));
    }
}

TEST_CASE("single-label tasks resolve by argmax in the interpolating regime") {
    std::mt19937_64 gen(905);
    const std::size_t rows = 30;
    const std::uint32_t label_count = 4;
    const Matrix inputs = generators::random_matrix(gen, rows, 8);
    std::vector<LabelSet> labels;
    std::vector<std::uint32_t> truth;
    for (std::size_t i = 0; i < rows; ++i) {
        const auto label = static_cast<std::uint32_t>(gen() % label_count);
        truth.push_back(label);
        labels.emplace_back(std::vector<std::uint32_t>{label}, label_count);
    }
    HiddenLayerConfig config;
    config.hidden_count = rows;  // N' = N
    config.seed = 17;
    const ElmModel model = train(inputs, labels, config);
    const Matrix raw = predict_raw(model, inputs);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        Eigen::Index argmax = 0;
        raw.row(static_cast<Eigen::Index>(i)).maxCoeff(&argmax);
        if (static_cast<std::uint32_t>(argmax) == truth[i]) ++correct;
    }
    CHECK(static_cast<double>(correct) >= 0.95 * static_cast<double>(rows));
    for (const LabelSet& set : predict_labels(model, inputs)) {
        CHECK(set.size() <= label_count);
    }
}

TEST_CASE("training residual shrinks with hidden capacity on seed average") {
    std::mt19937_64 gen(906);
    const SyntheticTask task = make_task(gen, 60, 6, 3);
    const Matrix targets = encode_bipolar(task.labels, 3).to_real();
    std::vector<double> mean_residuals;
    for (std::size_t hidden : {5u, 20u, 80u}) {
        double total = 0.0;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            HiddenLayerConfig config;
            config.hidden_count = hidden;
            config.seed = seed;
            const ElmModel model = train(task.inputs, task.labels, config);
            total += (hidden_output_matrix(model, task.inputs) * model.output_weights() - targets).norm();
        }
        mean_residuals.push_back(total / 10.0);
    }
    CHECK(mean_residuals[1] <= mean_residuals[0] + 1e-9);
    CHECK(mean_residuals[2] <= mean_residuals[1] + 1e-9);
}

TEST_CASE("model files round-trip bit for bit") {
    std::mt19937_64 gen(907);
    const SyntheticTask task = make_task(gen, 35, 5, 3);
    HiddenLayerConfig config;
    config.hidden_count = 18;
    config.seed = 12345;
    config.init_low = -0.5;
    config.init_high = 0.75;
    const ElmModel model = train(task.inputs, task.labels, config);

    testing_support::TempDir dir("model_io");
    const auto path = dir.file("model.mlelm");
    save_model(model, path);
    const ElmModel loaded = load_model(path);

    CHECK(loaded.activation() == model.activation());
    CHECK(loaded.provenance().seed == 12345);
    CHECK(loaded.provenance().init_low == -0.5);
    CHECK(loaded.provenance().init_high == 0.75);
    CHECK(bitwise_equal(loaded.input_weights(), model.input_weights()));
    CHECK(bitwise_equal(loaded.output_weights(), model.output_weights()));
    const Matrix probe = generators::random_matrix(gen, 7, 5);
    CHECK(bitwise_equal(predict_raw(loaded, probe), predict_raw(model, probe)));
}

TEST_CASE("model file corruption is reported, not crashed on") {
    std::mt19937_64 gen(908);
    const SyntheticTask task = make_task(gen, 10, 3, 2);
    HiddenLayerConfig config;
    config.hidden_count = 4;
    const ElmModel model = train(task.inputs, task.labels, config);

    testing_support::TempDir dir("model_bad");
    const auto path = dir.file("model.mlelm");
    save_model(model, path);

    // Truncate.
    {
        std::ifstream in(path, std::ios::binary);
        std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::ofstream out(dir.file("truncated.mlelm"), std::ios::binary);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size() / 2));
    }
    CHECK_THROWS_AS(load_model(dir.file("truncated.mlelm")), ParseError);

    // Corrupt the magic.
    {
        std::ifstream in(path, std::ios::binary);
        std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        bytes[0] = 'X';
        std::ofstream out(dir.file("badmagic.mlelm"), std::ios::binary);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    }
    CHECK_THROWS_AS(load_model(dir.file("badmagic.mlelm")), ParseError);

    CHECK_THROWS_AS(load_model(dir.file("missing.mlelm")), IoError);
}

}  // TEST_SUITE

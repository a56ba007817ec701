#include "mlelm.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlelm/dataset.hpp"
#include "mlelm/elm.hpp"
#include "mlelm/errors.hpp"
#include "mlelm/metrics.hpp"
#include "mlelm/model_io.hpp"
#include "mlelm/predictions.hpp"

struct mlelm_manifest {
    mlelm::DatasetManifest value;
};

struct mlelm_dataset {
    mlelm::MultiLabelDataset value;
};

struct mlelm_model {
    mlelm::ElmModel value;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string& message) { g_last_error = message; }

// Runs fn, translating exceptions into status codes.
template <typename Fn>
mlelm_status guarded(Fn&& fn) {
    try {
        fn();
        return MLELM_OK;
    } catch (const mlelm::InvalidArgument& e) {
        set_error(e.what());
        return MLELM_ERR_INVALID_ARGUMENT;
    } catch (const mlelm::ParseError& e) {
        set_error(e.what());
        return MLELM_ERR_PARSE;
    } catch (const mlelm::IoError& e) {
        set_error(e.what());
        return MLELM_ERR_IO;
    } catch (const mlelm::NumericError& e) {
        set_error(e.what());
        return MLELM_ERR_NUMERIC;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return MLELM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return MLELM_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return MLELM_ERR_INTERNAL;
    }
}

mlelm_status require(bool condition, const char* message) {
    if (condition) {
        return MLELM_OK;
    }
    set_error(message);
    return MLELM_ERR_INVALID_ARGUMENT;
}

mlelm::Activation to_core(mlelm_activation activation) {
    switch (activation) {
        case MLELM_ACT_SIGMOID: return mlelm::Activation::sigmoid;
        case MLELM_ACT_TANH: return mlelm::Activation::tanh;
        case MLELM_ACT_SINE: return mlelm::Activation::sine;
        case MLELM_ACT_HARDLIMIT: return mlelm::Activation::hardlimit;
    }
    throw mlelm::InvalidArgument("unknown activation code " + std::to_string(activation));
}

mlelm_activation from_core(mlelm::Activation activation) {
    switch (activation) {
        case mlelm::Activation::sigmoid: return MLELM_ACT_SIGMOID;
        case mlelm::Activation::tanh: return MLELM_ACT_TANH;
        case mlelm::Activation::sine: return MLELM_ACT_SINE;
        case mlelm::Activation::hardlimit: return MLELM_ACT_HARDLIMIT;
    }
    return MLELM_ACT_SIGMOID;
}

mlelm::Matrix map_row_major(const double* data, size_t rows, size_t cols) {
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    return Eigen::Map<const RowMajor>(data, static_cast<Eigen::Index>(rows),
                                      static_cast<Eigen::Index>(cols));
}

std::vector<mlelm::LabelSet> flags_to_sets(const uint8_t* flags, size_t rows, size_t label_count) {
    if (label_count == 0) {
        throw mlelm::InvalidArgument("label count must be positive");
    }
    std::vector<mlelm::LabelSet> sets;
    sets.reserve(rows);
    std::vector<std::uint32_t> members;
    for (size_t i = 0; i < rows; ++i) {
        members.clear();
        for (size_t j = 0; j < label_count; ++j) {
            const uint8_t flag = flags[i * label_count + j];
            if (flag == 1) {
                members.push_back(static_cast<std::uint32_t>(j));
            } else if (flag != 0) {
                throw mlelm::InvalidArgument("flag at instance " + std::to_string(i) + ", label " +
                                             std::to_string(j) + " is " + std::to_string(flag) +
                                             ", expected 0 or 1");
            }
        }
        sets.emplace_back(members, static_cast<std::uint32_t>(label_count));
    }
    return sets;
}

void report_to_c(const mlelm::MetricReport& report, mlelm_metric_report* out) {
    out->hamming_loss = report.hamming_loss;
    out->accuracy = report.accuracy;
    out->precision = report.precision;
    out->recall = report.recall;
    out->f1 = report.f1;
    out->instance_count = report.instance_count;
    out->label_count = report.label_count;
}

}  // namespace

extern "C" {

const char* mlelm_version(void) { return "0.1.0"; }

const char* mlelm_last_error(void) { return g_last_error.c_str(); }

/* --- manifests ------------------------------------------------------------- */

mlelm_status mlelm_manifest_create(mlelm_manifest** out) {
    if (auto rc = require(out != nullptr, "manifest_create: out is NULL"); rc != MLELM_OK) return rc;
    return guarded([&] { *out = new mlelm_manifest{}; });
}

void mlelm_manifest_free(mlelm_manifest* manifest) { delete manifest; }

mlelm_status mlelm_manifest_from_file(const char* path, mlelm_manifest** out) {
    if (auto rc = require(path != nullptr && out != nullptr, "manifest_from_file: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] { *out = new mlelm_manifest{mlelm::manifest_from_file(path)}; });
}

mlelm_status mlelm_manifest_from_json(const char* json_text, mlelm_manifest** out) {
    if (auto rc = require(json_text != nullptr && out != nullptr, "manifest_from_json: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] { *out = new mlelm_manifest{mlelm::manifest_from_json(json_text)}; });
}

mlelm_status mlelm_manifest_set_paths(mlelm_manifest* manifest, const char* train_path,
                                      const char* test_path) {
    if (auto rc = require(manifest != nullptr && train_path != nullptr && test_path != nullptr,
                          "manifest_set_paths: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        manifest->value.train_path = train_path;
        manifest->value.test_path = test_path;
    });
}

mlelm_status mlelm_manifest_set_labels_trailing(mlelm_manifest* manifest, size_t count) {
    if (auto rc = require(manifest != nullptr, "manifest_set_labels_trailing: NULL manifest");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] { manifest->value.labels = mlelm::LabelSpec::trailing(count); });
}

mlelm_status mlelm_manifest_set_labels_names(mlelm_manifest* manifest, const char* const* names,
                                             size_t count) {
    if (auto rc = require(manifest != nullptr && (names != nullptr || count == 0),
                          "manifest_set_labels_names: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        std::vector<std::string> list;
        list.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (names[i] == nullptr) {
                throw mlelm::InvalidArgument("label name " + std::to_string(i) + " is NULL");
            }
            list.emplace_back(names[i]);
        }
        manifest->value.labels = mlelm::LabelSpec::names(std::move(list));
    });
}

mlelm_status mlelm_manifest_set_labels_xml(mlelm_manifest* manifest, const char* xml_path) {
    if (auto rc = require(manifest != nullptr && xml_path != nullptr,
                          "manifest_set_labels_xml: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] { manifest->value.labels = mlelm::LabelSpec::xml_file(xml_path); });
}

mlelm_status mlelm_manifest_set_scaling(mlelm_manifest* manifest, mlelm_scaling mode) {
    if (auto rc = require(manifest != nullptr, "manifest_set_scaling: NULL manifest"); rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        switch (mode) {
            case MLELM_SCALE_NONE: manifest->value.scaling = mlelm::ScalingMode::none; return;
            case MLELM_SCALE_MINMAX_01: manifest->value.scaling = mlelm::ScalingMode::minmax_01; return;
            case MLELM_SCALE_STANDARDIZE: manifest->value.scaling = mlelm::ScalingMode::standardize; return;
        }
        throw mlelm::InvalidArgument("unknown scaling code " + std::to_string(mode));
    });
}

/* --- datasets ---------------------------------------------------------------- */

mlelm_status mlelm_load_dataset(const mlelm_manifest* manifest, mlelm_dataset** train_out,
                                mlelm_dataset** test_out) {
    if (auto rc = require(manifest != nullptr && train_out != nullptr && test_out != nullptr,
                          "load_dataset: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        auto [train, test] = mlelm::load_dataset(manifest->value);
        *train_out = new mlelm_dataset{std::move(train)};
        *test_out = new mlelm_dataset{std::move(test)};
    });
}

void mlelm_dataset_free(mlelm_dataset* dataset) { delete dataset; }

size_t mlelm_dataset_rows(const mlelm_dataset* dataset) {
    return dataset == nullptr ? 0 : static_cast<size_t>(dataset->value.rows());
}

size_t mlelm_dataset_feature_count(const mlelm_dataset* dataset) {
    return dataset == nullptr ? 0 : static_cast<size_t>(dataset->value.feature_count());
}

size_t mlelm_dataset_label_count(const mlelm_dataset* dataset) {
    return dataset == nullptr ? 0 : dataset->value.label_count();
}

const char* mlelm_dataset_feature_name(const mlelm_dataset* dataset, size_t index) {
    if (dataset == nullptr || index >= dataset->value.feature_names().size()) {
        return nullptr;
    }
    return dataset->value.feature_names()[index].c_str();
}

const char* mlelm_dataset_label_name(const mlelm_dataset* dataset, size_t index) {
    if (dataset == nullptr || index >= dataset->value.label_names().size()) {
        return nullptr;
    }
    return dataset->value.label_names()[index].c_str();
}

mlelm_status mlelm_dataset_copy_features(const mlelm_dataset* dataset, double* out) {
    if (auto rc = require(dataset != nullptr && out != nullptr, "dataset_copy_features: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        const mlelm::Matrix& features = dataset->value.features();
        for (Eigen::Index i = 0; i < features.rows(); ++i) {
            for (Eigen::Index j = 0; j < features.cols(); ++j) {
                out[static_cast<size_t>(i) * static_cast<size_t>(features.cols()) +
                    static_cast<size_t>(j)] = features(i, j);
            }
        }
    });
}

mlelm_status mlelm_dataset_copy_labels(const mlelm_dataset* dataset, uint8_t* out) {
    if (auto rc = require(dataset != nullptr && out != nullptr, "dataset_copy_labels: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        const size_t label_count = dataset->value.label_count();
        const auto& labels = dataset->value.labels();
        for (size_t i = 0; i < labels.size(); ++i) {
            for (size_t j = 0; j < label_count; ++j) {
                out[i * label_count + j] =
                    labels[i].contains(static_cast<std::uint32_t>(j)) ? uint8_t{1} : uint8_t{0};
            }
        }
    });
}

mlelm_status mlelm_dataset_stats(const mlelm_dataset* dataset, mlelm_stats* out) {
    if (auto rc = require(dataset != nullptr && out != nullptr, "dataset_stats: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        const mlelm::DatasetStats stats = dataset->value.stats();
        out->cardinality = stats.cardinality;
        out->density = stats.density;
        out->instance_count = stats.instance_count;
        out->label_count = stats.label_count;
    });
}

mlelm_status mlelm_dataset_write_truth(const mlelm_dataset* dataset, const char* path) {
    if (auto rc = require(dataset != nullptr && path != nullptr, "dataset_write_truth: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded(
        [&] { mlelm::write_predictions(path, dataset->value.labels(), dataset->value.label_names()); });
}

/* --- training and prediction -------------------------------------------------- */

void mlelm_train_options_init(mlelm_train_options* options) {
    if (options == nullptr) {
        return;
    }
    options->hidden_count = 0;
    options->activation = MLELM_ACT_SIGMOID;
    options->init_low = -1.0;
    options->init_high = 1.0;
    options->seed = 0;
    options->rank_tolerance = -1.0;
}

mlelm_status mlelm_train(const mlelm_dataset* dataset, const mlelm_train_options* options,
                         mlelm_model** out) {
    if (auto rc = require(dataset != nullptr && options != nullptr && out != nullptr,
                          "train: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        mlelm::HiddenLayerConfig config;
        config.hidden_count = options->hidden_count;
        config.activation = to_core(options->activation);
        config.init_low = options->init_low;
        config.init_high = options->init_high;
        config.seed = options->seed;
        const std::optional<double> tolerance =
            options->rank_tolerance < 0.0 ? std::nullopt : std::optional<double>(options->rank_tolerance);
        *out = new mlelm_model{
            mlelm::train(dataset->value.features(), dataset->value.labels(), config, tolerance)};
    });
}

void mlelm_model_free(mlelm_model* model) { delete model; }

size_t mlelm_model_hidden_count(const mlelm_model* model) {
    return model == nullptr ? 0 : static_cast<size_t>(model->value.hidden_count());
}

size_t mlelm_model_feature_count(const mlelm_model* model) {
    return model == nullptr ? 0 : static_cast<size_t>(model->value.feature_count());
}

size_t mlelm_model_label_count(const mlelm_model* model) {
    return model == nullptr ? 0 : static_cast<size_t>(model->value.label_count());
}

mlelm_activation mlelm_model_activation(const mlelm_model* model) {
    return model == nullptr ? MLELM_ACT_SIGMOID : from_core(model->value.activation());
}

uint64_t mlelm_model_seed(const mlelm_model* model) {
    return model == nullptr ? 0 : model->value.provenance().seed;
}

mlelm_status mlelm_model_init_range(const mlelm_model* model, double* low_out, double* high_out) {
    if (auto rc = require(model != nullptr && low_out != nullptr && high_out != nullptr,
                          "model_init_range: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    *low_out = model->value.provenance().init_low;
    *high_out = model->value.provenance().init_high;
    return MLELM_OK;
}

mlelm_status mlelm_predict_raw(const mlelm_model* model, const double* features, size_t rows,
                               size_t cols, double* raw_out) {
    if (auto rc = require(model != nullptr && (features != nullptr || rows == 0) && raw_out != nullptr,
                          "predict_raw: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        const mlelm::Matrix inputs =
            rows == 0 ? mlelm::Matrix(0, static_cast<Eigen::Index>(cols)) : map_row_major(features, rows, cols);
        const mlelm::Matrix raw = predict_raw(model->value, inputs);
        for (Eigen::Index i = 0; i < raw.rows(); ++i) {
            for (Eigen::Index j = 0; j < raw.cols(); ++j) {
                raw_out[static_cast<size_t>(i) * static_cast<size_t>(raw.cols()) +
                        static_cast<size_t>(j)] = raw(i, j);
            }
        }
    });
}

mlelm_status mlelm_predict_labels(const mlelm_model* model, const double* features, size_t rows,
                                  size_t cols, uint8_t* flags_out) {
    if (auto rc = require(model != nullptr && (features != nullptr || rows == 0) && flags_out != nullptr,
                          "predict_labels: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        const mlelm::Matrix inputs =
            rows == 0 ? mlelm::Matrix(0, static_cast<Eigen::Index>(cols)) : map_row_major(features, rows, cols);
        const std::vector<mlelm::LabelSet> sets = predict_labels(model->value, inputs);
        const auto label_count = static_cast<size_t>(model->value.label_count());
        for (size_t i = 0; i < sets.size(); ++i) {
            for (size_t j = 0; j < label_count; ++j) {
                flags_out[i * label_count + j] =
                    sets[i].contains(static_cast<std::uint32_t>(j)) ? uint8_t{1} : uint8_t{0};
            }
        }
    });
}

mlelm_status mlelm_predict_dataset(const mlelm_model* model, const mlelm_dataset* dataset,
                                   uint8_t* flags_out) {
    if (auto rc = require(model != nullptr && dataset != nullptr && flags_out != nullptr,
                          "predict_dataset: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        const std::vector<mlelm::LabelSet> sets = predict_labels(model->value, dataset->value.features());
        const auto label_count = static_cast<size_t>(model->value.label_count());
        for (size_t i = 0; i < sets.size(); ++i) {
            for (size_t j = 0; j < label_count; ++j) {
                flags_out[i * label_count + j] =
                    sets[i].contains(static_cast<std::uint32_t>(j)) ? uint8_t{1} : uint8_t{0};
            }
        }
    });
}

/* --- model files ----------------------------------------------------------------- */

mlelm_status mlelm_model_save(const mlelm_model* model, const char* path) {
    if (auto rc = require(model != nullptr && path != nullptr, "model_save: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] { mlelm::save_model(model->value, path); });
}

mlelm_status mlelm_model_load(const char* path, mlelm_model** out) {
    if (auto rc = require(path != nullptr && out != nullptr, "model_load: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] { *out = new mlelm_model{mlelm::load_model(path)}; });
}

/* --- evaluation ------------------------------------------------------------------- */

mlelm_status mlelm_evaluate_flags(const uint8_t* truth, const uint8_t* predicted, size_t rows,
                                  size_t label_count, mlelm_metric_report* out) {
    if (auto rc = require(truth != nullptr && predicted != nullptr && out != nullptr,
                          "evaluate_flags: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        const auto truth_sets = flags_to_sets(truth, rows, label_count);
        const auto predicted_sets = flags_to_sets(predicted, rows, label_count);
        report_to_c(mlelm::evaluate(truth_sets, predicted_sets), out);
    });
}

mlelm_status mlelm_evaluate_dataset(const mlelm_dataset* dataset, const uint8_t* predicted,
                                    mlelm_metric_report* out) {
    if (auto rc = require(dataset != nullptr && predicted != nullptr && out != nullptr,
                          "evaluate_dataset: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        const auto predicted_sets = flags_to_sets(predicted, static_cast<size_t>(dataset->value.rows()),
                                                  dataset->value.label_count());
        report_to_c(mlelm::evaluate(dataset->value.labels(), predicted_sets), out);
    });
}

/* --- prediction files ----------------------------------------------------------------- */

mlelm_status mlelm_predictions_write(const char* path, const uint8_t* flags, size_t rows,
                                     size_t label_count, const char* const* label_names) {
    if (auto rc = require(path != nullptr && (flags != nullptr || rows == 0) && label_names != nullptr,
                          "predictions_write: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] {
        std::vector<std::string> names;
        names.reserve(label_count);
        for (size_t j = 0; j < label_count; ++j) {
            if (label_names[j] == nullptr) {
                throw mlelm::InvalidArgument("label name " + std::to_string(j) + " is NULL");
            }
            names.emplace_back(label_names[j]);
        }
        const auto sets = flags_to_sets(flags, rows, label_count);
        mlelm::write_predictions(path, sets, names);
    });
}

mlelm_status mlelm_score_files(const char* truth_path, const char* predictions_path,
                               mlelm_metric_report* out) {
    if (auto rc = require(truth_path != nullptr && predictions_path != nullptr && out != nullptr,
                          "score_files: NULL argument");
        rc != MLELM_OK) {
        return rc;
    }
    return guarded([&] { report_to_c(mlelm::score_files(truth_path, predictions_path), out); });
}

}  // extern "C"

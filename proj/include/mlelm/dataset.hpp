#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlelm/arff.hpp"
#include "mlelm/labels.hpp"
#include "mlelm/metrics.hpp"
#include "mlelm/numeric.hpp"

namespace mlelm {

// Designates which header attributes are labels: the trailing k attributes,
// an explicit name list, or an XML file listing label names (one <label>
// element per label, as Mulan-style repositories ship).
class LabelSpec {
public:
    enum class Kind { trailing, names, xml_file };

    static LabelSpec trailing(std::size_t count);
    static LabelSpec names(std::vector<std::string> names);
    static LabelSpec xml_file(std::filesystem::path path);

    Kind kind() const noexcept { return kind_; }
    std::size_t trailing_count() const noexcept { return trailing_count_; }
    const std::vector<std::string>& label_names() const noexcept { return names_; }
    const std::filesystem::path& xml_path() const noexcept { return xml_path_; }

private:
    LabelSpec() = default;

    Kind kind_ = Kind::trailing;
    std::size_t trailing_count_ = 0;
    std::vector<std::string> names_;
    std::filesystem::path xml_path_;
};

enum class ScalingMode { none, minmax_01, standardize };

std::string_view scaling_mode_name(ScalingMode mode);
ScalingMode scaling_mode_from_name(std::string_view name);

// Per-feature transform parameters fitted on the training split:
// (min, max) for minmax_01, (mean, stddev) for standardize. Columns whose
// range or spread collapses to zero map to 0.
struct ScalingRecord {
    ScalingMode mode = ScalingMode::none;
    std::vector<double> param_a;
    std::vector<double> param_b;
};

class MultiLabelDataset {
public:
    MultiLabelDataset(Matrix features, std::vector<LabelSet> labels, std::uint32_t label_count,
                      std::vector<std::string> feature_names, std::vector<std::string> label_names,
                      ScalingRecord scaling);

    Eigen::Index rows() const noexcept { return features_.rows(); }
    Eigen::Index feature_count() const noexcept { return features_.cols(); }
    std::uint32_t label_count() const noexcept { return label_count_; }

    const Matrix& features() const noexcept { return features_; }
    const std::vector<LabelSet>& labels() const noexcept { return labels_; }
    const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
    const std::vector<std::string>& label_names() const noexcept { return label_names_; }
    const ScalingRecord& scaling() const noexcept { return scaling_; }

    DatasetStats stats() const { return dataset_stats(labels_, label_count_); }

private:
    Matrix features_;  // N x n, finite
    std::vector<LabelSet> labels_;
    std::uint32_t label_count_;
    std::vector<std::string> feature_names_;
    std::vector<std::string> label_names_;
    ScalingRecord scaling_;
};

struct DatasetManifest {
    std::filesystem::path train_path;
    std::filesystem::path test_path;
    LabelSpec labels = LabelSpec::trailing(1);
    ScalingMode scaling = ScalingMode::minmax_01;
};

// Manifest JSON:
//   {
//     "train": "path/to/train.arff",
//     "test": "path/to/test.arff",
//     "labels": {"trailing": 6} | {"names": ["a", "b"]} | {"xml": "labels.xml"},
//     "scaling": "none" | "minmax_01" | "standardize"   (default minmax_01)
//   }
// Relative paths resolve against base_dir (for manifest_from_file, the
// manifest's own directory).
DatasetManifest manifest_from_json(const std::string& json_text,
                                   const std::filesystem::path& base_dir = {});
DatasetManifest manifest_from_file(const std::filesystem::path& path);

// Label names from a Mulan-style XML file: a <labels> root whose <label>
// children carry name attributes.
std::vector<std::string> read_label_xml(const std::filesystem::path& path);

// Single-document ingestion. Numeric and {0,1}-valued nominal attributes
// become features; other nominal attributes are one-hot expanded; label
// attributes must be 0/1-valued. Missing feature values are imputed with
// this document's own column means. No scaling is applied.
MultiLabelDataset dataset_from_document(const arff::Document& document, const LabelSpec& spec);
MultiLabelDataset parse_arff(const std::string& text, const LabelSpec& spec);

// Loads a train/test pair with identical schemas. Missing features in both
// splits are imputed with the training column means, and scaling parameters
// are fitted on the training split only.
std::pair<MultiLabelDataset, MultiLabelDataset> load_dataset(const DatasetManifest& manifest);

}  // namespace mlelm

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mlelm/labels.hpp"
#include "mlelm/metrics.hpp"

namespace mlelm {

struct PredictionFile {
    std::vector<std::string> label_names;
    std::vector<LabelSet> labels;
};

// Prediction file format: a header row with the label names, then one row
// per instance of comma-separated 0/1 flags in label order. Reading a
// written file recovers the label sets exactly.
void write_predictions(const std::filesystem::path& path, std::span<const LabelSet> predicted,
                       std::span<const std::string> label_names);

PredictionFile read_predictions(const std::filesystem::path& path);

// Reads a truth file and a predictions file (same format) and evaluates the
// five metrics. The two files must agree on label columns and row count.
MetricReport score_files(const std::filesystem::path& truth_path,
                         const std::filesystem::path& predictions_path);

}  // namespace mlelm

#pragma once

#include <cstddef>
#include <span>

#include "mlelm/labels.hpp"

namespace mlelm {

// The five example-based evaluation metrics of one run, all in [0, 1].
struct MetricReport {
    double hamming_loss = 0.0;
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t instance_count = 0;
    std::size_t label_count = 0;
};

// Mean labels per instance (cardinality) and cardinality / L (density).
struct DatasetStats {
    double cardinality = 0.0;
    double density = 0.0;
    std::size_t instance_count = 0;
    std::size_t label_count = 0;
};

// Each metric averages a per-instance term over all instances, in instance
// order. Conventions when a per-instance denominator vanishes: an instance
// whose truth and prediction are both empty contributes 1 to accuracy,
// precision, recall and f1; an instance where only the denominator set is
// empty contributes 0.

// Mean fraction of label positions where prediction and truth disagree.
double hamming_loss(std::span<const LabelSet> truth, std::span<const LabelSet> predicted);

// Mean Jaccard overlap |Z ∩ Y| / |Z ∪ Y|.
double accuracy(std::span<const LabelSet> truth, std::span<const LabelSet> predicted);

// Mean |Z ∩ Y| / |Z| where Z is the predicted set.
double precision(std::span<const LabelSet> truth, std::span<const LabelSet> predicted);

// Mean |Z ∩ Y| / |Y| where Y is the true set.
double recall(std::span<const LabelSet> truth, std::span<const LabelSet> predicted);

// Mean Dice overlap 2|Z ∩ Y| / (|Z| + |Y|).
double f1(std::span<const LabelSet> truth, std::span<const LabelSet> predicted);

MetricReport evaluate(std::span<const LabelSet> truth, std::span<const LabelSet> predicted);

DatasetStats dataset_stats(std::span<const LabelSet> labels, std::uint32_t label_count);

}  // namespace mlelm

#include "mlelm/metrics.hpp"

#include <string>

namespace mlelm {

namespace {

std::uint32_t check_aligned(std::span<const LabelSet> truth, std::span<const LabelSet> predicted) {
    if (truth.size() != predicted.size()) {
        throw InvalidArgument("metrics: truth has " + std::to_string(truth.size()) +
                              " instances, predictions have " + std::to_string(predicted.size()));
    }
    if (truth.empty()) {
        throw InvalidArgument("metrics: no instances to evaluate");
    }
    const std::uint32_t label_count = truth[0].label_space_size();
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i].label_space_size() != label_count || predicted[i].label_space_size() != label_count) {
            throw InvalidArgument("metrics: instance " + std::to_string(i) +
                                  " has a mismatched label space size");
        }
    }
    return label_count;
}

std::size_t intersection_size(const LabelSet& a, const LabelSet& b) {
    const auto& av = a.members();
    const auto& bv = b.members();
    std::size_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < av.size() && j < bv.size()) {
        if (av[i] < bv[j]) {
            ++i;
        } else if (bv[j] < av[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

double hamming_loss(std::span<const LabelSet> truth, std::span<const LabelSet> predicted) {
    const std::uint32_t label_count = check_aligned(truth, predicted);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const std::size_t inter = intersection_size(truth[i], predicted[i]);
        const std::size_t sym_diff = truth[i].size() + predicted[i].size() - 2 * inter;
        sum += static_cast<double>(sym_diff) / static_cast<double>(label_count);
    }
    return sum / static_cast<double>(truth.size());
}

double accuracy(std::span<const LabelSet> truth, std::span<const LabelSet> predicted) {
    check_aligned(truth, predicted);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const std::size_t inter = intersection_size(truth[i], predicted[i]);
        const std::size_t uni = truth[i].size() + predicted[i].size() - inter;
        sum += uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
    }
    return sum / static_cast<double>(truth.size());
}

double precision(std::span<const LabelSet> truth, std::span<const LabelSet> predicted) {
    check_aligned(truth, predicted);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (predicted[i].size() == 0) {
            sum += truth[i].size() == 0 ? 1.0 : 0.0;
        } else {
            sum += static_cast<double>(intersection_size(truth[i], predicted[i])) /
                   static_cast<double>(predicted[i].size());
        }
    }
    return sum / static_cast<double>(truth.size());
}

double recall(std::span<const LabelSet> truth, std::span<const LabelSet> predicted) {
    check_aligned(truth, predicted);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i].size() == 0) {
            sum += predicted[i].size() == 0 ? 1.0 : 0.0;
        } else {
            sum += static_cast<double>(intersection_size(truth[i], predicted[i])) /
                   static_cast<double>(truth[i].size());
        }
    }
    return sum / static_cast<double>(truth.size());
}

double f1(std::span<const LabelSet> truth, std::span<const LabelSet> predicted) {
    check_aligned(truth, predicted);
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const std::size_t denom = truth[i].size() + predicted[i].size();
        if (denom == 0) {
            sum += 1.0;
        } else {
            sum += 2.0 * static_cast<double>(intersection_size(truth[i], predicted[i])) /
                   static_cast<double>(denom);
        }
    }
    return sum / static_cast<double>(truth.size());
}

MetricReport evaluate(std::span<const LabelSet> truth, std::span<const LabelSet> predicted) {
    const std::uint32_t label_count = check_aligned(truth, predicted);
    MetricReport report;
    report.hamming_loss = hamming_loss(truth, predicted);
    report.accuracy = accuracy(truth, predicted);
    report.precision = precision(truth, predicted);
    report.recall = recall(truth, predicted);
    report.f1 = f1(truth, predicted);
    report.instance_count = truth.size();
    report.label_count = label_count;
    return report;
}

DatasetStats dataset_stats(std::span<const LabelSet> labels, std::uint32_t label_count) {
    if (labels.empty()) {
        throw InvalidArgument("dataset_stats: no instances");
    }
    if (label_count == 0) {
        throw InvalidArgument("dataset_stats: label count must be positive");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].label_space_size() != label_count) {
            throw InvalidArgument("dataset_stats: instance " + std::to_string(i) +
                                  " has a mismatched label space size");
        }
    }
    double total = 0.0;
    for (const LabelSet& set : labels) {
        total += static_cast<double>(set.size());
    }
    DatasetStats stats;
    stats.cardinality = total / static_cast<double>(labels.size());
    stats.density = stats.cardinality / static_cast<double>(label_count);
    stats.instance_count = labels.size();
    stats.label_count = label_count;
    return stats;
}

}  // namespace mlelm

#include <doctest.h>

#include <random>

#include "mlelm/metrics.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mlelm;

namespace {

std::vector<LabelSet> one(const LabelSet& set) { return {set}; }

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("hand-computed single instance, L = 4") {
    // truth {0,1}, predicted {1,2}: one hit, two misses.
    const auto truth = one(LabelSet({0, 1}, 4));
    const auto predicted = one(LabelSet({1, 2}, 4));
    CHECK(hamming_loss(truth, predicted) == 0.5);
    CHECK(accuracy(truth, predicted) == doctest::Approx(1.0 / 3.0));
    CHECK(precision(truth, predicted) == 0.5);
    CHECK(recall(truth, predicted) == 0.5);
    CHECK(f1(truth, predicted) == 0.5);
}

TEST_CASE("perfect prediction scores the extremes") {
    std::mt19937_64 gen(11);
    auto sets = generators::to_label_sets(generators::random_set_list(gen, 40, 9), 9);
    // Both-empty instances are covered by the empty-set convention below.
    const MetricReport report = evaluate(sets, sets);
    CHECK(report.hamming_loss == 0.0);
    CHECK(report.accuracy == 1.0);
    CHECK(report.precision == 1.0);
    CHECK(report.recall == 1.0);
    CHECK(report.f1 == 1.0);
    CHECK(report.instance_count == 40);
    CHECK(report.label_count == 9);
}

TEST_CASE("maximal disagreement drives hamming loss to one") {
    const auto truth = one(LabelSet::empty(3));
    const auto predicted = one(LabelSet({0, 1, 2}, 3));
    CHECK(hamming_loss(truth, predicted) == 1.0);
}

TEST_CASE("empty-set conventions") {
    const auto both_empty = one(LabelSet::empty(3));
    CHECK(accuracy(both_empty, both_empty) == 1.0);
    CHECK(precision(both_empty, both_empty) == 1.0);
    CHECK(recall(both_empty, both_empty) == 1.0);
    CHECK(f1(both_empty, both_empty) == 1.0);

    const auto truth_only = one(LabelSet({0}, 3));
    const auto empty = one(LabelSet::empty(3));
    CHECK(precision(truth_only, empty) == 0.0);  // empty prediction, nonempty truth
    CHECK(recall(empty, truth_only) == 0.0);     // empty truth, nonempty prediction
}

TEST_CASE("no-false-positive and no-false-negative extremes") {
    const std::vector<LabelSet> truth{LabelSet({0, 1, 2}, 5), LabelSet({1, 3}, 5)};
    const std::vector<LabelSet> subset{LabelSet({0, 2}, 5), LabelSet({1}, 5)};
    CHECK(precision(truth, subset) == 1.0);  // predictions within truth
    CHECK(recall(subset, truth) == 1.0);     // truth within predictions
}

TEST_CASE("recall is precision with the arguments swapped") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t label_count = 1 + static_cast<std::uint32_t>(gen() % 12);
        const auto a = generators::to_label_sets(
            generators::random_set_list(gen, 1 + gen() % 30, label_count), label_count);
        auto b = generators::to_label_sets(generators::random_set_list(gen, a.size(), label_count),
                                           label_count);
        CHECK(recall(a, b) == precision(b, a));
    }
}

TEST_CASE("implementation matches the set-based oracle bit for bit") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t label_count = 1 + static_cast<std::uint32_t>(gen() % 16);
        const std::size_t rows = 1 + gen() % 200;
        const auto truth_sets = generators::random_set_list(gen, rows, label_count);
        const auto predicted_sets = generators::random_set_list(gen, rows, label_count);
        const auto truth = generators::to_label_sets(truth_sets, label_count);
        const auto predicted = generators::to_label_sets(predicted_sets, label_count);
        const oracles::Scores expected = oracles::score(truth_sets, predicted_sets, label_count);
        CHECK(hamming_loss(truth, predicted) == expected.hamming_loss);
        CHECK(accuracy(truth, predicted) == expected.accuracy);
        CHECK(precision(truth, predicted) == expected.precision);
        CHECK(recall(truth, predicted) == expected.recall);
        CHECK(f1(truth, predicted) == expected.f1);
    }
}

TEST_CASE("all metrics stay in the unit interval and accuracy never exceeds f1") {
    std::mt19937_64 gen(14);
    for (int trial = 0; trial < 120; ++trial) {
        const std::uint32_t label_count = 1 + static_cast<std::uint32_t>(gen() % 32);
        const std::size_t rows = 1 + gen() % 500;
        const auto truth = generators::to_label_sets(
            generators::random_set_list(gen, rows, label_count), label_count);
        const auto predicted = generators::to_label_sets(
            generators::random_set_list(gen, rows, label_count), label_count);
        const MetricReport report = evaluate(truth, predicted);
        for (double value : {report.hamming_loss, report.accuracy, report.precision, report.recall,
                             report.f1}) {
            CHECK(value >= 0.0);
            CHECK(value <= 1.0);
        }
        // Jaccard <= Dice per instance, so the averages order the same way.
        CHECK(report.accuracy <= report.f1 + 1e-15);
    }
}

TEST_CASE("metric preconditions") {
    const auto a = one(LabelSet({0}, 3));
    const std::vector<LabelSet> empty_list;
    CHECK_THROWS_AS(hamming_loss(a, empty_list), InvalidArgument);
    CHECK_THROWS_AS(hamming_loss(empty_list, empty_list), InvalidArgument);
    const auto mismatched = one(LabelSet({0}, 4));
    CHECK_THROWS_WITH_AS(accuracy(a, mismatched), doctest::Contains("instance 0"), InvalidArgument);
}

TEST_CASE("dataset stats from a hand-computed example") {
    const std::vector<LabelSet> labels{LabelSet({0}, 3), LabelSet({0, 1}, 3), LabelSet({1, 2}, 3)};
    const DatasetStats stats = dataset_stats(labels, 3);
    CHECK(stats.cardinality == 5.0 / 3.0);
    CHECK(stats.density == 5.0 / 3.0 / 3.0);
    CHECK(stats.instance_count == 3);
    CHECK(stats.label_count == 3);
}

TEST_CASE("single-label data has cardinality exactly one") {
    std::mt19937_64 gen(15);
    std::vector<LabelSet> labels;
    for (int i = 0; i < 64; ++i) {
        labels.emplace_back(std::vector<std::uint32_t>{static_cast<std::uint32_t>(gen() % 6)}, 6u);
    }
    const DatasetStats stats = dataset_stats(labels, 6);
    CHECK(stats.cardinality == 1.0);
}

TEST_CASE("density times label count recovers cardinality") {
    std::mt19937_64 gen(16);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t label_count = 1 + static_cast<std::uint32_t>(gen() % 24);
        const auto labels = generators::to_label_sets(
            generators::random_set_list(gen, 1 + gen() % 100, label_count), label_count);
        const DatasetStats stats = dataset_stats(labels, label_count);
        CHECK(stats.density * static_cast<double>(label_count) ==
              doctest::Approx(stats.cardinality).epsilon(1e-12));
    }
}

TEST_CASE("dataset_stats rejects empty input") {
    CHECK_THROWS_AS(dataset_stats(std::vector<LabelSet>{}, 3), InvalidArgument);
}

}  // TEST_SUITE

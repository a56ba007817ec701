#include <doctest.h>

#include <random>
#include <vector>

#include "mlelm/labels.hpp"
#include "support/generators.hpp"

using namespace mlelm;

TEST_SUITE("labels") {

TEST_CASE("label set normalizes and validates members") {
    const LabelSet set({2, 0, 2}, 4);
    CHECK(set.members() == std::vector<std::uint32_t>{0, 2});
    CHECK(set.size() == 2);
    CHECK(set.contains(0));
    CHECK(set.contains(2));
    CHECK_FALSE(set.contains(1));

    CHECK_THROWS_AS(LabelSet({4}, 4), InvalidArgument);
    CHECK_THROWS_AS(LabelSet({0}, 0), InvalidArgument);
}

TEST_CASE("encode_bipolar matches the definition") {
    const std::vector<LabelSet> labels{LabelSet({0}, 3), LabelSet({0, 2}, 3)};
    const LabelMatrix m = encode_bipolar(labels, 3);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 1) == -1);
    CHECK(m(0, 2) == -1);
    CHECK(m(1, 0) == 1);
    CHECK(m(1, 1) == -1);
    CHECK(m(1, 2) == 1);
}

TEST_CASE("encode_bipolar handles empty and full sets") {
    const std::vector<LabelSet> empty{LabelSet::empty(2)};
    const LabelMatrix e = encode_bipolar(empty, 2);
    CHECK(e(0, 0) == -1);
    CHECK(e(0, 1) == -1);

    const std::vector<LabelSet> full{LabelSet({0, 1, 2}, 3)};
    const LabelMatrix f = encode_bipolar(full, 3);
    CHECK(f(0, 0) == 1);
    CHECK(f(0, 1) == 1);
    CHECK(f(0, 2) == 1);
}

TEST_CASE("encode_bipolar rejects mismatched label spaces naming the instance") {
    const std::vector<LabelSet> labels{LabelSet({0}, 3), LabelSet({0}, 4)};
    CHECK_THROWS_WITH_AS(encode_bipolar(labels, 3),
                         doctest::Contains("instance 1"), InvalidArgument);
}

TEST_CASE("decode_bipolar inverts the encoding") {
    LabelMatrix::Storage values(1, 3);
    values << 1, -1, -1;
    const auto sets = decode_bipolar(LabelMatrix(std::move(values), Polarity::bipolar));
    REQUIRE(sets.size() == 1);
    CHECK(sets[0] == LabelSet({0}, 3));

    LabelMatrix::Storage negatives(1, 2);
    negatives << -1, -1;
    const auto empty = decode_bipolar(LabelMatrix(std::move(negatives), Polarity::bipolar));
    CHECK(empty[0] == LabelSet::empty(2));
}

TEST_CASE("decode_bipolar rejects unipolar input") {
    LabelMatrix::Storage values(1, 2);
    values << 0, 1;
    const LabelMatrix unipolar(std::move(values), Polarity::unipolar);
    CHECK_THROWS_AS(decode_bipolar(unipolar), InvalidArgument);
}

TEST_CASE("label matrix validates entries against the declared polarity") {
    LabelMatrix::Storage values(1, 2);
    values << 1, 2;
    CHECK_THROWS_WITH_AS(LabelMatrix(std::move(values), Polarity::bipolar),
                         doctest::Contains("(0, 1)"), InvalidArgument);

    LabelMatrix::Storage zeros(1, 1);
    zeros << 0;
    CHECK_THROWS_AS(LabelMatrix(LabelMatrix::Storage(zeros), Polarity::bipolar), InvalidArgument);
    CHECK_NOTHROW(LabelMatrix(std::move(zeros), Polarity::unipolar));
}

TEST_CASE("bipolar_step thresholds at zero with ties going positive") {
    Eigen::MatrixXd raw(1, 2);
    raw << 0.3, -0.2;
    const LabelMatrix stepped = bipolar_step(raw);
    CHECK(stepped(0, 0) == 1);
    CHECK(stepped(0, 1) == -1);

    Eigen::MatrixXd zero(1, 1);
    zero << 0.0;
    CHECK(bipolar_step(zero)(0, 0) == 1);

    Eigen::MatrixXd tiny(1, 2);
    tiny << -1e-9, 1e-9;
    const LabelMatrix near = bipolar_step(tiny);
    CHECK(near(0, 0) == -1);
    CHECK(near(0, 1) == 1);
}

TEST_CASE("bipolar_step rejects non-finite entries naming the position") {
    Eigen::MatrixXd raw(2, 2);
    raw << 0.0, 1.0, 2.0, std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(bipolar_step(raw), doctest::Contains("row 1, column 1"), NumericError);

    raw(1, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(bipolar_step(raw), NumericError);
}

TEST_CASE("round trip decode(encode(s)) is the identity on random label sets") {
    std::mt19937_64 gen(20240901);
    std::uniform_int_distribution<std::uint32_t> label_count_dist(1, 32);
    std::uniform_int_distribution<std::size_t> rows_dist(0, 200);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t label_count = label_count_dist(gen);
        const auto sets = generators::to_label_sets(
            generators::random_set_list(gen, rows_dist(gen), label_count), label_count);
        const auto decoded = decode_bipolar(encode_bipolar(sets, label_count));
        CHECK(decoded == sets);
    }
}

TEST_CASE("encode_bipolar rows carry exactly the set cardinality of positives") {
    std::mt19937_64 gen(7);
    const std::uint32_t label_count = 17;
    const auto sets =
        generators::to_label_sets(generators::random_set_list(gen, 64, label_count), label_count);
    const LabelMatrix encoded = encode_bipolar(sets, label_count);
    for (Eigen::Index i = 0; i < encoded.rows(); ++i) {
        std::size_t positives = 0;
        for (Eigen::Index j = 0; j < encoded.cols(); ++j) {
            if (encoded(i, j) == 1) ++positives;
        }
        CHECK(positives == sets[static_cast<std::size_t>(i)].size());
    }
}

}  // TEST_SUITE

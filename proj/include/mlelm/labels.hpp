#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "mlelm/errors.hpp"

namespace mlelm {

// A subset of the label space [0, L). Members are kept sorted and unique.
class LabelSet {
public:
    LabelSet(std::initializer_list<std::uint32_t> members, std::uint32_t label_space_size);
    LabelSet(std::vector<std::uint32_t> members, std::uint32_t label_space_size);

    static LabelSet empty(std::uint32_t label_space_size) { return LabelSet({}, label_space_size); }

    bool contains(std::uint32_t label) const noexcept;

    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<std::uint32_t>& members() const noexcept { return members_; }
    std::uint32_t label_space_size() const noexcept { return label_space_size_; }

    bool operator==(const LabelSet&) const = default;

private:
    std::vector<std::uint32_t> members_;  // sorted, no duplicates
    std::uint32_t label_space_size_;
};

enum class Polarity { unipolar, bipolar };

// Integer N x L matrix with entries restricted to {0,1} (unipolar) or
// {-1,+1} (bipolar). Construction validates every entry.
class LabelMatrix {
public:
    using Storage = Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic>;

    LabelMatrix(Storage values, Polarity polarity);

    Polarity polarity() const noexcept { return polarity_; }
    Eigen::Index rows() const noexcept { return values_.rows(); }
    Eigen::Index cols() const noexcept { return values_.cols(); }
    std::int8_t operator()(Eigen::Index i, Eigen::Index j) const { return values_(i, j); }
    const Storage& values() const noexcept { return values_; }

    // Entries widened to double (regression targets).
    Eigen::MatrixXd to_real() const { return values_.cast<double>(); }

private:
    Storage values_;
    Polarity polarity_;
};

// Bipolar encoding: entry (i, j) = +1 when j is in labels[i], else -1.
// Every set must have label_space_size == label_count.
LabelMatrix encode_bipolar(std::span<const LabelSet> labels, std::uint32_t label_count);

// Inverse of encode_bipolar: row i becomes { j : entry (i, j) == +1 }.
std::vector<LabelSet> decode_bipolar(const LabelMatrix& matrix);

// Thresholds raw scores at zero: entry >= 0 maps to +1, entry < 0 to -1.
// Rejects non-finite entries, naming the offending row and column.
LabelMatrix bipolar_step(const Eigen::MatrixXd& raw);

}  // namespace mlelm

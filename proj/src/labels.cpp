#include "mlelm/labels.hpp"

#include <algorithm>
#include <cmath>

namespace mlelm {

namespace {

std::vector<std::uint32_t> normalized(std::vector<std::uint32_t> members, std::uint32_t label_space_size) {
    if (label_space_size == 0) {
        throw InvalidArgument("LabelSet: label space size must be positive");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.back() >= label_space_size) {
        throw InvalidArgument("LabelSet: label index " + std::to_string(members.back()) +
                              " outside label space of size " + std::to_string(label_space_size));
    }
    return members;
}

}  // namespace

LabelSet::LabelSet(std::initializer_list<std::uint32_t> members, std::uint32_t label_space_size)
    : members_(normalized(std::vector<std::uint32_t>(members), label_space_size)),
      label_space_size_(label_space_size) {}

LabelSet::LabelSet(std::vector<std::uint32_t> members, std::uint32_t label_space_size)
    : members_(normalized(std::move(members), label_space_size)), label_space_size_(label_space_size) {}

bool LabelSet::contains(std::uint32_t label) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), label);
}

LabelMatrix::LabelMatrix(Storage values, Polarity polarity)
    : values_(std::move(values)), polarity_(polarity) {
    for (Eigen::Index i = 0; i < values_.rows(); ++i) {
        for (Eigen::Index j = 0; j < values_.cols(); ++j) {
            const std::int8_t v = values_(i, j);
            const bool ok = polarity_ == Polarity::unipolar ? (v == 0 || v == 1) : (v == -1 || v == 1);
            if (!ok) {
                throw InvalidArgument("LabelMatrix: entry (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ") = " + std::to_string(v) +
                                      " outside the declared polarity");
            }
        }
    }
}

LabelMatrix encode_bipolar(std::span<const LabelSet> labels, std::uint32_t label_count) {
    if (label_count == 0) {
        throw InvalidArgument("encode_bipolar: label count must be positive");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].label_space_size() != label_count) {
            throw InvalidArgument("encode_bipolar: instance " + std::to_string(i) +
                                  " has label space size " + std::to_string(labels[i].label_space_size()) +
                                  ", expected " + std::to_string(label_count));
        }
    }
    LabelMatrix::Storage values(static_cast<Eigen::Index>(labels.size()),
                                static_cast<Eigen::Index>(label_count));
    values.setConstant(-1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::uint32_t j : labels[i].members()) {
            values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1;
        }
    }
    return LabelMatrix(std::move(values), Polarity::bipolar);
}

std::vector<LabelSet> decode_bipolar(const LabelMatrix& matrix) {
    if (matrix.polarity() != Polarity::bipolar) {
        throw InvalidArgument("decode_bipolar: matrix is not bipolar");
    }
    if (matrix.cols() == 0) {
        throw InvalidArgument("decode_bipolar: matrix has no label columns");
    }
    const auto label_count = static_cast<std::uint32_t>(matrix.cols());
    std::vector<LabelSet> out;
    out.reserve(static_cast<std::size_t>(matrix.rows()));
    std::vector<std::uint32_t> members;
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        members.clear();
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
            if (matrix(i, j) == 1) {
                members.push_back(static_cast<std::uint32_t>(j));
            }
        }
        out.emplace_back(members, label_count);
    }
    return out;
}

LabelMatrix bipolar_step(const Eigen::MatrixXd& raw) {
    LabelMatrix::Storage values(raw.rows(), raw.cols());
    for (Eigen::Index i = 0; i < raw.rows(); ++i) {
        for (Eigen::Index j = 0; j < raw.cols(); ++j) {
            const double v = raw(i, j);
            if (!std::isfinite(v)) {
                throw NumericError("bipolar_step: non-finite value at row " + std::to_string(i) +
                                   ", column " + std::to_string(j));
            }
            values(i, j) = v >= 0.0 ? std::int8_t{1} : std::int8_t{-1};
        }
    }
    return LabelMatrix(std::move(values), Polarity::bipolar);
}

}  // namespace mlelm

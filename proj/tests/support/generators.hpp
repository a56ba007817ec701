#pragma once

// Seeded random data for property-style tests.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Core>

#include "mlelm/labels.hpp"

namespace generators {

inline Eigen::MatrixXd random_matrix(std::mt19937_64& gen, Eigen::Index rows, Eigen::Index cols,
                                     double low = -1.0, double high = 1.0) {
    std::uniform_real_distribution<double> dist(low, high);
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = dist(gen);
        }
    }
    return m;
}

inline std::set<std::uint32_t> random_set(std::mt19937_64& gen, std::uint32_t label_count) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_real_distribution<double> rate_dist(0.0, 0.6);
    const double rate = rate_dist(gen);
    std::set<std::uint32_t> out;
    for (std::uint32_t j = 0; j < label_count; ++j) {
        if (coin(gen) < rate) out.insert(j);
    }
    return out;
}

inline std::vector<mlelm::LabelSet> to_label_sets(const std::vector<std::set<std::uint32_t>>& sets,
                                                  std::uint32_t label_count) {
    std::vector<mlelm::LabelSet> out;
    out.reserve(sets.size());
    for (const auto& s : sets) {
        out.emplace_back(std::vector<std::uint32_t>(s.begin(), s.end()), label_count);
    }
    return out;
}

inline std::vector<std::set<std::uint32_t>> random_set_list(std::mt19937_64& gen, std::size_t count,
                                                            std::uint32_t label_count) {
    std::vector<std::set<std::uint32_t>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_set(gen, label_count));
    }
    return out;
}

}  // namespace generators

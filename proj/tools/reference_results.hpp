#pragma once

// Published benchmark results bundled for the comparison tables. The nine
// comparison methods are from Madjarov et al., "An extensive experimental
// comparison of methods for multi-label learning" (Pattern Recognition 45,
// 2012); the ELM column is the published ELM baseline on the same six
// datasets. Display-only data: it appears in report tables and never feeds
// any computation.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace bench {

inline constexpr std::array<std::string_view, 10> kMethods = {
    "CC", "QWML", "HOMER", "ML-C4.5", "PCT", "ML-kNN", "ECC", "RFML-C4.5", "RF-PCT", "ELM(pub)"};

inline constexpr std::array<std::string_view, 6> kDatasets = {"emotions", "yeast",  "scene",
                                                              "corel5k",  "enron", "medical"};

inline constexpr std::array<std::string_view, 5> kMetrics = {"hamming_loss", "accuracy", "precision",
                                                             "recall", "f1"};

// values[metric][dataset][method]
inline constexpr double kReference[5][6][10] = {
    // hamming_loss
    {
        {0.256, 0.254, 0.361, 0.247, 0.267, 0.294, 0.281, 0.198, 0.189, 0.251},  // emotions
        {0.193, 0.191, 0.207, 0.234, 0.219, 0.198, 0.207, 0.205, 0.197, 0.191},  // yeast
        {0.082, 0.081, 0.082, 0.141, 0.129, 0.099, 0.085, 0.116, 0.094, 0.085},  // scene
        {0.017, 0.012, 0.012, 0.010, 0.009, 0.009, 0.009, 0.009, 0.009, 0.009},  // corel5k
        {0.064, 0.048, 0.051, 0.053, 0.058, 0.051, 0.049, 0.047, 0.046, 0.047},  // enron
        {0.077, 0.012, 0.012, 0.013, 0.023, 0.017, 0.014, 0.022, 0.014, 0.011},  // medical
    },
    // accuracy
    {
        {0.356, 0.373, 0.471, 0.536, 0.448, 0.319, 0.432, 0.488, 0.519, 0.412},
        {0.527, 0.523, 0.559, 0.480, 0.440, 0.492, 0.546, 0.453, 0.478, 0.514},
        {0.723, 0.683, 0.717, 0.569, 0.538, 0.629, 0.735, 0.388, 0.541, 0.676},
        {0.030, 0.195, 0.179, 0.002, 0.000, 0.014, 0.001, 0.005, 0.009, 0.044},
        {0.334, 0.388, 0.478, 0.418, 0.196, 0.319, 0.462, 0.374, 0.416, 0.418},
        {0.211, 0.658, 0.713, 0.730, 0.228, 0.528, 0.611, 0.250, 0.591, 0.715},
    },
    // precision
    {
        {0.551, 0.548, 0.509, 0.606, 0.577, 0.502, 0.580, 0.625, 0.644, 0.548},
        {0.727, 0.718, 0.663, 0.620, 0.705, 0.732, 0.667, 0.738, 0.744, 0.718},
        {0.758, 0.711, 0.746, 0.592, 0.565, 0.661, 0.770, 0.403, 0.565, 0.685},
        {0.042, 0.326, 0.317, 0.005, 0.000, 0.035, 0.002, 0.018, 0.030, 0.144},
        {0.464, 0.624, 0.616, 0.623, 0.415, 0.587, 0.652, 0.690, 0.709, 0.668},
        {0.217, 0.697, 0.762, 0.797, 0.285, 0.575, 0.662, 0.284, 0.635, 0.774},
    },
    // recall
    {
        {0.397, 0.429, 0.775, 0.703, 0.534, 0.377, 0.533, 0.545, 0.582, 0.491},
        {0.600, 0.600, 0.714, 0.608, 0.490, 0.549, 0.673, 0.491, 0.523, 0.608},
        {0.726, 0.709, 0.744, 0.582, 0.539, 0.655, 0.771, 0.388, 0.541, 0.709},
        {0.056, 0.264, 0.250, 0.002, 0.000, 0.014, 0.001, 0.005, 0.009, 0.043},
        {0.507, 0.453, 0.610, 0.487, 0.229, 0.358, 0.560, 0.398, 0.452, 0.508},
        {0.754, 0.801, 0.760, 0.740, 0.227, 0.547, 0.642, 0.251, 0.599, 0.744},
    },
    // f1
    {
        {0.461, 0.481, 0.614, 0.651, 0.554, 0.431, 0.556, 0.583, 0.611, 0.518},
        {0.657, 0.654, 0.687, 0.614, 0.578, 0.628, 0.670, 0.589, 0.614, 0.658},
        {0.742, 0.710, 0.745, 0.587, 0.551, 0.658, 0.771, 0.395, 0.553, 0.697},
        {0.048, 0.292, 0.280, 0.003, 0.000, 0.021, 0.001, 0.008, 0.014, 0.033},
        {0.484, 0.525, 0.613, 0.546, 0.295, 0.445, 0.602, 0.505, 0.552, 0.577},
        {0.337, 0.745, 0.761, 0.768, 0.253, 0.560, 0.652, 0.267, 0.616, 0.759},
    },
};

// Lower is better only for hamming loss (metric index 0).
inline constexpr bool lower_is_better(std::size_t metric_index) { return metric_index == 0; }

inline std::optional<std::size_t> reference_dataset_index(std::string_view name) {
    std::string lowered(name);
    for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (std::size_t i = 0; i < kDatasets.size(); ++i) {
        if (lowered == kDatasets[i]) return i;
    }
    return std::nullopt;
}

}  // namespace bench

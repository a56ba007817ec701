#pragma once

#include <filesystem>

#include "mlelm/elm.hpp"

namespace mlelm {

// Binary model file: a fixed header (magic, format version, byte-order mark,
// activation tag, shapes, seed provenance) followed by the raw doubles of
// the input weights, biases and output weights. A loaded model reproduces
// bit-identical predictions.
void save_model(const ElmModel& model, const std::filesystem::path& path);
ElmModel load_model(const std::filesystem::path& path);

}  // namespace mlelm

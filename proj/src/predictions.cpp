#include "mlelm/predictions.hpp"

#include <fstream>
#include <string_view>

namespace mlelm {

namespace {

bool needs_quoting(std::string_view name) {
    return name.find_first_of(",\"\r\n") != std::string_view::npos;
}

std::string csv_quote(std::string_view name) {
    if (!needs_quoting(name)) {
        return std::string(name);
    }
    std::string out = "\"";
    for (char c : name) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::vector<std::string> split_header(const std::string& line, const std::filesystem::path& path) {
    std::vector<std::string> names;
    std::string current;
    bool in_quotes = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            names.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
        ++i;
    }
    if (in_quotes) {
        throw ParseError("unterminated quote in header of " + path.string(), 1);
    }
    names.push_back(current);
    for (const std::string& name : names) {
        if (name.empty()) {
            throw ParseError("empty label name in header of " + path.string(), 1);
        }
    }
    return names;
}

}  // namespace

void write_predictions(const std::filesystem::path& path, std::span<const LabelSet> predicted,
                       std::span<const std::string> label_names) {
    if (label_names.empty()) {
        throw InvalidArgument("write_predictions: no label names");
    }
    const auto label_count = static_cast<std::uint32_t>(label_names.size());
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (predicted[i].label_space_size() != label_count) {
            throw InvalidArgument("write_predictions: instance " + std::to_string(i) +
                                  " has label space size " +
                                  std::to_string(predicted[i].label_space_size()) + ", expected " +
                                  std::to_string(label_count));
        }
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open predictions file for writing: " + path.string());
    }
    for (std::size_t j = 0; j < label_names.size(); ++j) {
        if (j > 0) out << ',';
        out << csv_quote(label_names[j]);
    }
    out << '\n';
    for (const LabelSet& set : predicted) {
        for (std::uint32_t j = 0; j < label_count; ++j) {
            if (j > 0) out << ',';
            out << (set.contains(j) ? '1' : '0');
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("failed writing predictions file: " + path.string());
    }
}

PredictionFile read_predictions(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open predictions file: " + path.string());
    }

    PredictionFile result;
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw ParseError("empty predictions file: " + path.string());
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    result.label_names = split_header(line, path);
    const auto label_count = static_cast<std::uint32_t>(result.label_names.size());

    std::vector<std::uint32_t> members;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        members.clear();
        std::uint32_t column = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string_view cell(line.data() + start,
                                        (comma == std::string::npos ? line.size() : comma) - start);
            if (column >= label_count) {
                throw ParseError("row has more than " + std::to_string(label_count) + " columns in " +
                                 path.string(), line_no);
            }
            if (cell == "1") {
                members.push_back(column);
            } else if (cell != "0") {
                throw ParseError("expected 0 or 1, found '" + std::string(cell) + "' in " + path.string(),
                                 line_no);
            }
            ++column;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (column != label_count) {
            throw ParseError("row has " + std::to_string(column) + " columns, expected " +
                             std::to_string(label_count) + " in " + path.string(), line_no);
        }
        result.labels.emplace_back(members, label_count);
    }
    return result;
}

MetricReport score_files(const std::filesystem::path& truth_path,
                         const std::filesystem::path& predictions_path) {
    const PredictionFile truth = read_predictions(truth_path);
    const PredictionFile predicted = read_predictions(predictions_path);
    if (truth.label_names != predicted.label_names) {
        throw InvalidArgument("label columns differ between " + truth_path.string() + " and " +
                              predictions_path.string());
    }
    if (truth.labels.size() != predicted.labels.size()) {
        throw InvalidArgument("row counts differ between " + truth_path.string() + " (" +
                              std::to_string(truth.labels.size()) + ") and " + predictions_path.string() +
                              " (" + std::to_string(predicted.labels.size()) + ")");
    }
    return evaluate(truth.labels, predicted.labels);
}

}  // namespace mlelm

#include "mlelm/dataset.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace mlelm {

LabelSpec LabelSpec::trailing(std::size_t count) {
    LabelSpec spec;
    spec.kind_ = Kind::trailing;
    spec.trailing_count_ = count;
    return spec;
}

LabelSpec LabelSpec::names(std::vector<std::string> names) {
    LabelSpec spec;
    spec.kind_ = Kind::names;
    spec.names_ = std::move(names);
    return spec;
}

LabelSpec LabelSpec::xml_file(std::filesystem::path path) {
    LabelSpec spec;
    spec.kind_ = Kind::xml_file;
    spec.xml_path_ = std::move(path);
    return spec;
}

std::string_view scaling_mode_name(ScalingMode mode) {
    switch (mode) {
        case ScalingMode::none: return "none";
        case ScalingMode::minmax_01: return "minmax_01";
        case ScalingMode::standardize: return "standardize";
    }
    throw InvalidArgument("scaling_mode_name: unknown mode");
}

ScalingMode scaling_mode_from_name(std::string_view name) {
    if (name == "none") return ScalingMode::none;
    if (name == "minmax_01") return ScalingMode::minmax_01;
    if (name == "standardize") return ScalingMode::standardize;
    throw InvalidArgument("unknown scaling mode '" + std::string(name) +
                          "' (expected none, minmax_01 or standardize)");
}

MultiLabelDataset::MultiLabelDataset(Matrix features, std::vector<LabelSet> labels,
                                     std::uint32_t label_count, std::vector<std::string> feature_names,
                                     std::vector<std::string> label_names, ScalingRecord scaling)
    : features_(std::move(features)),
      labels_(std::move(labels)),
      label_count_(label_count),
      feature_names_(std::move(feature_names)),
      label_names_(std::move(label_names)),
      scaling_(std::move(scaling)) {
    if (static_cast<std::size_t>(features_.rows()) != labels_.size()) {
        throw InvalidArgument("MultiLabelDataset: feature rows and label list lengths differ");
    }
    if (feature_names_.size() != static_cast<std::size_t>(features_.cols())) {
        throw InvalidArgument("MultiLabelDataset: feature name count does not match columns");
    }
    if (label_names_.size() != label_count_) {
        throw InvalidArgument("MultiLabelDataset: label name count does not match label count");
    }
    for (const LabelSet& set : labels_) {
        if (set.label_space_size() != label_count_) {
            throw InvalidArgument("MultiLabelDataset: inconsistent label space size");
        }
    }
    if (!features_.allFinite()) {
        throw NumericError("MultiLabelDataset: non-finite features after loading");
    }
}

namespace {

// --- label XML ------------------------------------------------------------

std::string xml_unescape(std::string_view text, const std::filesystem::path& path) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '&') {
            out.push_back(text[i]);
            continue;
        }
        const std::size_t end = text.find(';', i);
        if (end == std::string_view::npos) {
            throw ParseError("unterminated XML entity in " + path.string());
        }
        const std::string_view entity = text.substr(i + 1, end - i - 1);
        if (entity == "amp") out.push_back('&');
        else if (entity == "lt") out.push_back('<');
        else if (entity == "gt") out.push_back('>');
        else if (entity == "quot") out.push_back('"');
        else if (entity == "apos") out.push_back('\'');
        else throw ParseError("unsupported XML entity '&" + std::string(entity) + ";' in " + path.string());
        i = end;
    }
    return out;
}

}  // namespace

std::vector<std::string> read_label_xml(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open label file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    // Drop comments and the prolog before scanning for elements.
    for (std::size_t at = text.find("<!--"); at != std::string::npos; at = text.find("<!--")) {
        const std::size_t end = text.find("-->", at);
        if (end == std::string::npos) {
            throw ParseError("unterminated XML comment in " + path.string());
        }
        text.erase(at, end - at + 3);
    }

    std::vector<std::string> names;
    std::unordered_set<std::string> seen;
    std::size_t pos = 0;
    while ((pos = text.find("<label", pos)) != std::string::npos) {
        const char after = pos + 6 < text.size() ? text[pos + 6] : '\0';
        if (after != ' ' && after != '\t' && after != '\n' && after != '\r' && after != '/' && after != '>') {
            pos += 6;  // e.g. "<labels"
            continue;
        }
        const std::size_t close = text.find('>', pos);
        if (close == std::string::npos) {
            throw ParseError("unterminated <label> element in " + path.string());
        }
        const std::string_view element(text.data() + pos, close - pos);
        const std::size_t name_at = element.find("name");
        if (name_at == std::string_view::npos) {
            throw ParseError("<label> element without a name attribute in " + path.string());
        }
        std::size_t cursor = name_at + 4;
        while (cursor < element.size() && std::isspace(static_cast<unsigned char>(element[cursor]))) ++cursor;
        if (cursor >= element.size() || element[cursor] != '=') {
            throw ParseError("malformed name attribute in " + path.string());
        }
        ++cursor;
        while (cursor < element.size() && std::isspace(static_cast<unsigned char>(element[cursor]))) ++cursor;
        if (cursor >= element.size() || (element[cursor] != '"' && element[cursor] != '\'')) {
            throw ParseError("unquoted name attribute in " + path.string());
        }
        const char quote = element[cursor];
        const std::size_t value_start = cursor + 1;
        const std::size_t value_end = element.find(quote, value_start);
        if (value_end == std::string_view::npos) {
            throw ParseError("unterminated name attribute in " + path.string());
        }
        std::string name = xml_unescape(element.substr(value_start, value_end - value_start), path);
        if (name.empty()) {
            throw ParseError("empty label name in " + path.string());
        }
        if (!seen.insert(name).second) {
            throw ParseError("duplicate label name '" + name + "' in " + path.string());
        }
        names.push_back(std::move(name));
        pos = close + 1;
    }
    if (names.empty()) {
        throw ParseError("no <label> elements found in " + path.string());
    }
    return names;
}

namespace {

// --- manifest JSON ----------------------------------------------------------

std::filesystem::path resolve(const std::filesystem::path& base, const std::filesystem::path& p) {
    if (base.empty() || p.is_absolute()) return p;
    return base / p;
}

}  // namespace

DatasetManifest manifest_from_json(const std::string& json_text, const std::filesystem::path& base_dir) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("manifest: invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) {
            throw ParseError("manifest: top level must be an object");
        }
        DatasetManifest manifest;
        manifest.train_path = resolve(base_dir, doc.at("train").get<std::string>());
        manifest.test_path = resolve(base_dir, doc.at("test").get<std::string>());

        const nlohmann::json& labels = doc.at("labels");
        if (!labels.is_object() || labels.size() != 1) {
            throw ParseError("manifest: labels must be exactly one of {\"trailing\": k}, "
                             "{\"names\": [...]}, {\"xml\": path}");
        }
        if (labels.contains("trailing")) {
            manifest.labels = LabelSpec::trailing(labels.at("trailing").get<std::size_t>());
        } else if (labels.contains("names")) {
            manifest.labels = LabelSpec::names(labels.at("names").get<std::vector<std::string>>());
        } else if (labels.contains("xml")) {
            manifest.labels = LabelSpec::xml_file(resolve(base_dir, labels.at("xml").get<std::string>()));
        } else {
            throw ParseError("manifest: labels must specify trailing, names or xml");
        }

        if (doc.contains("scaling")) {
            manifest.scaling = scaling_mode_from_name(doc.at("scaling").get<std::string>());
        }
        return manifest;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("manifest: ") + e.what());
    }
}

DatasetManifest manifest_from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open manifest: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return manifest_from_json(buffer.str(), path.parent_path());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

namespace {

// --- document -> dataset ----------------------------------------------------

bool is_binary01(const arff::Attribute& attribute) {
    if (attribute.kind != arff::AttributeKind::nominal || attribute.values.size() != 2) return false;
    return (attribute.values[0] == "0" && attribute.values[1] == "1") ||
           (attribute.values[0] == "1" && attribute.values[1] == "0");
}

std::vector<std::size_t> resolve_label_indices(const arff::Document& document, const LabelSpec& spec) {
    const std::vector<arff::Attribute>& attributes = document.attributes;
    std::vector<std::size_t> label_indices;

    if (spec.kind() == LabelSpec::Kind::trailing) {
        const std::size_t count = spec.trailing_count();
        if (count == 0) {
            throw InvalidArgument("label spec: trailing label count must be positive");
        }
        if (count >= attributes.size()) {
            throw InvalidArgument("label spec: trailing count " + std::to_string(count) +
                                  " leaves no feature attributes (header has " +
                                  std::to_string(attributes.size()) + ")");
        }
        for (std::size_t i = attributes.size() - count; i < attributes.size(); ++i) {
            label_indices.push_back(i);
        }
        return label_indices;
    }

    std::vector<std::string> names = spec.kind() == LabelSpec::Kind::names
                                         ? spec.label_names()
                                         : read_label_xml(spec.xml_path());
    if (names.empty()) {
        throw InvalidArgument("label spec: empty label name list");
    }
    std::unordered_map<std::string, std::size_t> by_name;
    for (std::size_t i = 0; i < attributes.size(); ++i) {
        by_name.emplace(attributes[i].name, i);
    }
    std::unordered_set<std::size_t> used;
    for (const std::string& name : names) {
        const auto it = by_name.find(name);
        if (it == by_name.end()) {
            throw ParseError("label attribute '" + name + "' not found in header");
        }
        if (!used.insert(it->second).second) {
            throw InvalidArgument("label spec: attribute '" + name + "' listed twice");
        }
        label_indices.push_back(it->second);
    }
    if (label_indices.size() >= attributes.size()) {
        throw InvalidArgument("label spec: label list leaves no feature attributes");
    }
    return label_indices;
}

struct RawDataset {
    Matrix features;  // may contain NaN where values were missing
    std::vector<LabelSet> labels;
    std::vector<std::string> feature_names;
    std::vector<std::string> label_names;
};

double label_cell_value(const arff::Cell& cell, const arff::Attribute& attribute, std::size_t line) {
    if (std::holds_alternative<std::monostate>(cell)) {
        throw ParseError("missing value for label attribute '" + attribute.name + "'", line);
    }
    if (attribute.kind == arff::AttributeKind::numeric) {
        const double v = std::get<double>(cell);
        if (v != 0.0 && v != 1.0) {
            throw ParseError("label attribute '" + attribute.name + "' has value outside {0,1}", line);
        }
        return v;
    }
    const std::string& value = attribute.values[std::get<std::uint32_t>(cell)];
    if (value == "0") return 0.0;
    if (value == "1") return 1.0;
    throw ParseError("label attribute '" + attribute.name + "' has value outside {0,1}", line);
}

RawDataset extract_columns(const arff::Document& document, const std::vector<std::size_t>& label_indices) {
    RawDataset raw;
    std::vector<bool> is_label(document.attributes.size(), false);
    for (std::size_t index : label_indices) is_label[index] = true;

    // Feature layout: one column per numeric or {0,1}-nominal attribute,
    // one column per value for other nominal attributes.
    struct FeatureColumn {
        std::size_t attribute;
        bool one_hot;
        std::uint32_t hot_value;
    };
    std::vector<FeatureColumn> columns;
    for (std::size_t a = 0; a < document.attributes.size(); ++a) {
        if (is_label[a]) continue;
        const arff::Attribute& attribute = document.attributes[a];
        if (attribute.kind == arff::AttributeKind::numeric || is_binary01(attribute)) {
            columns.push_back({a, false, 0});
            raw.feature_names.push_back(attribute.name);
        } else {
            for (std::uint32_t v = 0; v < attribute.values.size(); ++v) {
                columns.push_back({a, true, v});
                raw.feature_names.push_back(attribute.name + "=" + attribute.values[v]);
            }
        }
    }

    const auto label_count = static_cast<std::uint32_t>(label_indices.size());
    const auto row_count = static_cast<Eigen::Index>(document.rows.size());
    raw.features.resize(row_count, static_cast<Eigen::Index>(columns.size()));
    raw.labels.reserve(document.rows.size());
    for (std::size_t index : label_indices) {
        raw.label_names.push_back(document.attributes[index].name);
    }

    constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::uint32_t> members;
    for (std::size_t r = 0; r < document.rows.size(); ++r) {
        const arff::Row& row = document.rows[r];
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const FeatureColumn& column = columns[c];
            const arff::Cell& cell = row.cells[column.attribute];
            double value;
            if (std::holds_alternative<std::monostate>(cell)) {
                value = kMissing;
            } else if (column.one_hot) {
                value = std::get<std::uint32_t>(cell) == column.hot_value ? 1.0 : 0.0;
            } else if (document.attributes[column.attribute].kind == arff::AttributeKind::numeric) {
                value = std::get<double>(cell);
            } else {
                // {0,1} nominal: the declared value string is the number.
                value = document.attributes[column.attribute].values[std::get<std::uint32_t>(cell)] == "1"
                            ? 1.0
                            : 0.0;
            }
            raw.features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = value;
        }
        members.clear();
        for (std::uint32_t j = 0; j < label_count; ++j) {
            const arff::Attribute& attribute = document.attributes[label_indices[j]];
            if (label_cell_value(row.cells[label_indices[j]], attribute, row.line) == 1.0) {
                members.push_back(j);
            }
        }
        raw.labels.emplace_back(members, label_count);
    }
    return raw;
}

std::vector<double> column_means_ignoring_missing(const Matrix& features) {
    std::vector<double> means(static_cast<std::size_t>(features.cols()), 0.0);
    for (Eigen::Index j = 0; j < features.cols(); ++j) {
        double sum = 0.0;
        Eigen::Index count = 0;
        for (Eigen::Index i = 0; i < features.rows(); ++i) {
            if (!std::isnan(features(i, j))) {
                sum += features(i, j);
                ++count;
            }
        }
        means[static_cast<std::size_t>(j)] = count > 0 ? sum / static_cast<double>(count) : 0.0;
    }
    return means;
}

void impute_missing(Matrix& features, const std::vector<double>& means) {
    for (Eigen::Index j = 0; j < features.cols(); ++j) {
        for (Eigen::Index i = 0; i < features.rows(); ++i) {
            if (std::isnan(features(i, j))) {
                features(i, j) = means[static_cast<std::size_t>(j)];
            }
        }
    }
}

ScalingRecord fit_scaling(const Matrix& features, ScalingMode mode) {
    ScalingRecord record;
    record.mode = mode;
    if (mode == ScalingMode::none) {
        return record;
    }
    const auto cols = static_cast<std::size_t>(features.cols());
    record.param_a.resize(cols);
    record.param_b.resize(cols);
    for (Eigen::Index j = 0; j < features.cols(); ++j) {
        if (mode == ScalingMode::minmax_01) {
            record.param_a[static_cast<std::size_t>(j)] = features.col(j).minCoeff();
            record.param_b[static_cast<std::size_t>(j)] = features.col(j).maxCoeff();
        } else {
            const double mean = features.col(j).mean();
            const double var = (features.col(j).array() - mean).square().sum() /
                               static_cast<double>(features.rows());
            record.param_a[static_cast<std::size_t>(j)] = mean;
            record.param_b[static_cast<std::size_t>(j)] = std::sqrt(var);
        }
    }
    return record;
}

void apply_scaling(Matrix& features, const ScalingRecord& record) {
    if (record.mode == ScalingMode::none) {
        return;
    }
    for (Eigen::Index j = 0; j < features.cols(); ++j) {
        const double a = record.param_a[static_cast<std::size_t>(j)];
        const double b = record.param_b[static_cast<std::size_t>(j)];
        for (Eigen::Index i = 0; i < features.rows(); ++i) {
            double& v = features(i, j);
            if (record.mode == ScalingMode::minmax_01) {
                v = b > a ? (v - a) / (b - a) : 0.0;
            } else {
                v = b > 0.0 ? (v - a) / b : 0.0;
            }
        }
    }
}

void check_same_schema(const arff::Document& train, const arff::Document& test,
                       const std::filesystem::path& train_path, const std::filesystem::path& test_path) {
    if (train.attributes.size() != test.attributes.size()) {
        throw ParseError("schema mismatch between " + train_path.string() + " and " + test_path.string() +
                         ": " + std::to_string(train.attributes.size()) + " vs " +
                         std::to_string(test.attributes.size()) + " attributes");
    }
    for (std::size_t i = 0; i < train.attributes.size(); ++i) {
        const arff::Attribute& a = train.attributes[i];
        const arff::Attribute& b = test.attributes[i];
        if (a.name != b.name || a.kind != b.kind || a.values != b.values) {
            throw ParseError("schema mismatch between " + train_path.string() + " and " +
                             test_path.string() + " at attribute '" + a.name + "'");
        }
    }
}

}  // namespace

MultiLabelDataset dataset_from_document(const arff::Document& document, const LabelSpec& spec) {
    const std::vector<std::size_t> label_indices = resolve_label_indices(document, spec);
    RawDataset raw = extract_columns(document, label_indices);
    impute_missing(raw.features, column_means_ignoring_missing(raw.features));
    const auto label_count = static_cast<std::uint32_t>(label_indices.size());
    return MultiLabelDataset(std::move(raw.features), std::move(raw.labels), label_count,
                             std::move(raw.feature_names), std::move(raw.label_names), ScalingRecord{});
}

MultiLabelDataset parse_arff(const std::string& text, const LabelSpec& spec) {
    return dataset_from_document(arff::parse_string(text), spec);
}

std::pair<MultiLabelDataset, MultiLabelDataset> load_dataset(const DatasetManifest& manifest) {
    const arff::Document train_doc = arff::parse_file(manifest.train_path);
    const arff::Document test_doc = arff::parse_file(manifest.test_path);
    check_same_schema(train_doc, test_doc, manifest.train_path, manifest.test_path);
    if (train_doc.rows.empty()) {
        throw ParseError("empty train split: " + manifest.train_path.string());
    }
    if (test_doc.rows.empty()) {
        throw ParseError("empty test split: " + manifest.test_path.string());
    }

    const std::vector<std::size_t> label_indices = resolve_label_indices(train_doc, manifest.labels);
    RawDataset train_raw = extract_columns(train_doc, label_indices);
    RawDataset test_raw = extract_columns(test_doc, label_indices);

    // Train-split statistics drive both imputation and scaling.
    const std::vector<double> train_means = column_means_ignoring_missing(train_raw.features);
    impute_missing(train_raw.features, train_means);
    impute_missing(test_raw.features, train_means);

    const ScalingRecord scaling = fit_scaling(train_raw.features, manifest.scaling);
    apply_scaling(train_raw.features, scaling);
    apply_scaling(test_raw.features, scaling);

    const auto label_count = static_cast<std::uint32_t>(label_indices.size());
    MultiLabelDataset train(std::move(train_raw.features), std::move(train_raw.labels), label_count,
                            std::move(train_raw.feature_names), std::move(train_raw.label_names), scaling);
    MultiLabelDataset test(std::move(test_raw.features), std::move(test_raw.labels), label_count,
                           std::move(test_raw.feature_names), std::move(test_raw.label_names), scaling);
    return {std::move(train), std::move(test)};
}

}  // namespace mlelm

#include "mlelm/model_io.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

namespace mlelm {

namespace {

constexpr std::array<char, 8> kMagic = {'M', 'L', 'E', 'L', 'M', 'B', 'I', 'N'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr std::uint32_t kByteOrderMark = 0x01020304u;

void write_bytes(std::ostream& out, const void* data, std::size_t size) {
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
}

template <typename T>
void write_pod(std::ostream& out, const T& value) {
    write_bytes(out, &value, sizeof(T));
}

void read_bytes(std::istream& in, void* data, std::size_t size, const std::string& path) {
    in.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
    if (static_cast<std::size_t>(in.gcount()) != size) {
        throw ParseError("model file truncated: " + path);
    }
}

template <typename T>
T read_pod(std::istream& in, const std::string& path) {
    T value;
    read_bytes(in, &value, sizeof(T), path);
    return value;
}

void write_matrix(std::ostream& out, const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            write_pod(out, m(i, j));
        }
    }
}

Matrix read_matrix(std::istream& in, Eigen::Index rows, Eigen::Index cols, const std::string& path) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = read_pod<double>(in, path);
        }
    }
    return m;
}

}  // namespace

void save_model(const ElmModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open model file for writing: " + path.string());
    }

    write_bytes(out, kMagic.data(), kMagic.size());
    write_pod(out, kFormatVersion);
    write_pod(out, kByteOrderMark);

    const std::string activation(activation_name(model.activation()));
    write_pod(out, static_cast<std::uint32_t>(activation.size()));
    write_bytes(out, activation.data(), activation.size());

    write_pod(out, static_cast<std::uint64_t>(model.hidden_count()));
    write_pod(out, static_cast<std::uint64_t>(model.feature_count()));
    write_pod(out, static_cast<std::uint64_t>(model.label_count()));
    write_pod(out, model.provenance().seed);
    write_pod(out, model.provenance().init_low);
    write_pod(out, model.provenance().init_high);

    write_matrix(out, model.input_weights());
    write_matrix(out, model.biases());
    write_matrix(out, model.output_weights());

    if (!out) {
        throw IoError("failed writing model file: " + path.string());
    }
}

ElmModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open model file: " + path.string());
    }
    const std::string name = path.string();

    std::array<char, 8> magic{};
    read_bytes(in, magic.data(), magic.size(), name);
    if (magic != kMagic) {
        throw ParseError("not a model file (bad magic): " + name);
    }
    const auto version = read_pod<std::uint32_t>(in, name);
    if (version != kFormatVersion) {
        throw ParseError("unsupported model format version " + std::to_string(version) + ": " + name);
    }
    const auto byte_order = read_pod<std::uint32_t>(in, name);
    if (byte_order != kByteOrderMark) {
        throw ParseError("model file written with an incompatible byte order: " + name);
    }

    const auto activation_len = read_pod<std::uint32_t>(in, name);
    if (activation_len > 64) {
        throw ParseError("model file has an implausible activation tag: " + name);
    }
    std::string activation(activation_len, '\0');
    read_bytes(in, activation.data(), activation_len, name);

    const auto hidden = static_cast<Eigen::Index>(read_pod<std::uint64_t>(in, name));
    const auto features = static_cast<Eigen::Index>(read_pod<std::uint64_t>(in, name));
    const auto labels = static_cast<Eigen::Index>(read_pod<std::uint64_t>(in, name));
    if (hidden <= 0 || features <= 0 || labels <= 0) {
        throw ParseError("model file has non-positive shapes: " + name);
    }

    ModelProvenance provenance;
    provenance.seed = read_pod<std::uint64_t>(in, name);
    provenance.init_low = read_pod<double>(in, name);
    provenance.init_high = read_pod<double>(in, name);

    Matrix input_weights = read_matrix(in, hidden, features, name);
    Matrix biases_wide = read_matrix(in, hidden, 1, name);
    Matrix output_weights = read_matrix(in, hidden, labels, name);

    char extra = 0;
    if (in.read(&extra, 1); in.gcount() != 0) {
        throw ParseError("model file has trailing bytes: " + name);
    }

    return ElmModel(std::move(input_weights), Vector(biases_wide.col(0)), std::move(output_weights),
                    activation_from_name(activation), provenance);
}

}  // namespace mlelm

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "mlelm/errors.hpp"

namespace mlelm::arff {

enum class AttributeKind { numeric, nominal };

struct Attribute {
    std::string name;
    AttributeKind kind = AttributeKind::numeric;
    std::vector<std::string> values;  // nominal values in declaration order
};

// One parsed cell: missing ('?'), a numeric value, or an index into the
// attribute's nominal values.
using Cell = std::variant<std::monostate, double, std::uint32_t>;

struct Row {
    std::vector<Cell> cells;  // one per attribute, declaration order
    std::size_t line = 0;     // 1-based source line
};

struct Document {
    std::string relation;
    std::vector<Attribute> attributes;
    std::vector<Row> rows;
};

// Accepted grammar (keywords case-insensitive):
//
//   @relation <name>
//   @attribute <name> (numeric|real|integer|{v1,v2,...})
//   @data
//   <dense CSV rows or sparse "{index value, ...}" rows>
//
// '%' outside quotes starts a comment. Names and nominal values may be
// quoted with single or double quotes and may contain spaces; a backslash
// escapes the next character inside quotes. '?' marks a missing value.
// In sparse rows, unlisted attributes default to 0 (numeric) or the first
// declared value (nominal). Malformed input raises ParseError with the
// offending line number.
Document parse(std::istream& in);
Document parse_string(const std::string& text);
Document parse_file(const std::filesystem::path& path);

// Emits a document in the accepted grammar (dense rows, '?' for missing
// cells). Parsing the output recovers the same logical content.
void write(const Document& document, std::ostream& out);
std::string to_string(const Document& document);

}  // namespace mlelm::arff

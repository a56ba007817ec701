#include "mlelm/arff.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>
#include <unordered_set>

namespace mlelm::arff {

namespace {

bool ci_equal(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Truncates at the first '%' that is not inside a quoted string.
void strip_comment(std::string& line) {
    char quote = 0;
    bool escaped = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (escaped) {
            escaped = false;
            continue;
        }
        if (quote != 0) {
            if (c == '\\') {
                escaped = true;
            } else if (c == quote) {
                quote = 0;
            }
            continue;
        }
        if (c == '\'' || c == '"') {
            quote = c;
        } else if (c == '%') {
            line.erase(i);
            return;
        }
    }
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 0;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line); }
};

// Reads a quoted string starting at the opening quote.
std::string read_quoted(Cursor& cur) {
    const char quote = cur.text[cur.pos];
    ++cur.pos;
    std::string out;
    while (true) {
        if (cur.eof()) cur.fail("unterminated quoted string");
        const char c = cur.text[cur.pos++];
        if (c == '\\') {
            if (cur.eof()) cur.fail("dangling escape in quoted string");
            out.push_back(cur.text[cur.pos++]);
        } else if (c == quote) {
            return out;
        } else {
            out.push_back(c);
        }
    }
}

// Reads a field up to (not consuming) any stop character, honoring quotes.
// After a quoted field only whitespace may precede the stop or end of line.
std::string read_field(Cursor& cur, std::string_view stops) {
    cur.skip_ws();
    if (cur.eof()) cur.fail("expected a value");
    if (cur.peek() == '\'' || cur.peek() == '"') {
        std::string out = read_quoted(cur);
        // Only stop characters (or trailing whitespace) may follow the quote.
        if (!cur.eof() && stops.find(cur.peek()) == std::string_view::npos) {
            cur.skip_ws();
            if (!cur.eof() && stops.find(cur.peek()) == std::string_view::npos) {
                cur.fail("unexpected characters after quoted value");
            }
        }
        return out;
    }
    const std::size_t start = cur.pos;
    while (!cur.eof() && stops.find(cur.peek()) == std::string_view::npos) ++cur.pos;
    return std::string(trim(cur.text.substr(start, cur.pos - start)));
}

double parse_number(std::string_view text, const Cursor& cur, const std::string& attribute) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        cur.fail("invalid numeric value '" + std::string(text) + "' for attribute '" + attribute + "'");
    }
    if (!std::isfinite(value)) {
        cur.fail("non-finite numeric value for attribute '" + attribute + "'");
    }
    return value;
}

Cell make_cell(const Attribute& attribute, std::string value, const Cursor& cur) {
    if (value == "?") {
        return std::monostate{};
    }
    if (attribute.kind == AttributeKind::numeric) {
        return parse_number(value, cur, attribute.name);
    }
    for (std::size_t i = 0; i < attribute.values.size(); ++i) {
        if (attribute.values[i] == value) {
            return static_cast<std::uint32_t>(i);
        }
    }
    cur.fail("value '" + value + "' is not declared for nominal attribute '" + attribute.name + "'");
}

class Parser {
public:
    explicit Parser(std::istream& in) : in_(in) {}

    Document run() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (line_no_ == 1 && line.starts_with("\xEF\xBB\xBF")) {
                line.erase(0, 3);  // UTF-8 BOM
            }
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            strip_comment(line);
            if (trim(line).empty()) continue;
            handle_line(line);
        }
        if (!saw_data_) {
            throw ParseError("missing @data section", line_no_);
        }
        return std::move(doc_);
    }

private:
    void handle_line(std::string_view line) {
        Cursor cur{line, 0, line_no_};
        cur.skip_ws();
        if (cur.peek() == '@') {
            handle_directive(cur);
        } else if (saw_data_) {
            handle_row(cur);
        } else {
            cur.fail("unexpected content before @data");
        }
    }

    void handle_directive(Cursor& cur) {
        const std::size_t start = cur.pos;
        while (!cur.eof() && !std::isspace(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
        const std::string_view keyword = cur.text.substr(start, cur.pos - start);

        if (ci_equal(keyword, "@relation")) {
            if (saw_relation_) cur.fail("duplicate @relation");
            if (saw_data_) cur.fail("@relation after @data");
            doc_.relation = read_field(cur, "");
            if (doc_.relation.empty()) cur.fail("missing relation name");
            saw_relation_ = true;
        } else if (ci_equal(keyword, "@attribute")) {
            if (!saw_relation_) cur.fail("@attribute before @relation");
            if (saw_data_) cur.fail("@attribute after @data");
            handle_attribute(cur);
        } else if (ci_equal(keyword, "@data")) {
            if (!saw_relation_) cur.fail("@data before @relation");
            if (saw_data_) cur.fail("duplicate @data");
            cur.skip_ws();
            if (!cur.eof()) cur.fail("unexpected text after @data");
            if (doc_.attributes.empty()) cur.fail("@data with no attributes declared");
            saw_data_ = true;
        } else {
            cur.fail("unknown directive '" + std::string(keyword) + "'");
        }
    }

    void handle_attribute(Cursor& cur) {
        Attribute attribute;
        attribute.name = read_field(cur, " \t{");
        if (attribute.name.empty()) cur.fail("missing attribute name");
        if (!seen_names_.insert(attribute.name).second) {
            cur.fail("duplicate attribute name '" + attribute.name + "'");
        }

        cur.skip_ws();
        if (cur.eof()) cur.fail("missing type for attribute '" + attribute.name + "'");

        if (cur.peek() == '{') {
            ++cur.pos;
            attribute.kind = AttributeKind::nominal;
            std::unordered_set<std::string> seen_values;
            while (true) {
                cur.skip_ws();
                if (cur.eof()) cur.fail("unterminated nominal value list");
                if (cur.peek() == '}') {
                    ++cur.pos;
                    break;
                }
                std::string value = read_field(cur, ",}");
                if (value.empty()) cur.fail("empty nominal value");
                if (!seen_values.insert(value).second) {
                    cur.fail("duplicate nominal value '" + value + "'");
                }
                attribute.values.push_back(std::move(value));
                cur.skip_ws();
                if (cur.eof()) cur.fail("unterminated nominal value list");
                if (cur.peek() == ',') {
                    ++cur.pos;
                } else if (cur.peek() != '}') {
                    cur.fail("expected ',' or '}' in nominal value list");
                }
            }
            if (attribute.values.empty()) cur.fail("nominal attribute with no values");
        } else {
            const std::size_t start = cur.pos;
            while (!cur.eof() && !std::isspace(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
            const std::string type = to_lower(cur.text.substr(start, cur.pos - start));
            if (type == "numeric" || type == "real" || type == "integer") {
                attribute.kind = AttributeKind::numeric;
            } else {
                cur.fail("unknown attribute type '" + type + "'");
            }
        }
        cur.skip_ws();
        if (!cur.eof()) cur.fail("unexpected text after attribute declaration");
        doc_.attributes.push_back(std::move(attribute));
    }

    void handle_row(Cursor& cur) {
        Row row;
        row.line = line_no_;
        if (cur.peek() == '{') {
            row.cells = parse_sparse(cur);
        } else {
            row.cells = parse_dense(cur);
        }
        doc_.rows.push_back(std::move(row));
    }

    std::vector<Cell> parse_dense(Cursor& cur) {
        std::vector<Cell> cells;
        cells.reserve(doc_.attributes.size());
        while (true) {
            if (cells.size() == doc_.attributes.size()) {
                cur.fail("row has more than " + std::to_string(doc_.attributes.size()) + " values");
            }
            std::string value = read_field(cur, ",");
            if (value.empty()) cur.fail("empty value in row");
            cells.push_back(make_cell(doc_.attributes[cells.size()], std::move(value), cur));
            cur.skip_ws();
            if (cur.eof()) break;
            if (cur.peek() != ',') cur.fail("expected ',' between values");
            ++cur.pos;
        }
        if (cells.size() != doc_.attributes.size()) {
            cur.fail("row has " + std::to_string(cells.size()) + " values, expected " +
                     std::to_string(doc_.attributes.size()));
        }
        return cells;
    }

    std::vector<Cell> parse_sparse(Cursor& cur) {
        ++cur.pos;  // past '{'
        std::vector<Cell> cells(doc_.attributes.size());
        for (std::size_t j = 0; j < doc_.attributes.size(); ++j) {
            const Attribute& attribute = doc_.attributes[j];
            cells[j] = attribute.kind == AttributeKind::numeric ? Cell(0.0) : Cell(std::uint32_t{0});
        }
        std::unordered_set<std::size_t> seen;
        while (true) {
            cur.skip_ws();
            if (cur.eof()) cur.fail("unterminated sparse row");
            if (cur.peek() == '}') {
                ++cur.pos;
                break;
            }
            const std::size_t start = cur.pos;
            while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
            if (cur.pos == start) cur.fail("expected an attribute index in sparse row");
            std::size_t index = 0;
            const std::string_view digits = cur.text.substr(start, cur.pos - start);
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
            if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
                cur.fail("invalid attribute index in sparse row");
            }
            if (index >= doc_.attributes.size()) {
                cur.fail("attribute index " + std::to_string(index) + " out of range");
            }
            if (!seen.insert(index).second) {
                cur.fail("duplicate attribute index " + std::to_string(index) + " in sparse row");
            }
            if (cur.eof() || !std::isspace(static_cast<unsigned char>(cur.peek()))) {
                cur.fail("expected a value after attribute index " + std::to_string(index));
            }
            std::string value = read_field(cur, ",}");
            if (value.empty()) cur.fail("empty value in sparse row");
            cells[index] = make_cell(doc_.attributes[index], std::move(value), cur);
            cur.skip_ws();
            if (cur.eof()) cur.fail("unterminated sparse row");
            if (cur.peek() == ',') {
                ++cur.pos;
            } else if (cur.peek() != '}') {
                cur.fail("expected ',' or '}' in sparse row");
            }
        }
        cur.skip_ws();
        if (!cur.eof()) cur.fail("unexpected text after sparse row");
        return cells;
    }

    std::istream& in_;
    Document doc_;
    std::size_t line_no_ = 0;
    bool saw_relation_ = false;
    bool saw_data_ = false;
    std::unordered_set<std::string> seen_names_;
};

}  // namespace

Document parse(std::istream& in) { return Parser(in).run(); }

Document parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

Document parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path.string());
    }
    try {
        return parse(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

namespace {

std::string quoted_if_needed(const std::string& text) {
    const bool needs_quotes = text.empty() || text == "?" ||
                              text.find_first_of(" \t,{}%'\"\\") != std::string::npos;
    if (!needs_quotes) {
        return text;
    }
    std::string out = "'";
    for (char c : text) {
        if (c == '\'' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('\'');
    return out;
}

std::string format_number(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

}  // namespace

void write(const Document& document, std::ostream& out) {
    out << "@relation " << quoted_if_needed(document.relation) << "\n\n";
    for (const Attribute& attribute : document.attributes) {
        out << "@attribute " << quoted_if_needed(attribute.name) << ' ';
        if (attribute.kind == AttributeKind::numeric) {
            out << "numeric";
        } else {
            out << '{';
            for (std::size_t i = 0; i < attribute.values.size(); ++i) {
                if (i > 0) out << ',';
                out << quoted_if_needed(attribute.values[i]);
            }
            out << '}';
        }
        out << '\n';
    }
    out << "\n@data\n";
    for (const Row& row : document.rows) {
        for (std::size_t j = 0; j < row.cells.size(); ++j) {
            if (j > 0) out << ',';
            const Cell& cell = row.cells[j];
            if (std::holds_alternative<std::monostate>(cell)) {
                out << '?';
            } else if (std::holds_alternative<double>(cell)) {
                out << format_number(std::get<double>(cell));
            } else {
                out << quoted_if_needed(document.attributes[j].values[std::get<std::uint32_t>(cell)]);
            }
        }
        out << '\n';
    }
}

std::string to_string(const Document& document) {
    std::ostringstream out;
    write(document, out);
    return out.str();
}

}  // namespace mlelm::arff

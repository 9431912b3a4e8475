#include "pivmat/matrix_io.hpp"

#include <cctype>

#include "pivmat/errors.hpp"

namespace pivmat {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Line {
    std::string text;
    std::size_t number;  // 1-based
};

// Next non-comment, non-blank line.
bool next_data_line(std::istream& in, std::size_t& lineno, Line& out) {
    std::string s;
    while (std::getline(in, s)) {
        ++lineno;
        std::size_t i = 0;
        while (i < s.size() && is_space(s[i])) ++i;
        if (i == s.size() || s[i] == '#') continue;
        out = {std::move(s), lineno};
        return true;
    }
    return false;
}

std::vector<Token> split_whitespace(const Line& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.text.size()) {
        while (i < line.text.size() && is_space(line.text[i])) ++i;
        if (i >= line.text.size()) break;
        std::size_t start = i;
        while (i < line.text.size() && !is_space(line.text[i])) ++i;
        tokens.push_back({line.text.substr(start, i - start), line.number, start + 1});
    }
    return tokens;
}

std::vector<Token> split_commas(const Line& line) {
    std::vector<Token> tokens;
    std::size_t cell_start = 0;
    for (std::size_t i = 0; i <= line.text.size(); ++i) {
        if (i == line.text.size() || line.text[i] == ',') {
            std::size_t b = cell_start, e = i;
            while (b < e && is_space(line.text[b])) ++b;
            while (e > b && is_space(line.text[e - 1])) --e;
            tokens.push_back({line.text.substr(b, e - b), line.number, b + 1});
            cell_start = i + 1;
        }
    }
    return tokens;
}

std::size_t parse_order(const Token& t) {
    if (t.text.empty())
        throw ParseError(t.line, t.column, "expected matrix order");
    for (char c : t.text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(t.line, t.column, "matrix order must be a positive integer, got '" + t.text + "'");
    unsigned long n = std::stoul(t.text);
    if (n == 0)
        throw ParseError(t.line, t.column, "matrix order must be at least 1");
    if (n > 100000)
        throw ParseError(t.line, t.column, "matrix order too large");
    return static_cast<std::size_t>(n);
}

RawMatrix read_csv(Line first, std::istream& in, std::size_t& lineno) {
    RawMatrix raw;
    raw.rows.push_back(split_commas(first));
    const std::size_t width = raw.rows[0].size();
    Line line;
    while (next_data_line(in, lineno, line)) {
        auto row = split_commas(line);
        if (row.size() != width) {
            const Token& at = row.size() > width ? row[width] : row.back();
            throw ParseError(at.line, row.size() > width ? at.column : line.text.size() + 1,
                             "ragged row: expected " + std::to_string(width) + " cells, got " +
                                 std::to_string(row.size()));
        }
        raw.rows.push_back(std::move(row));
    }
    if (raw.rows.size() != width)
        throw ParseError(first.number, 1,
                         "non-square data: " + std::to_string(raw.rows.size()) + " rows of " +
                             std::to_string(width) + " cells");
    raw.n = width;
    return raw;
}

}  // namespace

RawMatrix read_raw_matrix(std::istream& in) {
    std::size_t lineno = 0;
    Line line;
    if (!next_data_line(in, lineno, line))
        throw ParseError(lineno + 1, 1, "empty input, expected matrix data");

    if (line.text.find(',') != std::string::npos)
        return read_csv(std::move(line), in, lineno);

    auto header = split_whitespace(line);
    if (header.size() != 1)
        throw ParseError(header[1].line, header[1].column,
                         "expected a single matrix order on the first data line");
    RawMatrix raw;
    raw.n = parse_order(header[0]);

    for (std::size_t i = 0; i < raw.n; ++i) {
        if (!next_data_line(in, lineno, line))
            throw ParseError(lineno + 1, 1,
                             "unexpected end of input: expected " + std::to_string(raw.n) +
                                 " data rows, got " + std::to_string(i));
        auto row = split_whitespace(line);
        if (row.size() != raw.n) {
            std::size_t col = row.size() > raw.n ? row[raw.n].column : line.text.size() + 1;
            throw ParseError(line.number, col,
                             "ragged row: expected " + std::to_string(raw.n) + " entries, got " +
                                 std::to_string(row.size()));
        }
        raw.rows.push_back(std::move(row));
    }
    if (next_data_line(in, lineno, line))
        throw ParseError(line.number, 1, "trailing data after the last matrix row");
    return raw;
}

}  // namespace pivmat

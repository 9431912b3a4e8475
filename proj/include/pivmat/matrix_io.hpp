#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pivmat/arith.hpp"
#include "pivmat/matrix.hpp"

namespace pivmat {

/// One scalar token with its 1-based source position.
struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

/// Structural pass over the matrix file format: '#' comment lines and blank
/// lines skipped; either "n" followed by n rows of n whitespace-separated
/// tokens, or (auto-detected by commas) a header-free comma-separated n x n
/// grid. Throws ParseError for structural problems; token syntax is left to
/// the caller.
struct RawMatrix {
    std::size_t n;
    std::vector<std::vector<Token>> rows;
};

RawMatrix read_raw_matrix(std::istream& in);

template <ArithModel A>
Matrix<typename A::Scalar> parse_matrix(std::istream& in, const A& arith) {
    RawMatrix raw = read_raw_matrix(in);
    Matrix<typename A::Scalar> m(raw.n);
    for (std::size_t i = 0; i < raw.n; ++i)
        for (std::size_t j = 0; j < raw.n; ++j) {
            const Token& t = raw.rows[i][j];
            auto value = arith.parse_token(t.text);
            if (!value)
                throw ParseError(t.line, t.column, "malformed scalar token '" + t.text + "'");
            m.at(i, j) = *std::move(value);
        }
    return m;
}

template <ArithModel A>
Matrix<typename A::Scalar> parse_matrix(std::string_view text, const A& arith) {
    std::istringstream in{std::string(text)};
    return parse_matrix(in, arith);
}

template <ArithModel A>
void write_matrix(std::ostream& out, const Matrix<typename A::Scalar>& m, const A& arith) {
    out << m.order() << '\n';
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j) out << ' ';
            out << arith.format(m.at(i, j));
        }
        out << '\n';
    }
}

template <ArithModel A>
std::string format_matrix(const Matrix<typename A::Scalar>& m, const A& arith) {
    std::ostringstream out;
    write_matrix(out, m, arith);
    return out.str();
}

}  // namespace pivmat

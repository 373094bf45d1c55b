#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "adjmat/element.hpp"
#include "adjmat/errors.hpp"
#include "adjmat/ints.hpp"
#include "adjmat/matrix.hpp"
#include "adjmat/polynomial.hpp"

namespace adjmat {

// Matrix file format, one matrix per file:
//
//   adjmat v1 <domain> <n>
//   <n lines of n whitespace-separated entries>
//
// where <domain> is "int" or "poly". Entries use the canonical element
// syntax and contain no whitespace (e.g. "-12" or "3*x^2-1").

struct MatrixFileHeader {
    DomainTag tag = DomainTag::integer;
    std::size_t order = 0;
};

template <Domain R>
struct DomainTraits;

template <>
struct DomainTraits<Int> {
    static constexpr DomainTag tag = DomainTag::integer;
    static Int parse(std::string_view text) { return Int::parse(text); }
};

template <>
struct DomainTraits<Polynomial> {
    static constexpr DomainTag tag = DomainTag::polynomial;
    static Polynomial parse(std::string_view text) { return Polynomial::parse(text); }
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

inline bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!split_tokens(line).empty()) return true;
    }
    return false;
}

} // namespace detail

/// Reads and validates the header line, leaving the stream at the first row.
inline MatrixFileHeader read_matrix_header(std::istream& in, std::size_t* line_no_out = nullptr) {
    std::string line;
    std::size_t line_no = 0;
    if (!detail::next_content_line(in, line, line_no))
        throw ParseError("matrix file is empty");
    const auto tok = detail::split_tokens(line);
    if (tok.size() != 4 || tok[0] != "adjmat")
        throw ParseError("line 1: expected header 'adjmat v1 <domain> <n>'");
    if (tok[1] != "v1") throw ParseError("line 1: unsupported version '" + tok[1] + "'");
    MatrixFileHeader h;
    if (tok[2] == "int") h.tag = DomainTag::integer;
    else if (tok[2] == "poly") h.tag = DomainTag::polynomial;
    else throw ParseError("line 1: unknown domain '" + tok[2] + "' (expected int or poly)");
    try {
        const Int n = Int::parse(tok[3]);
        if (n <= Int(0) || n > Int(4096)) throw ParseError("order out of range");
        h.order = static_cast<std::size_t>(std::stoll(tok[3]));
    } catch (const std::exception&) {
        throw ParseError("line 1: matrix order '" + tok[3] + "' is not a positive integer (max 4096)");
    }
    if (line_no_out) *line_no_out = line_no;
    return h;
}

/// Reads the n x n body that follows a header. Each row must sit on its own
/// line with exactly n entries.
template <Domain R>
Matrix<R> read_matrix_body(std::istream& in, std::size_t n, std::size_t header_line = 1) {
    std::vector<R> entries;
    entries.reserve(n * n);
    std::string line;
    std::size_t line_no = header_line;
    for (std::size_t r = 0; r < n; ++r) {
        if (!detail::next_content_line(in, line, line_no))
            throw ParseError("line " + std::to_string(line_no + 1) + ": expected row " +
                             std::to_string(r + 1) + " of " + std::to_string(n) +
                             ", found end of file");
        const auto tok = detail::split_tokens(line);
        if (tok.size() != n)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(n) + " entries, found " +
                             std::to_string(tok.size()));
        for (std::size_t c = 0; c < n; ++c) {
            try {
                entries.push_back(DomainTraits<R>::parse(tok[c]));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ", entry " +
                                 std::to_string(c + 1) + " ('" + tok[c] + "'): " + e.what());
            }
        }
    }
    std::string rest;
    std::size_t ignored = line_no;
    if (detail::next_content_line(in, rest, ignored))
        throw ParseError("line " + std::to_string(ignored) + ": unexpected content after " +
                         std::to_string(n) + " rows");
    return Matrix<R>(n, n, std::move(entries));
}

/// Reads a whole file whose header must carry the domain of R.
template <Domain R>
Matrix<R> read_matrix_file(std::istream& in) {
    std::size_t header_line = 1;
    const MatrixFileHeader h = read_matrix_header(in, &header_line);
    if (h.tag != DomainTraits<R>::tag)
        throw DomainMismatch("matrix file holds domain '" + std::string(domain_name(h.tag)) +
                             "', expected '" + std::string(domain_name(DomainTraits<R>::tag)) + "'");
    return read_matrix_body<R>(in, h.order, header_line);
}

template <Domain R>
void write_matrix_file(std::ostream& out, const Matrix<R>& m) {
    if (!m.square()) throw DimensionError("write_matrix_file: matrix must be square");
    out << "adjmat v1 " << domain_name(DomainTraits<R>::tag) << ' ' << m.rows() << '\n';
    out << format_matrix(m) << '\n';
}

} // namespace adjmat

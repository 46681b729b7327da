#pragma once

// Text formats. Code files: header line "n k", then k generator rows as
// n characters from {0,1}; lines starting with '#' and blank lines are
// skipped. Support lists: one set per line, comma- or space-separated
// 1-based coordinates, braces optional.

#include "code.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace sdc {

struct parse_error : std::runtime_error {
    enum class Kind { Header, RowLength, BadCharacter, RowCount, Support };
    Kind kind;
    parse_error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

namespace detail {

inline bool content_line(const std::string& line) {
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) return ch != '#';
    return false;
}

inline std::string trimmed(const std::string& line) {
    size_t a = 0, b = line.size();
    while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
    return line.substr(a, b - a);
}

} // namespace detail

inline LinearCode parse_code(std::istream& in) {
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
        if (detail::content_line(line)) lines.push_back(detail::trimmed(line));
    if (lines.empty()) throw parse_error(parse_error::Kind::Header, "missing header line");

    std::istringstream header(lines.front());
    int n = 0, k = -1;
    std::string extra;
    if (!(header >> n >> k) || (header >> extra) || n < 1 || k < 0 || k > n)
        throw parse_error(parse_error::Kind::Header,
                          "header must be \"n k\" with 1 <= n and 0 <= k <= n");
    if (static_cast<int>(lines.size()) - 1 != k)
        throw parse_error(parse_error::Kind::RowCount,
                          "expected " + std::to_string(k) + " generator rows, found " +
                              std::to_string(lines.size() - 1));
    BitMatrix m(n);
    for (int r = 0; r < k; ++r) {
        const std::string& row = lines[static_cast<size_t>(r) + 1];
        if (static_cast<int>(row.size()) != n)
            throw parse_error(parse_error::Kind::RowLength,
                              "row " + std::to_string(r + 1) + " has length " +
                                  std::to_string(row.size()) + ", expected " + std::to_string(n));
        BitVector v(n);
        for (int c = 0; c < n; ++c) {
            if (row[static_cast<size_t>(c)] == '1')
                v.set(c + 1);
            else if (row[static_cast<size_t>(c)] != '0')
                throw parse_error(parse_error::Kind::BadCharacter,
                                  std::string("bad character '") + row[static_cast<size_t>(c)] +
                                      "' in row " + std::to_string(r + 1));
        }
        m.append_row(std::move(v));
    }
    return LinearCode::from_generator(m);
}

inline LinearCode parse_code_string(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

inline LinearCode parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    return parse_code(in);
}

// Emits the RREF rows, so parse(render(c)) == c.
inline std::string render_code(const LinearCode& c) {
    std::ostringstream out;
    out << c.length() << ' ' << c.dimension() << '\n';
    for (int i = 0; i < c.generator().rows(); ++i)
        out << c.generator().row(i).to_string() << '\n';
    return out.str();
}

inline void write_code_file(const std::string& path, const LinearCode& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write code file: " + path);
    out << render_code(c);
}

// "{2, 3, 10}" or "2,3,10" or "2 3 10" -> {2, 3, 10}
inline std::vector<int> parse_support_line(const std::string& line) {
    std::string cleaned;
    for (char ch : line) {
        if (ch == '{' || ch == '}' || ch == ',')
            cleaned += ' ';
        else
            cleaned += ch;
    }
    std::istringstream in(cleaned);
    std::vector<int> coords;
    std::string token;
    while (in >> token) {
        try {
            size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size() || v < 1)
                throw parse_error(parse_error::Kind::Support, "bad coordinate: " + token);
            coords.push_back(v);
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error(parse_error::Kind::Support, "bad coordinate: " + token);
        }
    }
    if (coords.empty())
        throw parse_error(parse_error::Kind::Support, "empty support line");
    return coords;
}

inline std::vector<BitVector> parse_support_file(std::istream& in, int n) {
    std::vector<BitVector> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!detail::content_line(line)) continue;
        const auto coords = parse_support_line(line);
        for (int c : coords)
            if (c > n)
                throw parse_error(parse_error::Kind::Support,
                                  "coordinate " + std::to_string(c) + " exceeds length " +
                                      std::to_string(n));
        out.push_back(BitVector::from_support(n, coords));
    }
    return out;
}

} // namespace sdc

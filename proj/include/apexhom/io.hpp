#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "apexhom/errors.hpp"
#include "apexhom/graph.hpp"

namespace apexhom {

// graph6, short form only (N <= 62): one byte N+63, then the upper
// triangle read column by column -- for j = 1..N-1, i = 0..j-1 the bit for
// pair (i,j) -- packed six bits per byte, most significant bit first,
// zero-padded, every byte offset by 63.

inline Graph parse_graph6(std::string_view text) {
    if (text.empty())
        throw parse_error("empty graph6 string", 0);
    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126)
        throw parse_error("long-form graph6 is not supported", 0);
    if (first < 63 || first > 125)
        throw parse_error("invalid graph6 size byte", 0);
    const int n = first - 63;
    const int pairs = n * (n - 1) / 2;
    const std::size_t expected = 1 + static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() < expected)
        throw parse_error("graph6 string truncated", text.size());
    if (text.size() > expected)
        throw parse_error("trailing bytes after graph6 payload", expected);

    Graph g(n);
    int bit_index = 0;
    for (std::size_t byte = 1; byte < text.size(); ++byte) {
        const unsigned char c = static_cast<unsigned char>(text[byte]);
        if (c < 63 || c > 126)
            throw parse_error("graph6 byte out of range", byte);
        const int value = c - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            const bool set = (value >> b) & 1;
            if (bit_index >= pairs) {
                if (set)
                    throw parse_error("nonzero padding bit in graph6 string", byte);
                continue;
            }
            if (set) {
                // invert the column-order index into the pair (i, j)
                int j = 1;
                int before = 0;
                while (before + j <= bit_index)
                    before += j++;
                const int i = bit_index - before;
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

inline std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw invalid_argument_error("graph6 short form handles at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

// One graph6 string per line; blank lines are skipped.
inline std::vector<Graph> parse_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

// Edge-list format: first meaningful line is the vertex count, every
// further line is "u v" with 0-based ids. Blank lines and '#' comments are
// ignored.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    int n = -1;
    Graph g(0);
    auto meaningful = [](const std::string& s) {
        for (char c : s) {
            if (std::isspace(static_cast<unsigned char>(c)))
                continue;
            return c != '#';
        }
        return false;
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!meaningful(line))
            continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0)
                throw parse_error("expected vertex count on line " + std::to_string(line_no), 0);
            g = Graph(n);
        } else {
            int u = 0, v = 0;
            if (!(ls >> u >> v))
                throw parse_error("expected 'u v' on line " + std::to_string(line_no), 0);
            try {
                g.add_edge(u, v);
            } catch (const invalid_argument_error& e) {
                throw parse_error(std::string(e.what()) + " on line " + std::to_string(line_no), 0);
            }
        }
        std::string rest;
        if (ls >> rest && rest[0] != '#')
            throw parse_error("trailing tokens on line " + std::to_string(line_no), 0);
    }
    if (n < 0)
        throw parse_error("edge list has no vertex count", 0);
    return g;
}

} // namespace apexhom

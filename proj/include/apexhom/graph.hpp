#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "apexhom/errors.hpp"
#include "apexhom/rational.hpp"

namespace apexhom {

// Ordered vertex list, repetition allowed.
using VertexTuple = std::vector<int>;

namespace detail {

inline int popcount_words(std::span<const std::uint64_t> words) {
    int c = 0;
    for (std::uint64_t w : words)
        c += std::popcount(w);
    return c;
}

} // namespace detail

// Simple undirected graph on vertices 0..N-1, no loops. Adjacency is held
// as one bitset row per vertex (64-bit words), which makes common
// neighborhoods cheap intersections. Immutable once built; add_edge is
// construction-time only.
class Graph {
public:
    explicit Graph(int vertex_count) : n_(vertex_count), m_(0) {
        if (vertex_count < 0)
            throw invalid_argument_error("negative vertex count");
        words_ = (n_ + 63) / 64;
        rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int word_count() const { return words_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw invalid_argument_error("self-loop rejected: vertex " + std::to_string(u));
        if (adjacent(u, v))
            return;
        rows_[row_offset(u) + v / 64] |= std::uint64_t{1} << (v % 64);
        rows_[row_offset(v) + u / 64] |= std::uint64_t{1} << (u % 64);
        ++m_;
    }

    bool adjacent(int u, int v) const {
        return (rows_[row_offset(u) + v / 64] >> (v % 64)) & 1u;
    }

    std::span<const std::uint64_t> row(int v) const {
        return {rows_.data() + row_offset(v), static_cast<std::size_t>(words_)};
    }

    int degree(int v) const {
        check_vertex(v);
        return detail::popcount_words(row(v));
    }

    std::vector<int> neighborhood(int v) const {
        check_vertex(v);
        return unpack(row(v));
    }

    // Vertices adjacent to every entry of the tuple; the empty tuple yields
    // all vertices. Depends only on the support set of the tuple.
    std::vector<int> common_neighborhood(std::span<const int> tuple) const {
        return unpack(common_neighborhood_mask(tuple));
    }

    int common_degree(std::span<const int> tuple) const {
        return detail::popcount_words(common_neighborhood_mask(tuple));
    }

    std::vector<std::uint64_t> common_neighborhood_mask(std::span<const int> tuple) const {
        std::vector<std::uint64_t> mask = full_mask();
        for (int v : tuple) {
            check_vertex(v);
            auto r = row(v);
            for (int w = 0; w < words_; ++w)
                mask[w] &= r[w];
        }
        return mask;
    }

    std::vector<std::uint64_t> full_mask() const {
        std::vector<std::uint64_t> mask(words_, 0);
        for (int v = 0; v < n_; ++v)
            mask[v / 64] |= std::uint64_t{1} << (v % 64);
        return mask;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw invalid_argument_error("vertex " + std::to_string(v) + " out of range [0," +
                                         std::to_string(n_) + ")");
    }

private:
    std::size_t row_offset(int v) const { return static_cast<std::size_t>(v) * words_; }

    std::vector<int> unpack(std::span<const std::uint64_t> mask) const {
        std::vector<int> out;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(w * 64 + b);
                bits &= bits - 1;
            }
        }
        return out;
    }

    int n_;
    int m_;
    int words_;
    std::vector<std::uint64_t> rows_;
};

inline std::vector<int> neighborhood(const Graph& g, int v) { return g.neighborhood(v); }

inline std::vector<int> common_neighborhood(const Graph& g, std::span<const int> tuple) {
    return g.common_neighborhood(tuple);
}

// Small standard graphs, mostly for tests and quick CLI experiments.

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3)
        throw invalid_argument_error("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

// Star K_{1,k} with the center at vertex 0.
inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

inline Graph complete_bipartite_graph(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            g.add_edge(u, a + v);
    return g;
}

// Categorical product: (a,b) ~ (c,d) iff a~c in F and b~d in G.
// Vertex (a,b) is encoded as a*|G|+b.
inline Graph tensor_product(const Graph& f, const Graph& g) {
    const int nf = f.vertex_count();
    const int ng = g.vertex_count();
    Graph out(nf * ng);
    for (int a = 0; a < nf; ++a)
        for (int c = a; c < nf; ++c) {
            if (!f.adjacent(a, c))
                continue;
            for (int b = 0; b < ng; ++b)
                for (int d = 0; d < ng; ++d)
                    if (g.adjacent(b, d))
                        out.add_edge(a * ng + b, c * ng + d);
        }
    return out;
}

inline Graph tensor_power(const Graph& g, int r) {
    if (r < 1)
        throw invalid_argument_error("tensor power requires exponent >= 1");
    Graph out = g;
    for (int i = 1; i < r; ++i)
        out = tensor_product(out, g);
    return out;
}

// 2E/N^2, exactly.
inline ExactRational edge_density(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        throw invalid_argument_error("edge density of the empty graph");
    BigNat nn = BigNat{static_cast<unsigned long long>(n)};
    return ExactRational{BigNat{2u} * BigNat{static_cast<unsigned long long>(g.edge_count())},
                         nn * nn};
}

} // namespace apexhom

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "apexhom/bignat.hpp"
#include "apexhom/bipartite.hpp"
#include "apexhom/errors.hpp"
#include "apexhom/graph.hpp"
#include "apexhom/hom.hpp"
#include "apexhom/rational.hpp"

namespace apexhom {

// Verdict of t_H(G) >= t_{K2}(G)^m, decided entirely in BigNat:
//   h * N^{2m}  >=  (2E)^m * N^n.
struct SidorenkoVerdict {
    bool holds = false;
    BigNat lhs;                         // h * N^{2m}
    BigNat rhs;                         // (2E)^m * N^n
    std::optional<ExactRational> slack_ratio; // t_H(G) / p^m, when p^m > 0
    bool apex_hypothesis = false;       // H has a vertex complete to the other part
    BigNat hom_count;                   // h_H(G)
    int h_vertices = 0;
    int h_edges = 0;
};

namespace detail {

inline SidorenkoVerdict sidorenko_check_impl(const Graph& h, const Graph& g,
                                             bool apex_hypothesis, const HomGuard& guard) {
    if (g.vertex_count() == 0)
        throw invalid_argument_error("Sidorenko check against the empty graph");

    SidorenkoVerdict verdict;
    verdict.apex_hypothesis = apex_hypothesis;
    verdict.h_vertices = h.vertex_count();
    verdict.h_edges = h.edge_count();
    verdict.hom_count = count_homs(h, g, guard);

    const unsigned int m = static_cast<unsigned int>(h.edge_count());
    const unsigned int n = static_cast<unsigned int>(h.vertex_count());
    const BigNat big_n{static_cast<unsigned long long>(g.vertex_count())};
    const BigNat two_e = BigNat{2u} * BigNat{static_cast<unsigned long long>(g.edge_count())};

    verdict.lhs = verdict.hom_count * big_pow(big_n, 2 * m);
    verdict.rhs = big_pow(two_e, m) * big_pow(big_n, n);
    verdict.holds = verdict.lhs >= verdict.rhs;
    if (!verdict.rhs.is_zero())
        verdict.slack_ratio = ExactRational{verdict.lhs, verdict.rhs};
    return verdict;
}

} // namespace detail

inline SidorenkoVerdict sidorenko_check(const BipartiteApexGraph& h, const Graph& g,
                                        const HomGuard& guard = {}) {
    return detail::sidorenko_check_impl(h.as_graph(), g, true, guard);
}

// Plain-graph variant: H must be bipartite (2-colorable); the verdict is
// computed for any bipartite H, and apex_hypothesis records whether the
// theorem's hypothesis actually applies to it.
inline SidorenkoVerdict sidorenko_check(const Graph& h, const Graph& g,
                                        const HomGuard& guard = {}) {
    if (!is_bipartite(h))
        throw invalid_argument_error("H is not bipartite");
    const bool apex = find_apex_bipartition(h).has_value();
    return detail::sidorenko_check_impl(h, g, apex, guard);
}

// Every bipartite H on n <= max_vertices with parts V1 = {0..n1-1},
// V2 = {n1..n-1}, apex 0 adjacent to all of V2, and each further V1 vertex
// joined to an arbitrary subset of V2. Emission order: by n, then n1, then
// the subset odometer with vertex n1-1's subset moving fastest. Every
// labeled shape appears exactly once.
inline std::vector<BipartiteApexGraph> enumerate_apex_bipartite(int max_vertices) {
    constexpr int enumeration_guard = 8;
    if (max_vertices > enumeration_guard)
        throw resource_limit_error("apex enumeration capped at " +
                                   std::to_string(enumeration_guard) + " vertices");
    std::vector<BipartiteApexGraph> out;
    for (int n = 2; n <= max_vertices; ++n) {
        for (int n1 = 1; n1 < n; ++n1) {
            const int n2 = n - n1;
            const unsigned long long subsets = 1ULL << n2;
            // one subset choice per non-apex V1 vertex
            std::vector<unsigned long long> choice(static_cast<std::size_t>(n1 - 1), 0);
            while (true) {
                std::vector<int> part1(n1), part2(n2);
                for (int i = 0; i < n1; ++i)
                    part1[i] = i;
                for (int i = 0; i < n2; ++i)
                    part2[i] = n1 + i;
                std::vector<std::pair<int, int>> edges;
                for (int i = 0; i < n2; ++i)
                    edges.emplace_back(0, n1 + i);
                for (int w = 1; w < n1; ++w)
                    for (int i = 0; i < n2; ++i)
                        if ((choice[w - 1] >> i) & 1ULL)
                            edges.emplace_back(w, n1 + i);
                out.emplace_back(std::move(part1), std::move(part2), std::move(edges), 0);

                int pos = n1 - 2;
                while (pos >= 0 && choice[pos] == subsets - 1)
                    choice[pos--] = 0;
                if (pos < 0)
                    break;
                ++choice[pos];
            }
        }
    }
    return out;
}

} // namespace apexhom

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "apexhom/bignat.hpp"
#include "apexhom/bipartite.hpp"
#include "apexhom/drc.hpp"
#include "apexhom/errors.hpp"
#include "apexhom/graph.hpp"
#include "apexhom/rational.hpp"

namespace apexhom {

// Hypergraph with an ordered multiset of set-edges. Edges are kept sorted
// internally and in construction order externally; duplicates are retained.
struct SetHypergraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> edges;

    void check() const {
        for (const auto& edge : edges) {
            for (int v : edge)
                if (v < 0 || v >= vertex_count)
                    throw invalid_argument_error("hypergraph edge vertex out of range");
            if (!std::is_sorted(edge.begin(), edge.end()))
                throw invalid_argument_error("hypergraph edge not sorted");
            if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
                throw invalid_argument_error("hypergraph edge repeats a vertex");
        }
    }
};

// The hypergraph on V2 with one edge N(w) per non-apex w in V1, in V1
// order, duplicates retained. V2 vertices are re-indexed 0..n2-1 in V2
// order.
inline SetHypergraph link_hypergraph(const BipartiteApexGraph& h) {
    SetHypergraph hyp;
    hyp.vertex_count = h.n2();
    std::vector<int> index_of(static_cast<std::size_t>(h.n()), -1);
    for (int i = 0; i < h.n2(); ++i)
        index_of[static_cast<std::size_t>(h.part2()[static_cast<std::size_t>(i)])] = i;
    const Graph& hg = h.as_graph();
    for (int w : h.part1()) {
        if (w == h.apex())
            continue;
        std::vector<int> edge;
        for (int x : hg.neighborhood(w))
            edge.push_back(index_of[static_cast<std::size_t>(x)]);
        std::sort(edge.begin(), edge.end());
        hyp.edges.push_back(std::move(edge));
    }
    hyp.check();
    return hyp;
}

// Edge relation of the embedding host: a k-tuple R over N(anchor) is an
// edge iff |N(R)| >= (2E)^k N / ((2n)^{n+1} N^{2k}), decided exactly.
class ThresholdPredicate {
public:
    ThresholdPredicate(const Graph& host, int anchor, int n)
        : host_(&host), anchor_(anchor), params_(DrcParams::for_graph(host, n)),
          targets_(host.neighborhood(anchor)) {}

    // the predicate keeps a pointer to the host, so a temporary would dangle
    ThresholdPredicate(Graph&&, int, int) = delete;

    const std::vector<int>& targets() const { return targets_; }
    int anchor() const { return anchor_; }
    int level() const { return params_.n; }
    const DrcParams& params() const { return params_; }

    ExactRational threshold(unsigned int k) const { return params_.tuple_threshold(k); }

    // order- and duplicate-insensitive apart from tuple length
    bool is_edge(const std::vector<int>& tuple) const {
        return is_edge_with_length(tuple, static_cast<unsigned int>(tuple.size()));
    }

    // verdict for any k-tuple whose support is `support`: the threshold
    // depends on the tuple length, the common neighborhood only on the
    // support
    bool is_edge_with_length(const std::vector<int>& support, unsigned int k) const {
        const BigNat common{
            static_cast<unsigned long long>(host_->common_degree(support))};
        return compare_nat_rational(common, threshold(k)) != Ordering::less;
    }

private:
    const Graph* host_;
    int anchor_;
    DrcParams params_;
    std::vector<int> targets_;
};

// Exact count of maps g: V(Hyp) -> targets whose edge images all satisfy
// the predicate. Backtracking; each edge is tested as soon as its last
// vertex is placed. The image tuple lists an edge's elements in ascending
// vertex order, which the predicate is insensitive to.
inline BigNat count_hyper_homs(const SetHypergraph& hyp, const ThresholdPredicate& pred,
                               std::uint64_t max_map_evals = 1'000'000'000ULL) {
    hyp.check();
    const int v = hyp.vertex_count;
    const auto& targets = pred.targets();
    const std::size_t t = targets.size();

    std::vector<int> empty_tuple;
    for (const auto& edge : hyp.edges)
        if (edge.empty() && !pred.is_edge(empty_tuple))
            return BigNat{0u};
    if (v == 0)
        return BigNat{1u};
    if (t == 0)
        return BigNat{0u};

    std::vector<std::vector<std::size_t>> edges_by_last(static_cast<std::size_t>(v));
    for (std::size_t e = 0; e < hyp.edges.size(); ++e)
        if (!hyp.edges[e].empty())
            edges_by_last[static_cast<std::size_t>(hyp.edges[e].back())].push_back(e);

    std::vector<int> image(static_cast<std::size_t>(v), -1);
    std::vector<int> tuple;
    unsigned long long count = 0;
    std::uint64_t work = 0;

    auto edge_images_ok = [&](int depth) {
        for (std::size_t e : edges_by_last[static_cast<std::size_t>(depth)]) {
            tuple.clear();
            for (int x : hyp.edges[e])
                tuple.push_back(image[static_cast<std::size_t>(x)]);
            if (!pred.is_edge(tuple))
                return false;
        }
        return true;
    };

    auto descend = [&](auto&& self, int depth) -> void {
        if (++work > max_map_evals)
            throw resource_limit_error("hypergraph map evaluation guard exceeded");
        for (std::size_t i = 0; i < t; ++i) {
            image[static_cast<std::size_t>(depth)] = targets[i];
            if (!edge_images_ok(depth))
                continue;
            if (depth + 1 == v)
                ++count;
            else
                self(self, depth + 1);
        }
        image[static_cast<std::size_t>(depth)] = -1;
    };
    descend(descend, 0);
    return BigNat{count};
}

} // namespace apexhom

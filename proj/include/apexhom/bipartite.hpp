#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "apexhom/errors.hpp"
#include "apexhom/graph.hpp"

namespace apexhom {

// Proper 2-coloring with colors 0/1, or nullopt if some component is odd.
// Vertex 0 of each component gets color 0; components are scanned in
// vertex-id order, so the coloring is deterministic.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1)
            continue;
        color[root] = 0;
        queue.assign(1, root);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int v : g.neighborhood(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

// Bipartite graph H = (V1, V2, E) carrying a distinguished apex u in V1
// adjacent to every vertex of V2. Parts must partition 0..n-1 and every
// edge must cross them; all of that is checked at construction.
class BipartiteApexGraph {
public:
    BipartiteApexGraph(std::vector<int> part1, std::vector<int> part2,
                       std::vector<std::pair<int, int>> edges, int apex)
        : part1_(std::move(part1)), part2_(std::move(part2)), apex_(apex),
          graph_(static_cast<int>(part1_.size() + part2_.size())) {
        const int n = graph_.vertex_count();
        std::vector<int> side(n, -1);
        for (int v : part1_) {
            graph_.check_vertex(v);
            if (side[v] != -1)
                throw invalid_argument_error("vertex repeated across parts");
            side[v] = 0;
        }
        for (int v : part2_) {
            graph_.check_vertex(v);
            if (side[v] != -1)
                throw invalid_argument_error("vertex repeated across parts");
            side[v] = 1;
        }
        // parts cover 0..n-1 by the pigeonhole once sizes add up and ids are unique
        std::set<std::pair<int, int>> seen;
        for (auto [a, b] : edges) {
            if (side[a] == 1)
                std::swap(a, b);
            if (side[a] != 0 || side[b] != 1)
                throw invalid_argument_error("edge does not cross the bipartition");
            if (!seen.insert({a, b}).second)
                throw invalid_argument_error("duplicate edge in bipartite graph");
            edges_.emplace_back(a, b);
            graph_.add_edge(a, b);
        }
        if (side[apex_] != 0)
            throw invalid_argument_error("apex must lie in part 1");
        for (int v : part2_)
            if (!graph_.adjacent(apex_, v))
                throw invalid_argument_error("apex is not adjacent to all of part 2");
        std::sort(edges_.begin(), edges_.end());
    }

    int n() const { return graph_.vertex_count(); }
    int m() const { return static_cast<int>(edges_.size()); }
    int n1() const { return static_cast<int>(part1_.size()); }
    int n2() const { return static_cast<int>(part2_.size()); }
    int apex() const { return apex_; }

    const std::vector<int>& part1() const { return part1_; }
    const std::vector<int>& part2() const { return part2_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const Graph& as_graph() const { return graph_; }

private:
    std::vector<int> part1_;
    std::vector<int> part2_;
    int apex_;
    std::vector<std::pair<int, int>> edges_;
    Graph graph_;
};

// Looks for a bipartition of H with an apex vertex. A vertex u works iff
// every component other than u's is a single isolated vertex (those can sit
// on u's side) and u is adjacent to the whole opposite color class of its
// own component. Candidates are tried in vertex-id order, so the result is
// deterministic. Returns nullopt when H is not bipartite or has no apex.
inline std::optional<BipartiteApexGraph> find_apex_bipartition(const Graph& h) {
    const int n = h.vertex_count();
    auto coloring = two_coloring(h);
    if (!coloring)
        return std::nullopt;

    // component labels
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1)
            continue;
        comp[root] = comp_count;
        stack.assign(1, root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : h.neighborhood(u))
                if (comp[v] == -1) {
                    comp[v] = comp_count;
                    stack.push_back(v);
                }
        }
        ++comp_count;
    }

    for (int u = 0; u < n; ++u) {
        bool ok = true;
        std::vector<int> part1, part2;
        for (int v = 0; v < n && ok; ++v) {
            if (comp[v] != comp[u]) {
                if (h.degree(v) != 0)
                    ok = false;
                else
                    part1.push_back(v); // isolated vertices can join u's side
            } else if ((*coloring)[v] == (*coloring)[u]) {
                part1.push_back(v);
            } else {
                if (!h.adjacent(u, v))
                    ok = false;
                part2.push_back(v);
            }
        }
        if (!ok)
            continue;
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (h.adjacent(a, b))
                    edges.emplace_back(a, b);
        return BipartiteApexGraph(std::move(part1), std::move(part2), std::move(edges), u);
    }
    return std::nullopt;
}

} // namespace apexhom

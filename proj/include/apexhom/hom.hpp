#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "apexhom/bignat.hpp"
#include "apexhom/errors.hpp"
#include "apexhom/graph.hpp"
#include "apexhom/rational.hpp"

namespace apexhom {

// Work guard for counting routines, measured in map-evaluation steps.
// Exceeding it raises resource_limit_error instead of grinding forever.
struct HomGuard {
    static constexpr std::uint64_t default_max_map_evals = 1'000'000'000ULL;
    std::uint64_t max_map_evals = default_max_map_evals;
};

struct HomCountResult {
    BigNat count;
    int h_vertices = 0;
    int g_vertices = 0;
    BigNat density_num; // == count
    BigNat density_den; // == N^|H|
    ExactRational density() const { return ExactRational{density_num, density_den}; }
};

// Reference counter: walks every one of the N^|H| maps and tests each H
// edge. No component factorization, no pruning; deliberately a separate
// code path from count_homs so the two can check each other.
inline BigNat count_homs_bruteforce(const Graph& h, const Graph& g,
                                    const HomGuard& guard = {}) {
    const int hn = h.vertex_count();
    const int gn = g.vertex_count();
    if (hn == 0)
        return BigNat{1u};
    if (gn == 0)
        return BigNat{0u};

    const BigNat total_maps = big_pow(BigNat{static_cast<unsigned long long>(gn)},
                                      static_cast<unsigned int>(hn));
    if (total_maps > BigNat{guard.max_map_evals})
        throw resource_limit_error("brute-force map space " + total_maps.to_string() +
                                   " exceeds guard " + std::to_string(guard.max_map_evals));

    std::vector<std::pair<int, int>> h_edges;
    for (int u = 0; u < hn; ++u)
        for (int v = u + 1; v < hn; ++v)
            if (h.adjacent(u, v))
                h_edges.emplace_back(u, v);

    std::vector<int> image(hn, 0);
    std::uint64_t count = 0;
    while (true) {
        bool good = true;
        for (const auto& [u, v] : h_edges)
            if (!g.adjacent(image[u], image[v])) {
                good = false;
                break;
            }
        if (good)
            ++count;
        int pos = hn - 1;
        while (pos >= 0 && image[pos] == gn - 1)
            image[pos--] = 0;
        if (pos < 0)
            break;
        ++image[pos];
    }
    return BigNat{count};
}

namespace detail {

// Backtracking counter for one connected component of H with >= 2 vertices.
// The vertex order starts at the smallest id and repeatedly appends the
// vertex with the most already-placed neighbors (ties to the smaller id),
// so candidate sets are always constrained by at least one placed image.
class ComponentCounter {
public:
    ComponentCounter(const Graph& h, const Graph& g, std::span<const int> component,
                     std::uint64_t work_budget)
        : h_(h), g_(g), budget_(work_budget) {
        build_order(component);
        const int depth = static_cast<int>(order_.size());
        masks_.assign(depth, std::vector<std::uint64_t>(g_.word_count(), 0));
        images_.assign(depth, 0);
    }

    // count of homomorphisms from the component into g; also reports work done
    unsigned __int128 count(std::uint64_t& work_used) {
        count_ = 0;
        work_ = 0;
        if (g_.vertex_count() > 0)
            descend(0);
        work_used = work_;
        return count_;
    }

private:
    void build_order(std::span<const int> component) {
        std::vector<int> pool(component.begin(), component.end());
        std::sort(pool.begin(), pool.end());
        std::vector<bool> placed(h_.vertex_count(), false);
        order_.push_back(pool.front());
        placed[pool.front()] = true;
        while (order_.size() < pool.size()) {
            int best = -1;
            int best_links = -1;
            for (int v : pool) {
                if (placed[v])
                    continue;
                int links = 0;
                for (int u : order_)
                    if (h_.adjacent(v, u))
                        ++links;
                if (links > best_links) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = true;
            order_.push_back(best);
        }
        // for each position, which earlier positions hold H-neighbors
        prev_neighbors_.resize(order_.size());
        for (std::size_t i = 1; i < order_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (h_.adjacent(order_[i], order_[j]))
                    prev_neighbors_[i].push_back(static_cast<int>(j));
    }

    void fill_candidates(int depth) {
        auto& mask = masks_[depth];
        if (prev_neighbors_[depth].empty()) {
            mask = g_.full_mask();
            return;
        }
        const int first = prev_neighbors_[depth].front();
        auto row0 = g_.row(images_[first]);
        std::copy(row0.begin(), row0.end(), mask.begin());
        for (std::size_t t = 1; t < prev_neighbors_[depth].size(); ++t) {
            auto row = g_.row(images_[prev_neighbors_[depth][t]]);
            for (std::size_t w = 0; w < mask.size(); ++w)
                mask[w] &= row[w];
        }
    }

    void descend(int depth) {
        if (++work_ > budget_)
            throw resource_limit_error("homomorphism count exceeded work guard of " +
                                       std::to_string(budget_) + " steps");
        fill_candidates(depth);
        const auto& mask = masks_[depth];
        if (depth + 1 == static_cast<int>(order_.size())) {
            count_ += static_cast<unsigned>(detail::popcount_words(mask));
            return;
        }
        for (std::size_t w = 0; w < mask.size(); ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                images_[depth] = static_cast<int>(w * 64 + b);
                descend(depth + 1);
            }
        }
    }

    const Graph& h_;
    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t work_ = 0;
    unsigned __int128 count_ = 0;
    std::vector<int> order_;
    std::vector<std::vector<int>> prev_neighbors_;
    std::vector<std::vector<std::uint64_t>> masks_;
    std::vector<int> images_;
};

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> components;
    std::vector<bool> seen(n, false);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<int> comp;
        seen[root] = true;
        stack.assign(1, root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.neighborhood(u))
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

} // namespace detail

// Exact homomorphism count h_H(G). Factorizes over the connected
// components of H (isolated H-vertices contribute a factor N each) and
// counts each component by candidate-filtered backtracking. Agrees with
// count_homs_bruteforce everywhere; deterministic regardless of input
// order.
inline BigNat count_homs(const Graph& h, const Graph& g, const HomGuard& guard = {}) {
    const int gn = g.vertex_count();
    if (h.vertex_count() == 0)
        return BigNat{1u};

    BigNat result{1u};
    std::uint64_t work_left = guard.max_map_evals;
    for (const auto& comp : detail::connected_components(h)) {
        if (comp.size() == 1) {
            result *= BigNat{static_cast<unsigned long long>(gn)};
            continue;
        }
        detail::ComponentCounter counter(h, g, comp, work_left);
        std::uint64_t used = 0;
        const unsigned __int128 comp_count = counter.count(used);
        work_left -= std::min(work_left, used);
        result *= from_u128(comp_count);
        if (result.is_zero())
            return result;
    }
    return result;
}

// h_H(G) together with the exact density t_H(G) = h_H(G) / N^|H|.
inline HomCountResult hom_density(const Graph& h, const Graph& g, const HomGuard& guard = {}) {
    if (g.vertex_count() == 0)
        throw invalid_argument_error("homomorphism density into the empty graph");
    HomCountResult result;
    result.count = count_homs(h, g, guard);
    result.h_vertices = h.vertex_count();
    result.g_vertices = g.vertex_count();
    result.density_num = result.count;
    result.density_den = big_pow(BigNat{static_cast<unsigned long long>(g.vertex_count())},
                                 static_cast<unsigned int>(h.vertex_count()));
    return result;
}

} // namespace apexhom

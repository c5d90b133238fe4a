#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "apexhom/bignat.hpp"
#include "apexhom/errors.hpp"

namespace apexhom {

// Number of ordered k-tuples over a t-element set that use every element,
// i.e. surjections [k] -> [t]. Computed by the additive recurrence
// S(k,t) = t * (S(k-1,t-1) + S(k-1,t)), which stays in naturals.
inline BigNat surjection_count(int k, int t) {
    if (k < 0 || t < 0)
        throw invalid_argument_error("surjection_count needs non-negative arguments");
    if (t > k)
        return BigNat{0u};
    std::vector<BigNat> row(static_cast<std::size_t>(t) + 1, BigNat{0u});
    row[0] = BigNat{1u}; // S(0,0)
    for (int kk = 1; kk <= k; ++kk) {
        for (int tt = std::min(t, kk); tt >= 1; --tt)
            row[tt] = BigNat{static_cast<unsigned long long>(tt)} * (row[tt - 1] + row[tt]);
        row[0] = BigNat{0u}; // S(kk,0) = 0 for kk >= 1
    }
    return row[t];
}

// All S(k,t) for t = 0..k in one pass.
inline std::vector<BigNat> surjection_row(int k) {
    std::vector<BigNat> row(static_cast<std::size_t>(k) + 1, BigNat{0u});
    row[0] = BigNat{1u};
    for (int kk = 1; kk <= k; ++kk) {
        for (int tt = kk; tt >= 1; --tt)
            row[tt] = BigNat{static_cast<unsigned long long>(tt)} * (row[tt - 1] + row[tt]);
        row[0] = BigNat{0u};
    }
    return row;
}

namespace detail {

template <class Visit>
void subsets_rec(std::span<const int> ground, int max_size, std::size_t start,
                 std::vector<int>& current, Visit& visit) {
    for (std::size_t i = start; i < ground.size(); ++i) {
        current.push_back(ground[i]);
        visit(current);
        if (static_cast<int>(current.size()) < max_size)
            subsets_rec(ground, max_size, i + 1, current, visit);
        current.pop_back();
    }
}

} // namespace detail

// Visits every nonempty subset of `ground` with at most max_size elements,
// in lexicographic DFS order. The subset passed to the visitor is sorted
// the way `ground` is sorted.
template <class Visit>
void for_each_support_set(std::span<const int> ground, int max_size, Visit&& visit) {
    if (max_size <= 0)
        return;
    std::vector<int> current;
    detail::subsets_rec(ground, max_size, 0, current, visit);
}

// Sum over all ordered k-tuples drawn from `ground`, where the summand
// depends only on the tuple's support set: returns
//   sum_T  S(k,|T|) * weight(T)
// over nonempty subsets T of size <= k. A tuple count is the special case
// weight in {0,1}.
template <class WeightFn>
BigNat sum_over_tuples_by_support(std::span<const int> ground, int k, WeightFn&& weight) {
    if (k < 1)
        throw invalid_argument_error("tuple length must be at least 1");
    const std::vector<BigNat> surj = surjection_row(k);
    BigNat total{0u};
    for_each_support_set(ground, k, [&](const std::vector<int>& subset) {
        BigNat w = weight(subset);
        if (!w.is_zero())
            total += surj[subset.size()] * w;
    });
    return total;
}

} // namespace apexhom

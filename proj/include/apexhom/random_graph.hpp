#pragma once

#include <cstdint>
#include <random>

#include "apexhom/errors.hpp"
#include "apexhom/graph.hpp"
#include "apexhom/rational.hpp"

namespace apexhom {

// G(N, p) with an exact rational p and a fixed, documented seed mapping:
// a std::mt19937_64 seeded with `seed` produces one 64-bit draw x per
// unordered pair, pairs visited in row-major order (0,1), (0,2), ...,
// (N-2,N-1); the pair becomes an edge iff x * den(p) < num(p) * 2^64.
// p = 0 and p = 1 are exact; the same (N, p, seed) always yields the same
// graph. The mapping is part of the library contract and must not change
// within a release.
inline Graph random_graph(int n, const ExactRational& p, std::uint64_t seed) {
    const ExactRational one{1u, 1u};
    if (rational_cmp(p, one) == Ordering::greater)
        throw invalid_argument_error("edge probability above 1");

    std::mt19937_64 rng(seed);
    Graph g(n);
    const BigNat two64 = big_pow(BigNat{2u}, 64);
    const BigNat scaled_num = p.num() * two64;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t draw = rng();
            if (BigNat{draw} * p.den() < scaled_num)
                g.add_edge(u, v);
        }
    return g;
}

} // namespace apexhom

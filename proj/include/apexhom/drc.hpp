#pragma once

#include <vector>

#include "apexhom/bignat.hpp"
#include "apexhom/errors.hpp"
#include "apexhom/graph.hpp"
#include "apexhom/rational.hpp"
#include "apexhom/tuples.hpp"

namespace apexhom {

// Parameters of the good/bad vertex audit on a host graph with N vertices
// and E edges, run at level n. Density p = 2E/N^2 is never materialized;
// every threshold stays an exact rational in E, N, n.
struct DrcParams {
    int n = 0;      // audit level: tuple lengths k = 1..n
    int host_n = 0; // N
    BigNat host_e;  // E

    static DrcParams for_graph(const Graph& g, int n) {
        if (n < 1)
            throw invalid_argument_error("audit level n must be >= 1");
        if (g.vertex_count() == 0)
            throw invalid_argument_error("audit of the empty graph");
        DrcParams params;
        params.n = n;
        params.host_n = g.vertex_count();
        params.host_e = BigNat{static_cast<unsigned long long>(g.edge_count())};
        return params;
    }

    // (2n)^{-n-1} p^k N  =  (2E)^k N / ((2n)^{n+1} N^{2k})
    ExactRational tuple_threshold(unsigned int k) const {
        const BigNat two_e = BigNat{2u} * host_e;
        const BigNat big_n{static_cast<unsigned long long>(host_n)};
        const BigNat two_n{static_cast<unsigned long long>(2 * n)};
        return ExactRational{big_pow(two_e, k) * big_n,
                             big_pow(two_n, static_cast<unsigned int>(n) + 1) *
                                 big_pow(big_n, 2 * k)};
    }

    ExactRational badness_fraction() const {
        return ExactRational{BigNat{1u}, BigNat{static_cast<unsigned long long>(2 * n)}};
    }
};

// A length-k tuple is deficient when its common neighborhood is at most
// tuple_threshold(k). Deficiency depends only on the support set, so
// tuples are counted support-set by support-set.
inline BigNat deficient_tuple_count(const Graph& g, const DrcParams& params, int vertex,
                                    unsigned int k) {
    const auto ground = g.neighborhood(vertex);
    const ExactRational threshold = params.tuple_threshold(k);
    return sum_over_tuples_by_support(ground, k, [&](const std::vector<int>& support) {
        const BigNat common{static_cast<unsigned long long>(g.common_degree(support))};
        if (compare_nat_rational(common, threshold) != Ordering::greater)
            return BigNat{1u};
        return BigNat{0u};
    });
}

struct KAudit {
    unsigned int k = 0;
    BigNat deficient_count;
    bool bad = false; // deficient_count >= |N(v)|^k / (2n)
};

struct VertexAudit {
    int vertex = -1;
    int degree = 0;
    std::vector<KAudit> per_k;
    bool good = false;
};

inline VertexAudit classify_vertex(const Graph& g, const DrcParams& params, int vertex) {
    VertexAudit audit;
    audit.vertex = vertex;
    audit.degree = g.degree(vertex);
    audit.good = true;
    const BigNat deg{static_cast<unsigned long long>(audit.degree)};
    const BigNat two_n{static_cast<unsigned long long>(2 * params.n)};
    for (unsigned int k = 1; k <= static_cast<unsigned int>(params.n); ++k) {
        KAudit ka;
        ka.k = k;
        ka.deficient_count = deficient_tuple_count(g, params, vertex, k);
        ka.bad = ka.deficient_count * two_n >= big_pow(deg, k);
        if (ka.bad)
            audit.good = false;
        audit.per_k.push_back(std::move(ka));
    }
    return audit;
}

// X_k = sum over deficient tuples S in V^k of |N(S)|; equivalently the
// number of pairs (v, S) with v adjacent to all of S and S deficient.
inline BigNat count_Xk(const Graph& g, const DrcParams& params, unsigned int k) {
    std::vector<int> ground(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        ground[static_cast<std::size_t>(v)] = v;
    const ExactRational threshold = params.tuple_threshold(k);
    return sum_over_tuples_by_support(ground, k, [&](const std::vector<int>& support) {
        const BigNat common{static_cast<unsigned long long>(g.common_degree(support))};
        if (compare_nat_rational(common, threshold) != Ordering::greater)
            return common;
        return BigNat{0u};
    });
}

struct XkCheck {
    unsigned int k = 0;
    BigNat xk;
    ExactRational upper{BigNat{0u}, BigNat{1u}}; // (2n)^{-n-1} p^k N^{k+1}
    bool holds = false;
    BigNat bad_degree_sum;     // sum of deg(v) over v bad with respect to k
    bool bad_degree_holds = false; // (sum)^k (2n)^n <= (2E)^k
};

struct GoodstepReport {
    DrcParams params;
    std::vector<VertexAudit> audits;
    std::vector<XkCheck> xk_checks;
    BigNat good_degree_sum;
    ExactRational bound{BigNat{0u}, BigNat{1u}}; // pN^2/2, which is E exactly
    bool holds = false;
};

inline GoodstepReport verify_goodstep(const Graph& g, int n) {
    GoodstepReport report;
    report.params = DrcParams::for_graph(g, n);
    for (int v = 0; v < g.vertex_count(); ++v)
        report.audits.push_back(classify_vertex(g, report.params, v));

    for (const auto& audit : report.audits)
        if (audit.good)
            report.good_degree_sum += BigNat{static_cast<unsigned long long>(audit.degree)};
    const BigNat big_n2 = big_pow(BigNat{static_cast<unsigned long long>(report.params.host_n)}, 2);
    report.bound = ExactRational{BigNat{2u} * report.params.host_e * big_n2,
                                 BigNat{2u} * big_n2};
    report.holds =
        compare_nat_rational(report.good_degree_sum, report.bound) != Ordering::less;

    const BigNat two_e = BigNat{2u} * report.params.host_e;
    const BigNat two_n{static_cast<unsigned long long>(2 * n)};
    const BigNat big_n{static_cast<unsigned long long>(report.params.host_n)};
    for (unsigned int k = 1; k <= static_cast<unsigned int>(n); ++k) {
        XkCheck check;
        check.k = k;
        check.xk = count_Xk(g, report.params, k);
        check.upper = ExactRational{big_pow(two_e, k) * big_pow(big_n, k + 1),
                                    big_pow(two_n, static_cast<unsigned int>(n) + 1) *
                                        big_pow(big_n, 2 * k)};
        check.holds = compare_nat_rational(check.xk, check.upper) != Ordering::greater;
        for (const auto& audit : report.audits)
            if (audit.per_k[k - 1].bad)
                check.bad_degree_sum += BigNat{static_cast<unsigned long long>(audit.degree)};
        check.bad_degree_holds =
            big_pow(check.bad_degree_sum, k) * big_pow(two_n, static_cast<unsigned int>(n)) <=
            big_pow(two_e, k);
        report.xk_checks.push_back(std::move(check));
    }
    return report;
}

} // namespace apexhom

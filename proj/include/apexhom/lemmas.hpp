#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "apexhom/bignat.hpp"
#include "apexhom/bipartite.hpp"
#include "apexhom/drc.hpp"
#include "apexhom/errors.hpp"
#include "apexhom/graph.hpp"
#include "apexhom/hom.hpp"
#include "apexhom/hypergraph.hpp"
#include "apexhom/rational.hpp"
#include "apexhom/sidorenko.hpp"
#include "apexhom/tuples.hpp"

namespace apexhom {

enum class LemmaId { randomembed, importantstep, tensor, main_theorem };

inline const char* lemma_id_name(LemmaId id) {
    switch (id) {
    case LemmaId::randomembed: return "randomembed";
    case LemmaId::importantstep: return "importantstep";
    case LemmaId::tensor: return "tensor";
    case LemmaId::main_theorem: return "main-theorem";
    }
    return "unknown";
}

// Verdict container shared by all lemma verifiers. The claim is always
// lhs >= rhs_num / rhs_den (equality for the tensor identity), decided by
// cross-multiplication. A satisfied hypothesis with a failed conclusion is
// a violation: a bug, never an expected outcome.
struct LemmaReport {
    LemmaId which = LemmaId::randomembed;
    bool hypothesis_satisfied = false;
    bool conclusion_holds = false;
    BigNat lhs;
    BigNat rhs_num;
    BigNat rhs_den{1u};
    std::map<std::string, std::string> details;
    std::vector<LemmaReport> sub_reports;

    bool violation() const { return hypothesis_satisfied && !conclusion_holds; }
};

// Union-bound embedding lemma: if for every k in 1..v the number of
// non-edge k-tuples over the targets is at most T^k/(2 e_bound), then the
// number of hypergraph homomorphisms is at least T^v/2.
inline LemmaReport verify_randomembed(const SetHypergraph& hyp, const ThresholdPredicate& pred,
                                      unsigned int e_bound,
                                      std::uint64_t max_map_evals = 1'000'000'000ULL) {
    if (e_bound == 0)
        throw invalid_argument_error("e_bound must be positive");
    if (e_bound < hyp.edges.size())
        throw invalid_argument_error("e_bound below hypergraph edge count");

    LemmaReport report;
    report.which = LemmaId::randomembed;
    const int v = hyp.vertex_count;
    const auto& targets = pred.targets();
    const BigNat big_t{static_cast<unsigned long long>(targets.size())};
    const BigNat two_e_bound = BigNat{2u} * BigNat{e_bound};

    report.hypothesis_satisfied = true;

    // non-edge k-tuples counted support-set by support-set
    std::string per_k;
    for (unsigned int k = 1; k <= static_cast<unsigned int>(v); ++k) {
        const BigNat non_edges =
            sum_over_tuples_by_support(targets, k, [&](const std::vector<int>& support) {
                if (!pred.is_edge_with_length(support, k))
                    return BigNat{1u};
                return BigNat{0u};
            });
        if (!per_k.empty())
            per_k += ";";
        per_k += "k=" + std::to_string(k) + ":" + non_edges.to_string();
        if (non_edges * two_e_bound > big_pow(big_t, k))
            report.hypothesis_satisfied = false;
    }
    report.details["non_edge_counts"] = per_k;
    report.details["targets"] = big_t.to_string();
    report.details["vertices"] = std::to_string(v);
    report.details["edges"] = std::to_string(hyp.edges.size());
    report.details["e_bound"] = std::to_string(e_bound);

    report.lhs = count_hyper_homs(hyp, pred, max_map_evals);
    report.rhs_num = big_pow(big_t, static_cast<unsigned int>(v));
    report.rhs_den = BigNat{2u};
    report.conclusion_holds = report.lhs * report.rhs_den >= report.rhs_num;
    return report;
}

// Unconditional apex lower bound: h (2n)^{n^2} N^{2m} >= (2E)^m N^n.
// Diagnostics reconstruct the argument: good anchors from the degree
// audit, the link hypergraph, and one embedding report per anchor with
// e_bound = n. The audit supplies non-edge bounds for k = 1..n measured
// against |N(anchor)|^k; the embedding consumes k = 1..n2.
inline LemmaReport verify_importantstep(const BipartiteApexGraph& h, const Graph& g,
                                        const HomGuard& guard = {}) {
    if (g.vertex_count() == 0)
        throw invalid_argument_error("host graph must be nonempty");

    LemmaReport report;
    report.which = LemmaId::importantstep;
    report.hypothesis_satisfied = true;

    const unsigned int n = static_cast<unsigned int>(h.n());
    const unsigned int m = static_cast<unsigned int>(h.m());
    const BigNat big_n{static_cast<unsigned long long>(g.vertex_count())};
    const BigNat two_e = BigNat{2u} * BigNat{static_cast<unsigned long long>(g.edge_count())};
    const BigNat two_n{static_cast<unsigned long long>(2 * h.n())};

    report.lhs = count_homs(h.as_graph(), g, guard);
    report.rhs_num = big_pow(two_e, m) * big_pow(big_n, n);
    report.rhs_den = big_pow(two_n, n * n) * big_pow(big_n, 2 * m);
    report.conclusion_holds = report.lhs * report.rhs_den >= report.rhs_num;

    const GoodstepReport audit = verify_goodstep(g, h.n());
    const SetHypergraph link = link_hypergraph(h);
    std::string anchors;
    for (const auto& va : audit.audits) {
        if (!va.good)
            continue;
        if (!anchors.empty())
            anchors += ";";
        const ThresholdPredicate pred(g, va.vertex, h.n());
        LemmaReport sub = verify_randomembed(link, pred, n);
        sub.details["anchor"] = std::to_string(va.vertex);
        anchors += "v=" + std::to_string(va.vertex) + ",deg=" + std::to_string(va.degree) +
                   ",link_homs=" + sub.lhs.to_string();
        report.sub_reports.push_back(std::move(sub));
    }
    report.details["good_anchors"] = anchors.empty() ? "none" : anchors;
    report.details["k_range"] = "audit supplies k=1.." + std::to_string(n) +
                                "; embedding consumes k=1.." + std::to_string(h.n2());
    report.details["non_edge_base"] = "counted over N(anchor), bound |N(anchor)|^k/(2n)";
    report.details["anchor_product"] = "choices multiplied over V1 minus the apex";
    return report;
}

inline LemmaReport verify_importantstep(const Graph& h, const Graph& g,
                                        const HomGuard& guard = {}) {
    const auto apex = find_apex_bipartition(h);
    if (!apex)
        throw invalid_argument_error("H has no apex bipartition");
    return verify_importantstep(*apex, g, guard);
}

// Count-level tensor identity: h_H(F x G) = h_H(F) h_H(G).
inline LemmaReport verify_tensor_multiplicativity(const Graph& h, const Graph& f, const Graph& g,
                                                  const HomGuard& guard = {}) {
    LemmaReport report;
    report.which = LemmaId::tensor;
    report.hypothesis_satisfied = true;
    const Graph product = tensor_product(f, g);
    report.lhs = count_homs(h, product, guard);
    const BigNat hf = count_homs(h, f, guard);
    const BigNat hg = count_homs(h, g, guard);
    report.rhs_num = hf * hg;
    report.rhs_den = BigNat{1u};
    report.conclusion_holds = report.lhs == report.rhs_num;
    report.details["homs_f"] = hf.to_string();
    report.details["homs_g"] = hg.to_string();
    report.details["product_vertices"] = std::to_string(product.vertex_count());
    report.details["product_edges"] = std::to_string(product.edge_count());
    return report;
}

// Sidorenko inequality for apex H plus its tensor-power scaffolding: for
// r up to max_power, h_H(G^r) = h_H(G)^r and the unconditional apex bound
// holds on G^r. A failed base inequality with intact scaffolding would
// localize a bug; none is expected.
inline LemmaReport verify_main_theorem(const BipartiteApexGraph& h, const Graph& g,
                                       unsigned int max_power, const HomGuard& guard = {}) {
    if (max_power < 1)
        throw invalid_argument_error("max_power must be >= 1");
    if (g.vertex_count() == 0)
        throw invalid_argument_error("host graph must be nonempty");

    LemmaReport report;
    report.which = LemmaId::main_theorem;
    report.hypothesis_satisfied = true;

    const SidorenkoVerdict base = sidorenko_check(h, g, guard);
    report.lhs = base.lhs;
    report.rhs_num = base.rhs;
    report.rhs_den = BigNat{1u};
    report.conclusion_holds = base.holds;
    if (base.slack_ratio)
        report.details["slack_ratio"] = base.slack_ratio->to_string();
    report.details["hom_count"] = base.hom_count.to_string();

    const unsigned int n = static_cast<unsigned int>(h.n());
    const unsigned int m = static_cast<unsigned int>(h.m());
    const BigNat two_n{static_cast<unsigned long long>(2 * h.n())};

    Graph power = g;
    for (unsigned int r = 1; r <= max_power; ++r) {
        if (r > 1)
            power = tensor_product(power, g);
        const BigNat big_nr{static_cast<unsigned long long>(power.vertex_count())};
        if (big_pow(big_nr, n) > BigNat{guard.max_map_evals})
            throw resource_limit_error("tensor power exceeds map evaluation guard");
        const BigNat hr = count_homs(h.as_graph(), power, guard);
        const bool power_equal = hr == big_pow(base.hom_count, r);
        const BigNat two_er =
            BigNat{2u} * BigNat{static_cast<unsigned long long>(power.edge_count())};
        const bool bound_holds =
            hr * big_pow(two_n, n * n) * big_pow(big_nr, 2 * m) >=
            big_pow(two_er, m) * big_pow(big_nr, n);
        if (!power_equal || !bound_holds)
            report.conclusion_holds = false;
        report.details["r=" + std::to_string(r)] =
            "homs=" + hr.to_string() + ",power_equal=" + (power_equal ? "true" : "false") +
            ",apex_bound=" + (bound_holds ? "true" : "false");
    }
    return report;
}

} // namespace apexhom

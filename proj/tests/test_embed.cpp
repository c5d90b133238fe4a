#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "apexhom/bignat.hpp"
#include "apexhom/bipartite.hpp"
#include "apexhom/graph.hpp"
#include "apexhom/hypergraph.hpp"
#include "apexhom/lemmas.hpp"
#include "apexhom/random_graph.hpp"
#include "apexhom/rational.hpp"
#include "apexhom/sidorenko.hpp"

#include "corpus.hpp"

using apexhom::BigNat;
using apexhom::big_pow;
using apexhom::BipartiteApexGraph;
using apexhom::ExactRational;
using apexhom::Graph;
using apexhom::LemmaId;
using apexhom::SetHypergraph;
using apexhom::ThresholdPredicate;

namespace {

BipartiteApexGraph apex_k2() { return {{0}, {1}, {{0, 1}}, 0}; }
BipartiteApexGraph apex_star2() { return {{0}, {1, 2}, {{0, 1}, {0, 2}}, 0}; }
BipartiteApexGraph apex_c4() { return {{0, 1}, {2, 3}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, 0}; }

// host where the edge verdict genuinely depends on tuple length: a clique
// on {0,2..8} missing (6,8) and (7,8), plus the pendant 1 on 0, has E = 27,
// so at level n = 1 the thresholds are 3/2 for k = 1 and exactly 1 for
// k = 2; the pendant's common neighborhood has size 1, between the two
Graph pendant_host() {
    Graph g(9);
    for (int u : {0, 2, 3, 4, 5, 6, 7, 8})
        for (int v : {0, 2, 3, 4, 5, 6, 7, 8})
            if (u < v)
                g.add_edge(u, v);
    Graph out(9);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            if (g.adjacent(u, v) && !(u == 6 && v == 8) && !(u == 7 && v == 8))
                out.add_edge(u, v);
    out.add_edge(0, 1);
    return out;
}

// brute-force hypergraph homomorphism count: every map, every edge image
BigNat naive_hyper_homs(const SetHypergraph& hyp, const ThresholdPredicate& pred) {
    const auto& targets = pred.targets();
    const int v = hyp.vertex_count;
    std::vector<int> empty_tuple;
    for (const auto& edge : hyp.edges)
        if (edge.empty() && !pred.is_edge(empty_tuple))
            return BigNat{0u};
    if (v == 0)
        return BigNat{1u};
    if (targets.empty())
        return BigNat{0u};
    std::vector<std::size_t> odo(static_cast<std::size_t>(v), 0);
    unsigned long long count = 0;
    while (true) {
        bool ok = true;
        for (const auto& edge : hyp.edges) {
            std::vector<int> tuple;
            for (int x : edge)
                tuple.push_back(targets[odo[static_cast<std::size_t>(x)]]);
            if (!pred.is_edge(tuple)) {
                ok = false;
                break;
            }
        }
        if (ok)
            ++count;
        std::size_t pos = odo.size();
        while (pos > 0 && odo[pos - 1] == targets.size() - 1)
            odo[--pos] = 0;
        if (pos == 0)
            break;
        ++odo[pos - 1];
    }
    return BigNat{count};
}

} // namespace

TEST_CASE("hypergraph validation") {
    SetHypergraph ok;
    ok.vertex_count = 3;
    ok.edges = {{0, 2}, {1}};
    CHECK_NOTHROW(ok.check());

    SetHypergraph range;
    range.vertex_count = 2;
    range.edges = {{0, 2}};
    CHECK_THROWS_AS(range.check(), apexhom::invalid_argument_error);

    SetHypergraph unsorted;
    unsorted.vertex_count = 3;
    unsorted.edges = {{2, 0}};
    CHECK_THROWS_AS(unsorted.check(), apexhom::invalid_argument_error);

    SetHypergraph repeat;
    repeat.vertex_count = 3;
    repeat.edges = {{1, 1}};
    CHECK_THROWS_AS(repeat.check(), apexhom::invalid_argument_error);
}

TEST_CASE("link hypergraph construction") {
    const SetHypergraph k2 = apexhom::link_hypergraph(apex_k2());
    CHECK(k2.vertex_count == 1);
    CHECK(k2.edges.empty());

    const SetHypergraph c4 = apexhom::link_hypergraph(apex_c4());
    CHECK(c4.vertex_count == 2);
    REQUIRE(c4.edges.size() == 1);
    CHECK(c4.edges[0] == std::vector<int>{0, 1});

    // two non-apex vertices with the same single neighbor: duplicate edges stay
    const BipartiteApexGraph twin({0, 1, 2}, {3, 4},
                                  {{0, 3}, {0, 4}, {1, 3}, {2, 3}}, 0);
    const SetHypergraph link = apexhom::link_hypergraph(twin);
    CHECK(link.vertex_count == 2);
    REQUIRE(link.edges.size() == 2);
    CHECK(link.edges[0] == std::vector<int>{0});
    CHECK(link.edges[1] == std::vector<int>{0});
}

TEST_CASE("threshold predicate length sensitivity") {
    const Graph host = pendant_host();
    CHECK(host.edge_count() == 27);
    const ThresholdPredicate pred(host, 0, 1);
    CHECK(pred.targets().size() == 8);
    CHECK(pred.threshold(1) == ExactRational{3u, 2u});
    CHECK(pred.threshold(2) == ExactRational{1u, 1u});

    // the pendant vertex: common neighborhood size 1
    const std::vector<int> pendant{1};
    CHECK_FALSE(pred.is_edge_with_length(pendant, 1));
    CHECK(pred.is_edge_with_length(pendant, 2));
    CHECK_FALSE(pred.is_edge(pendant));
    const std::vector<int> doubled{1, 1};
    CHECK(pred.is_edge(doubled));

    // permutation and duplication never change the verdict at fixed length
    const std::vector<int> pair{2, 3};
    const std::vector<int> rev{3, 2};
    const std::vector<int> padded{2, 3, 2};
    CHECK(pred.is_edge(pair) == pred.is_edge(rev));
    CHECK(pred.is_edge_with_length(pair, 3) == pred.is_edge(padded));
}

TEST_CASE("hypergraph homomorphism counting on fixed shapes") {
    const Graph k4 = apexhom::complete_graph(4);
    const ThresholdPredicate pred(k4, 0, 2);

    SetHypergraph lonely;
    lonely.vertex_count = 2;
    CHECK(apexhom::count_hyper_homs(lonely, pred) == BigNat{9u});

    SetHypergraph one_edge;
    one_edge.vertex_count = 2;
    one_edge.edges = {{0, 1}};
    CHECK(apexhom::count_hyper_homs(one_edge, pred) == BigNat{9u});
    CHECK(naive_hyper_homs(one_edge, pred) == BigNat{9u});

    SetHypergraph empty_hyp;
    empty_hyp.vertex_count = 0;
    CHECK(apexhom::count_hyper_homs(empty_hyp, pred) == BigNat{1u});

    const Graph p3 = apexhom::path_graph(3);
    const ThresholdPredicate isolated(p3, 0, 1);
    SetHypergraph any;
    any.vertex_count = 1;
    any.edges = {{0}};
    // targets of vertex 0 in P3: just vertex 1
    CHECK(isolated.targets() == std::vector<int>{1});
    CHECK(apexhom::count_hyper_homs(any, isolated) == naive_hyper_homs(any, isolated));
}

TEST_CASE("hypergraph homomorphism counting matches brute force") {
    std::mt19937_64 gen(606);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph host = apexhom::random_graph(6 + trial % 3, ExactRational{2u, 3u},
                                                 8800 + trial);
        std::uniform_int_distribution<int> anchor_dist(0, host.vertex_count() - 1);
        const int anchor = anchor_dist(gen);
        const int n = 1 + trial % 3;
        const ThresholdPredicate pred(host, anchor, n);

        SetHypergraph hyp;
        hyp.vertex_count = 2 + trial % 2;
        std::uniform_int_distribution<int> coin(0, 1);
        for (int e = 0; e < 2; ++e) {
            std::vector<int> edge;
            for (int x = 0; x < hyp.vertex_count; ++x)
                if (coin(gen))
                    edge.push_back(x);
            if (!edge.empty())
                hyp.edges.push_back(edge);
        }
        CHECK(apexhom::count_hyper_homs(hyp, pred) == naive_hyper_homs(hyp, pred));
    }

    // length-sensitive host, where support-size shortcuts would miscount
    const Graph host = pendant_host();
    const ThresholdPredicate pred(host, 0, 1);
    SetHypergraph hyp;
    hyp.vertex_count = 2;
    hyp.edges = {{0}, {0, 1}};
    CHECK(apexhom::count_hyper_homs(hyp, pred) == naive_hyper_homs(hyp, pred));
}

TEST_CASE("hypergraph counting guard") {
    const Graph k5 = apexhom::complete_graph(5);
    const ThresholdPredicate pred(k5, 0, 2);
    SetHypergraph hyp;
    hyp.vertex_count = 6;
    CHECK_THROWS_AS(apexhom::count_hyper_homs(hyp, pred, 10), apexhom::resource_limit_error);
}

TEST_CASE("embedding lemma argument checks") {
    const Graph k4 = apexhom::complete_graph(4);
    const ThresholdPredicate pred(k4, 0, 2);
    SetHypergraph two;
    two.vertex_count = 2;
    two.edges = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(apexhom::verify_randomembed(two, pred, 0), apexhom::invalid_argument_error);
    CHECK_THROWS_AS(apexhom::verify_randomembed(two, pred, 1), apexhom::invalid_argument_error);
    CHECK_NOTHROW(apexhom::verify_randomembed(two, pred, 2));
}

TEST_CASE("embedding lemma on an accepting instance") {
    const Graph k4 = apexhom::complete_graph(4);
    const ThresholdPredicate pred(k4, 0, 2);
    SetHypergraph hyp;
    hyp.vertex_count = 2;
    hyp.edges = {{0, 1}};
    const auto report = apexhom::verify_randomembed(hyp, pred, 3);
    CHECK(report.which == LemmaId::randomembed);
    CHECK(report.hypothesis_satisfied);
    CHECK(report.conclusion_holds);
    CHECK_FALSE(report.violation());
    CHECK(report.lhs == BigNat{9u});
    CHECK(report.rhs_num == BigNat{9u});
    CHECK(report.rhs_den == BigNat{2u});
    CHECK(report.details.at("non_edge_counts") == "k=1:0;k=2:0");
    CHECK(report.details.at("targets") == "3");
    CHECK(report.details.at("e_bound") == "3");
}

TEST_CASE("embedding lemma sees the pendant non-edge") {
    const Graph host = pendant_host();
    const ThresholdPredicate pred(host, 0, 1);
    SetHypergraph hyp;
    hyp.vertex_count = 1;
    hyp.edges = {{0}};

    const auto report = apexhom::verify_randomembed(hyp, pred, 1);
    // exactly one of the eight singleton tuples misses the k=1 threshold
    CHECK(report.details.at("non_edge_counts") == "k=1:1");
    CHECK(report.hypothesis_satisfied); // 1 * 2 <= 8
    CHECK(report.lhs == BigNat{7u});
    CHECK(report.rhs_num == BigNat{8u});
    CHECK(report.conclusion_holds); // 7 * 2 >= 8
}

TEST_CASE("embedding lemma reports an unsatisfied hypothesis without violation") {
    // clique on {0,2..7} plus pendants 1 and 8 on vertex 0: E = 23, level 1
    // threshold for k = 1 is 23/18 > 1, so two singleton non-edges
    Graph host(9);
    for (int u : {0, 2, 3, 4, 5, 6, 7})
        for (int v : {2, 3, 4, 5, 6, 7})
            if (u < v)
                host.add_edge(u, v);
    host.add_edge(0, 1);
    host.add_edge(0, 8);
    CHECK(host.edge_count() == 23);

    const ThresholdPredicate pred(host, 0, 1);
    SetHypergraph hyp;
    hyp.vertex_count = 1;
    hyp.edges = {{0}};

    const auto tight = apexhom::verify_randomembed(hyp, pred, 2);
    CHECK(tight.details.at("non_edge_counts") == "k=1:2");
    CHECK(tight.hypothesis_satisfied); // 2 * 4 <= 8

    const auto loose = apexhom::verify_randomembed(hyp, pred, 3);
    CHECK_FALSE(loose.hypothesis_satisfied); // 2 * 6 > 8
    CHECK_FALSE(loose.violation());
    CHECK(loose.lhs == BigNat{6u});
}

TEST_CASE("embedding lemma hypothesis forces the conclusion") {
    std::mt19937_64 gen(707);
    int satisfied = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const Graph host = apexhom::random_graph(7, ExactRational{1u, 2u}, 9900 + trial);
        std::uniform_int_distribution<int> anchor_dist(0, 6);
        const int anchor = anchor_dist(gen);
        const ThresholdPredicate pred(host, anchor, 2);
        SetHypergraph hyp;
        hyp.vertex_count = 2;
        hyp.edges = {{0, 1}};
        const auto report = apexhom::verify_randomembed(hyp, pred, 2);
        if (report.hypothesis_satisfied) {
            ++satisfied;
            CHECK(report.conclusion_holds);
        }
        CHECK_FALSE(report.violation());
    }
    CHECK(satisfied > 0);
}

TEST_CASE("sampled maps agree with the exact hypergraph count") {
    const Graph host = apexhom::random_graph(8, ExactRational{1u, 2u}, 42);
    const auto audit = apexhom::verify_goodstep(host, 4);
    int anchor = -1;
    for (const auto& va : audit.audits)
        if (va.good && va.degree >= 2) {
            anchor = va.vertex;
            break;
        }
    REQUIRE(anchor >= 0);

    const ThresholdPredicate pred(host, anchor, 4);
    const SetHypergraph link = apexhom::link_hypergraph(apex_c4());
    const BigNat exact = apexhom::count_hyper_homs(link, pred);

    const auto& targets = pred.targets();
    std::mt19937_64 gen(4242);
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    const int samples = 10000;
    int hits = 0;
    for (int s = 0; s < samples; ++s) {
        const std::vector<int> tuple{targets[pick(gen)], targets[pick(gen)]};
        if (pred.is_edge(tuple))
            ++hits;
    }
    const double total = static_cast<double>(targets.size()) * targets.size();
    const double expected = samples * exact.approx() / total;
    CHECK(std::abs(hits - expected) <= 500.0);
}

TEST_CASE("apex lower bound on fixed instances") {
    const auto k2k3 = apexhom::verify_importantstep(apex_k2(), apexhom::complete_graph(3));
    CHECK(k2k3.which == LemmaId::importantstep);
    CHECK(k2k3.conclusion_holds);
    CHECK(k2k3.lhs == BigNat{6u});
    CHECK(k2k3.rhs_num == BigNat{54u});
    CHECK(k2k3.rhs_den == BigNat{2304u});
    REQUIRE(k2k3.sub_reports.size() == 3);
    for (const auto& sub : k2k3.sub_reports) {
        CHECK(sub.hypothesis_satisfied);
        CHECK(sub.conclusion_holds);
        CHECK(sub.lhs == BigNat{2u});
        CHECK(sub.rhs_num == BigNat{2u});
        CHECK(sub.details.count("anchor") == 1);
    }
    CHECK(k2k3.details.at("good_anchors") ==
          "v=0,deg=2,link_homs=2;v=1,deg=2,link_homs=2;v=2,deg=2,link_homs=2");

    const auto zero = apexhom::verify_importantstep(apex_k2(), Graph{3});
    CHECK(zero.conclusion_holds);
    CHECK(zero.lhs.is_zero());
    CHECK(zero.rhs_num.is_zero());
    CHECK(zero.details.at("good_anchors") == "none");

    const auto c4k4 = apexhom::verify_importantstep(apex_c4(), apexhom::complete_graph(4));
    CHECK(c4k4.lhs == BigNat{84u});
    CHECK(c4k4.conclusion_holds);
    CHECK_FALSE(c4k4.violation());
}

TEST_CASE("apex lower bound via plain graphs") {
    const auto from_plain =
        apexhom::verify_importantstep(apexhom::path_graph(4), apexhom::complete_graph(3));
    CHECK(from_plain.conclusion_holds);
    CHECK_THROWS_AS(apexhom::verify_importantstep(apexhom::cycle_graph(6),
                                                  apexhom::complete_graph(3)),
                    apexhom::invalid_argument_error);
    CHECK_THROWS_AS(apexhom::verify_importantstep(apex_k2(), Graph{0}),
                    apexhom::invalid_argument_error);
}

TEST_CASE("apex lower bound sweep with embedded diagnostics") {
    const auto hs = apexhom::enumerate_apex_bipartite(4);
    const auto gs = corpus::graphs_up_to_iso(4);
    int harvested = 0;
    for (const auto& h : hs)
        for (const Graph& g : gs) {
            const auto report = apexhom::verify_importantstep(h, g);
            CHECK(report.conclusion_holds);
            const SetHypergraph link = apexhom::link_hypergraph(h);
            for (const auto& sub : report.sub_reports) {
                CHECK_FALSE(sub.violation());
                if (sub.hypothesis_satisfied) {
                    ++harvested;
                    CHECK(sub.conclusion_holds);
                }
                // recount the embedding from the recorded anchor
                const int anchor = std::stoi(sub.details.at("anchor"));
                const ThresholdPredicate pred(g, anchor, h.n());
                CHECK(sub.lhs == naive_hyper_homs(link, pred));
            }
        }
    CHECK(harvested > 0);
}

TEST_CASE("tensor multiplicativity reports") {
    const auto triple = apexhom::verify_tensor_multiplicativity(
        apexhom::complete_graph(2), apexhom::complete_graph(3), apexhom::complete_graph(3));
    CHECK(triple.which == LemmaId::tensor);
    CHECK(triple.conclusion_holds);
    CHECK(triple.lhs == BigNat{36u});
    CHECK(triple.rhs_num == BigNat{36u});
    CHECK(triple.details.at("homs_f") == "6");
    CHECK(triple.details.at("homs_g") == "6");
    CHECK(triple.details.at("product_edges") == "18");

    for (int trial = 0; trial < 25; ++trial) {
        const Graph h = apexhom::random_graph(1 + trial % 4, ExactRational{1u, 2u}, 11 + trial);
        const Graph f = apexhom::random_graph(1 + trial % 3, ExactRational{1u, 2u}, 500 + trial);
        const Graph g = apexhom::random_graph(2 + trial % 3, ExactRational{1u, 2u}, 900 + trial);
        const auto report = apexhom::verify_tensor_multiplicativity(h, f, g);
        CHECK(report.conclusion_holds);
        CHECK(apexhom::edge_density(apexhom::tensor_product(f, g)) ==
              apexhom::edge_density(f) * apexhom::edge_density(g));
    }
}

TEST_CASE("main theorem scaffolding") {
    const auto star = apexhom::verify_main_theorem(apex_star2(), apexhom::complete_graph(3), 2);
    CHECK(star.which == LemmaId::main_theorem);
    CHECK(star.conclusion_holds);
    CHECK(star.details.at("slack_ratio") == "1/1");
    CHECK(star.details.at("r=1") == "homs=12,power_equal=true,apex_bound=true");
    CHECK(star.details.at("r=2") == "homs=144,power_equal=true,apex_bound=true");

    const Graph g6 = apexhom::random_graph(6, ExactRational{1u, 2u}, 31);
    const auto c4 = apexhom::verify_main_theorem(apex_c4(), g6, 2);
    CHECK(c4.conclusion_holds);
    CHECK(c4.details.count("r=2") == 1);

    CHECK_THROWS_AS(apexhom::verify_main_theorem(apex_k2(), apexhom::complete_graph(3), 0),
                    apexhom::invalid_argument_error);
    CHECK_THROWS_AS(apexhom::verify_main_theorem(apex_k2(), Graph{0}, 1),
                    apexhom::invalid_argument_error);

    apexhom::HomGuard tiny;
    tiny.max_map_evals = 100;
    CHECK_THROWS_AS(apexhom::verify_main_theorem(apex_c4(), apexhom::complete_graph(4), 3, tiny),
                    apexhom::resource_limit_error);
}

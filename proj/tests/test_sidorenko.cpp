#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "apexhom/bignat.hpp"
#include "apexhom/graph.hpp"
#include "apexhom/io.hpp"
#include "apexhom/random_graph.hpp"
#include "apexhom/rational.hpp"
#include "apexhom/sidorenko.hpp"

#include "corpus.hpp"

using apexhom::BigNat;
using apexhom::ExactRational;
using apexhom::Graph;

TEST_CASE("equality instances have slack exactly one") {
    const auto star = apexhom::sidorenko_check(apexhom::star_graph(2),
                                               apexhom::complete_graph(3));
    CHECK(star.holds);
    REQUIRE(star.slack_ratio.has_value());
    CHECK(*star.slack_ratio == ExactRational{1u, 1u});
    CHECK(star.apex_hypothesis);
    CHECK(star.h_vertices == 3);
    CHECK(star.h_edges == 2);
}

TEST_CASE("four-cycle against the triangle has slack 9/8") {
    const auto v = apexhom::sidorenko_check(apexhom::cycle_graph(4), apexhom::complete_graph(3));
    CHECK(v.holds);
    CHECK(v.hom_count == BigNat{18u});
    REQUIRE(v.slack_ratio.has_value());
    CHECK(*v.slack_ratio == ExactRational{9u, 8u});
}

TEST_CASE("edgeless host degenerates to zero against zero") {
    const auto v = apexhom::sidorenko_check(apexhom::complete_graph(2), Graph{5});
    CHECK(v.holds);
    CHECK(v.rhs.is_zero());
    CHECK_FALSE(v.slack_ratio.has_value());
}

TEST_CASE("check rejects bad inputs") {
    CHECK_THROWS_AS(apexhom::sidorenko_check(apexhom::complete_graph(3),
                                             apexhom::complete_graph(4)),
                    apexhom::invalid_argument_error);
    CHECK_THROWS_AS(apexhom::sidorenko_check(apexhom::complete_graph(2), Graph{0}),
                    apexhom::invalid_argument_error);
}

TEST_CASE("apex hypothesis is reported, not required") {
    const auto p4 = apexhom::sidorenko_check(apexhom::path_graph(4), apexhom::complete_graph(3));
    CHECK(p4.apex_hypothesis);

    const auto c6 = apexhom::sidorenko_check(apexhom::cycle_graph(6), apexhom::complete_graph(3));
    CHECK_FALSE(c6.apex_hypothesis);
    CHECK(c6.holds);
}

TEST_CASE("verdict ties holds to the exact comparison") {
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = apexhom::random_graph(2 + trial % 6, ExactRational{1u, 2u}, 1200 + trial);
        if (g.vertex_count() == 0)
            continue;
        const auto v = apexhom::sidorenko_check(apexhom::cycle_graph(4), g);
        CHECK(v.holds == (v.lhs >= v.rhs));
        if (v.slack_ratio.has_value())
            CHECK(v.holds == (*v.slack_ratio >= ExactRational{1u, 1u}));
    }
}

TEST_CASE("apex enumeration counts") {
    CHECK(apexhom::enumerate_apex_bipartite(2).size() == 1);
    CHECK(apexhom::enumerate_apex_bipartite(3).size() == 4);
    CHECK(apexhom::enumerate_apex_bipartite(4).size() == 13);
    CHECK(apexhom::enumerate_apex_bipartite(5).size() == 46);
    CHECK(apexhom::enumerate_apex_bipartite(6).size() == 207);
    CHECK_THROWS_AS(apexhom::enumerate_apex_bipartite(9), apexhom::resource_limit_error);
}

TEST_CASE("apex enumeration shapes") {
    const auto graphs = apexhom::enumerate_apex_bipartite(4);
    std::set<std::string> codes;
    for (const auto& h : graphs) {
        // structural sanity on every emitted graph
        CHECK(h.apex() == 0);
        for (int w : h.part2())
            CHECK(h.as_graph().adjacent(0, w));
        CHECK(h.m() >= h.n2());
        // labeled shapes are pairwise distinct as (n1, edge set)
        codes.insert(std::to_string(h.n1()) + ":" + apexhom::emit_graph6(h.as_graph()));
    }
    CHECK(codes.size() == graphs.size());

    bool saw_k2 = false;
    bool saw_star2 = false;
    bool saw_c4 = false;
    const std::string k2 = apexhom::emit_graph6(apexhom::complete_graph(2));
    const std::string star2 = apexhom::emit_graph6(apexhom::star_graph(2));
    const std::string c4 = apexhom::emit_graph6(apexhom::complete_bipartite_graph(2, 2));
    for (const auto& h : graphs) {
        const std::string code = apexhom::emit_graph6(h.as_graph());
        saw_k2 = saw_k2 || code == k2;
        saw_star2 = saw_star2 || code == star2;
        saw_c4 = saw_c4 || code == c4;
    }
    CHECK(saw_k2);
    CHECK(saw_star2);
    CHECK(saw_c4);
}

TEST_CASE("small sweep finds no violation") {
    const auto hs = apexhom::enumerate_apex_bipartite(4);
    const auto gs = corpus::graphs_up_to_iso(4);
    for (const auto& h : hs)
        for (const Graph& g : gs) {
            const auto v = apexhom::sidorenko_check(h, g);
            CHECK(v.holds);
            CHECK(v.apex_hypothesis);
        }
}

#include <doctest.h>

#include <algorithm>

#include "homlab/approximation.hpp"
#include "homlab/canonical.hpp"
#include "homlab/enumerate.hpp"
#include "homlab/errors.hpp"
#include "homlab/families.hpp"
#include "homlab/hom.hpp"
#include "test_util.hpp"

using namespace homlab;
using namespace homlab::test;

TEST_CASE("is_t_approximation: examples") {
    CHECK(is_t_approximation(to_structure(cycle_graph(6)),
                             to_structure(complete_graph(2)), 10)
              .holds);

    Verdict bad = is_t_approximation(to_structure(cycle_graph(5)),
                                     to_structure(complete_graph(3)), 4);
    REQUIRE_FALSE(bad.holds);
    CHECK(bad.direction == "substructure-escapes");
    REQUIRE(bad.counterexample);
    CHECK(bad.counterexample->order() == 3);
    CHECK(isomorphic(*bad.counterexample, to_structure(complete_graph(3))));

    for (const Graph& g : all_graphs_up_to(4))
        for (int t : {1, 2, 3})
            CHECK(is_t_approximation(to_structure(g), to_structure(g), t).holds);
}

TEST_CASE("theta_oracle: small exact values") {
    Structure c6 = to_structure(cycle_graph(6));
    auto r2 = theta_oracle(c6, 2, 6);
    REQUIRE(r2);
    CHECK(r2->approx.order() == 2);
    CHECK(r2->exact);
    CHECK(isomorphic(r2->approx, to_structure(complete_graph(2))));
    CHECK(r2->forward.valid());

    // t above the core order: Theta equals the core order
    auto r3 = theta_oracle(c6, 3, 6);
    REQUIRE(r3);
    CHECK(r3->approx.order() == 2);

    // C_5 at t=4: nothing of order <= 4 works (any smaller non-bipartite
    // candidate shows a short odd substructure), so C_5 itself is minimal
    CHECK_FALSE(theta_oracle(to_structure(cycle_graph(5)), 4, 4));
    auto r5 = theta_oracle(to_structure(cycle_graph(5)), 4, 5);
    REQUIRE(r5);
    CHECK(r5->approx.order() == 5);
    CHECK(isomorphic(r5->approx, to_structure(cycle_graph(5))));

    // t=1 admits the loop point: no substructure condition at all
    auto r1 = theta_oracle(to_structure(cycle_graph(5)), 1, 5);
    REQUIRE(r1);
    CHECK(r1->approx.order() == 1);
}

TEST_CASE("theta_oracle: minimality recheck against is_t_approximation") {
    ThetaConfig cfg;
    for (const Graph& g : all_graphs_up_to(4)) {
        Structure a = to_structure(g);
        for (int t : {1, 2, 3, 4}) {
            auto r = theta_oracle(a, t, 4, cfg);
            REQUIRE(r);
            CHECK(is_t_approximation(a, r->approx, t).holds);
            for (int smaller = 1; smaller < r->approx.order(); ++smaller)
                for (const Structure& b : all_structures_of_order(graph_signature(), smaller))
                    CHECK_FALSE(is_t_approximation(a, b, t).holds);
        }
    }
}

TEST_CASE("theta is monotone in t and hom-invariant") {
    for (const Graph& g : all_graphs_up_to(5)) {
        Structure a = to_structure(g);
        int prev = 0;
        for (int t = 1; t <= 4; ++t) {
            auto r = theta_oracle(a, t, std::max(1, a.order()));
            REQUIRE(r);
            CHECK(r->approx.order() >= prev);
            prev = r->approx.order();
        }
    }
    // hom-equivalent inputs share their theta values
    std::vector<std::pair<Graph, Graph>> pairs = {
        {cycle_graph(6), complete_graph(2)},
        {path_graph(4), complete_graph(2)},
        {edgeless_graph(3), complete_graph(1)},
    };
    for (const auto& [a, b] : pairs) {
        REQUIRE(hom_equivalent(a, b));
        for (int t : {1, 2, 3}) {
            auto ra = theta_oracle(to_structure(a), t, a.order());
            auto rb = theta_oracle(to_structure(b), t, b.order());
            REQUIRE(ra);
            REQUIRE(rb);
            CHECK(ra->approx.order() == rb->approx.order());
        }
    }
}

TEST_CASE("quotient_approximation: K_3 is untouched") {
    auto [result, trace] = quotient_approximation(to_structure(cycle_graph(3)), 3);
    CHECK(result.approx.order() <= 3);
    CHECK(hom_equivalent(result.approx, to_structure(cycle_graph(3))));
    CHECK_FALSE(result.exact);
    CHECK(result.forward.valid());
    CHECK(trace.coloring.color_count == 3);
    CHECK(trace.classes.size() == static_cast<size_t>(result.approx.order()));
}

TEST_CASE("quotient_approximation: long even path collapses") {
    Structure p10 = to_structure(path_graph(10));
    auto [result, trace] = quotient_approximation(p10, 2);
    CHECK(is_t_approximation(p10, result.approx, 2).holds);
    CHECK(result.approx.order() < 10);
    CHECK(!trace.to_text().empty());

    // every recorded f_I is a homomorphism of its induced substructure
    for (const auto& r : trace.retractions) {
        Structure a_i = induced_substructure(p10, r.vertices);
        std::vector<int> position(p10.order(), -1);
        for (size_t i = 0; i < r.vertices.size(); ++i)
            position[r.vertices[i]] = static_cast<int>(i);
        std::vector<int> local(r.vertices.size());
        for (size_t i = 0; i < r.vertices.size(); ++i) local[i] = position[r.image[i]];
        CHECK(Homomorphism{a_i, a_i, local}.valid());
    }

    // classes partition the universe
    std::vector<bool> seen(p10.order(), false);
    for (const auto& cls : trace.classes)
        for (int v : cls) {
            CHECK_FALSE(seen[v]);
            seen[v] = true;
        }
    for (bool b : seen) CHECK(b);
}

TEST_CASE("quotient trace snapshot") {
    auto [result, trace] = quotient_approximation(to_structure(cycle_graph(3)), 3);
    CHECK(trace.to_text() ==
          "colors: 3 (t=3)\n"
          "coloring: 0 1 2\n"
          "subset {0,1,2} retraction: 0->0 1->1 2->2 core-size: 3\n"
          "classes: {0} {1} {2}\n");
}

TEST_CASE("quotient_approximation: edgeless input becomes a point") {
    auto [result, trace] = quotient_approximation(to_structure(edgeless_graph(5)), 3);
    CHECK(result.approx.order() == 1);
    CHECK(result.approx.relation(0).tuple_count() == 0);
}

TEST_CASE("quotient_approximation: valid on all graphs up to 5 at t=3") {
    for (const Graph& g : all_graphs_up_to(5)) {
        Structure a = to_structure(g);
        auto [result, trace] = quotient_approximation(a, 3);
        CHECK(is_t_approximation(a, result.approx, 3).holds);
        auto oracle = theta_oracle(a, 3, std::max(1, a.order()));
        REQUIRE(oracle);
        CHECK(result.approx.order() >= oracle->approx.order());
    }
}

TEST_CASE("quotient_approximation rejects t below the arity") {
    Signature ternary({Symbol{"R", 3}});
    Structure s(ternary, 3, {Relation{3, {0, 1, 2}}});
    CHECK_THROWS_AS(quotient_approximation(s, 2), argument_error);
}

TEST_CASE("theta_oracle on a non-graph signature") {
    // single unary symbol: a marked point absorbs everything and maps back
    Signature unary({Symbol{"U", 1}});
    Structure mixed(unary, 3, {Relation{1, {0, 1}}}); // two marked, one plain
    auto r = theta_oracle(mixed, 2, 3);
    REQUIRE(r);
    CHECK(r->approx.order() == 1);
    CHECK(is_t_approximation(mixed, r->approx, 2).holds);
}

#include <doctest.h>

#include <algorithm>

#include "homlab/canonical.hpp"
#include "homlab/duality.hpp"
#include "homlab/enumerate.hpp"
#include "homlab/errors.hpp"
#include "homlab/families.hpp"
#include "homlab/generators.hpp"
#include "homlab/hom.hpp"
#include "homlab/sparsity.hpp"
#include "test_util.hpp"

using namespace homlab;
using namespace homlab::test;

namespace {

ClassSample graphs_sample(int max_order, ClassFlags flags = {.hereditary = true,
                                                             .addable = true,
                                                             .monotone = true}) {
    std::vector<Structure> members;
    for (const Graph& g : all_graphs_up_to(max_order)) members.push_back(to_structure(g));
    return ClassSample::make(std::move(members), flags,
                             "graphs<=" + std::to_string(max_order));
}

ClassSample digraphs_sample(int max_order) {
    std::vector<Structure> members;
    for (const Digraph& g : all_digraphs_up_to(max_order)) members.push_back(to_structure(g));
    return ClassSample::make(std::move(members),
                             ClassFlags{.hereditary = true, .addable = true, .monotone = true},
                             "digraphs<=" + std::to_string(max_order));
}

ClassSample bipartite_sample(int max_order) {
    std::vector<Structure> members;
    for (const Graph& g : all_graphs_up_to(max_order))
        if (is_bipartite(g)) members.push_back(to_structure(g));
    return ClassSample::make(std::move(members),
                             ClassFlags{.hereditary = true, .addable = true, .monotone = true},
                             "bipartite<=" + std::to_string(max_order));
}

} // namespace

TEST_CASE("verify_duality: edge-free duality holds") {
    DualityInstance inst{{to_structure(complete_graph(2))}, to_structure(complete_graph(1))};
    Verdict v = verify_duality(inst, graphs_sample(5));
    CHECK(v.holds);
    REQUIRE(v.family_avoids_dual);
    CHECK(*v.family_avoids_dual);
}

TEST_CASE("verify_duality: GHRV k=2 over digraphs <= 4") {
    Verdict v = verify_duality(ghrv_instance(2), digraphs_sample(4));
    CHECK(v.holds);
    CHECK(*v.family_avoids_dual);
}

TEST_CASE("verify_duality: triangle against K_2 fails with C_5") {
    DualityInstance inst{{to_structure(cycle_graph(3))}, to_structure(complete_graph(2))};
    Verdict v = verify_duality(inst, graphs_sample(5));
    REQUIRE_FALSE(v.holds);
    CHECK(v.direction == "unforbidden-but-uncolorable");
    REQUIRE(v.counterexample);
    CHECK(isomorphic(*v.counterexample, to_structure(cycle_graph(5))));
    // soundness: the reported counterexample re-validates via counts
    CHECK(hom_count(to_structure(cycle_graph(3)), *v.counterexample) == 0);
    CHECK(hom_count(*v.counterexample, to_structure(complete_graph(2))) == 0);
}

TEST_CASE("verify_duality: forbidden-but-colorable direction carries a witness") {
    // {C_4} with dual K_2 fails on C_4 itself: C_4 -> C_4 and C_4 -> K_2
    DualityInstance inst{{to_structure(cycle_graph(4))}, to_structure(complete_graph(2))};
    Verdict v = verify_duality(inst, graphs_sample(4));
    REQUIRE_FALSE(v.holds);
    CHECK(v.direction == "forbidden-but-colorable");
    REQUIRE(v.witness);
    CHECK(v.witness->valid());
    CHECK(hom_count(*v.counterexample, to_structure(complete_graph(2))) > 0);
}

TEST_CASE("ghrv_instance") {
    DualityInstance one = ghrv_instance(1);
    CHECK(one.family.size() == 1);
    CHECK(one.family[0].order() == 2);
    CHECK(one.dual.order() == 1);
    CHECK(verify_duality(one, digraphs_sample(3)).holds);

    CHECK(verify_duality(ghrv_instance(3), digraphs_sample(4)).holds);

    for (int k : {1, 2, 3, 4})
        CHECK_FALSE(hom_exists(to_structure(directed_path(k + 1)),
                               to_structure(transitive_tournament(k))));
}

TEST_CASE("ghrv holds over all digraphs with 5 vertices for k=1,2") {
    ClassSample sample = digraphs_sample(5);
    CHECK(sample.members.size() == 1 + 3 + 16 + 218 + 9608);
    for (int k : {1, 2}) CHECK(verify_duality(ghrv_instance(k), sample).holds);
}

TEST_CASE("minimize_family: P_3 collapses into K_2") {
    DualityInstance inst{{to_structure(complete_graph(2)), to_structure(path_graph(3))},
                         to_structure(complete_graph(1))};
    ClassSample sample = graphs_sample(4);
    REQUIRE(verify_duality(inst, sample).holds);
    DualityInstance minimized = minimize_family(inst, sample);
    REQUIRE(minimized.family.size() == 1);
    CHECK(isomorphic(minimized.family[0], to_structure(complete_graph(2))));
}

TEST_CASE("minimize_family: core replacement over bipartite universe") {
    DualityInstance inst{{to_structure(cycle_graph(6))}, to_structure(complete_graph(1))};
    ClassSample sample = bipartite_sample(5);
    REQUIRE(verify_duality(inst, sample).holds);
    DualityInstance minimized = minimize_family(inst, sample);
    REQUIRE(minimized.family.size() == 1);
    CHECK(isomorphic(minimized.family[0], to_structure(complete_graph(2))));
}

TEST_CASE("minimize_family: GHRV is already minimal") {
    for (int k : {1, 2}) {
        DualityInstance inst = ghrv_instance(k);
        ClassSample sample = digraphs_sample(4);
        DualityInstance minimized = minimize_family(inst, sample);
        REQUIRE(minimized.family.size() == 1);
        CHECK(isomorphic(minimized.family[0], inst.family[0]));
    }
}

TEST_CASE("minimize_family: output is a fixed point and all members are cores") {
    DualityInstance inst{{to_structure(cycle_graph(6)), to_structure(path_graph(4))},
                         to_structure(complete_graph(1))};
    ClassSample sample = graphs_sample(4);
    REQUIRE(verify_duality(inst, sample).holds);
    DualityInstance minimized = minimize_family(inst, sample);
    CHECK(verify_duality(minimized, sample).holds);
    for (const auto& f : minimized.family) {
        CoreResult cr = core(f);
        CHECK(cr.core.order() == f.order());
    }
    // no member can be dropped
    for (size_t i = 0; i < minimized.family.size(); ++i) {
        DualityInstance without = minimized;
        without.family.erase(without.family.begin() + i);
        CHECK_FALSE(verify_duality(without, sample).holds);
    }
    // no member can be replaced by its identifications
    for (size_t i = 0; i < minimized.family.size(); ++i) {
        DualityInstance swapped = minimized;
        Structure member = swapped.family[i];
        swapped.family.erase(swapped.family.begin() + i);
        auto pre = pre_set(member);
        swapped.family.insert(swapped.family.end(), pre.begin(), pre.end());
        CHECK_FALSE(verify_duality(swapped, sample).holds);
    }
    CHECK(minimize_family(inst, sample).family.size() == minimized.family.size());
    // over an addable sample closed under its own small unions, minimal
    // families have connected members
    for (const auto& f : minimized.family) CHECK(is_connected(f));
}

TEST_CASE("connectivity_check") {
    ClassSample sample = graphs_sample(4);

    // minimized GHRV family members are connected
    DualityInstance ghrv = minimize_family(ghrv_instance(2), digraphs_sample(4));
    CHECK(connectivity_check(ghrv, digraphs_sample(4)).holds);

    // an artificially disconnected member is reported
    Structure k2k2 = disjoint_union(to_structure(complete_graph(2)),
                                    to_structure(complete_graph(2)));
    DualityInstance bad{{k2k2}, to_structure(complete_graph(1))};
    REQUIRE(verify_duality(bad, sample).holds); // the duality itself is fine
    Verdict v = connectivity_check(bad, sample);
    REQUIRE_FALSE(v.holds);
    CHECK(v.direction == "disconnected-member");

    // monotone samples additionally pin members inside the sample and off
    // the dual
    DualityInstance k2{{to_structure(complete_graph(2))}, to_structure(complete_graph(1))};
    CHECK(connectivity_check(k2, sample).holds);
    DualityInstance big{{to_structure(cycle_graph(6))}, to_structure(complete_graph(1))};
    Verdict outside = connectivity_check(big, graphs_sample(4));
    REQUIRE_FALSE(outside.holds);
    CHECK(outside.direction == "member-outside-sample");

    ClassFlags none;
    ClassSample unflagged = graphs_sample(3, none);
    CHECK_THROWS_AS(connectivity_check(k2, unflagged), argument_error);

    // a member mapping into the dual is flagged on monotone samples
    DualityInstance self{{to_structure(complete_graph(2))}, to_structure(complete_graph(2))};
    Verdict mapped = connectivity_check(self, sample);
    REQUIRE_FALSE(mapped.holds);
    CHECK(mapped.direction == "member-maps-to-dual");
    REQUIRE(mapped.witness);
    CHECK(mapped.witness->valid());
}

TEST_CASE("connectivity_check: constructive pair for hom-incomparable components") {
    // The lemma's pair (G1 accepts one component only, G2 the other) exists
    // exactly when the components are hom-incomparable.  The directed 2-cycle
    // and 3-cycle are: neither maps to the other.
    Structure c2 = to_structure(directed_cycle(2));
    Structure c3 = to_structure(directed_cycle(3));
    CHECK_FALSE(hom_exists(c2, c3));
    CHECK_FALSE(hom_exists(c3, c2));
    Structure member = disjoint_union(c2, c3);
    DualityInstance inst{{member}, to_structure(transitive_tournament(1))};
    std::vector<Structure> members;
    for (const Digraph& g : all_digraphs_up_to(4)) members.push_back(to_structure(g));
    ClassSample sample = ClassSample::make(
        std::move(members), ClassFlags{.hereditary = true, .addable = true, .monotone = true},
        "digraphs<=4");
    Verdict v = connectivity_check(inst, sample);
    REQUIRE_FALSE(v.holds);
    CHECK(v.direction == "disconnected-member");
    REQUIRE(v.counterexample);
    REQUIRE(v.witness);
    CHECK(v.witness->valid());
    // the pair's union accepts the whole member even though each half
    // rejects one component
    CHECK(hom_count(member, *v.counterexample) > 0);
}

TEST_CASE("dual_construct: triangle family over small graphs") {
    ClassSample sample = graphs_sample(4);
    Structure d = dual_construct({to_structure(cycle_graph(3))}, sample, 4);
    CHECK_FALSE(hom_exists(to_structure(cycle_graph(3)), d));
    CHECK(verify_duality(DualityInstance{{to_structure(cycle_graph(3))}, d}, sample).holds);
}

TEST_CASE("dual_construct: K_2 family yields an edgeless dual") {
    ClassSample sample = graphs_sample(4);
    Structure d = dual_construct({to_structure(complete_graph(2))}, sample, 2);
    CHECK(hom_equivalent(d, to_structure(complete_graph(1))));
}

TEST_CASE("dual_construct: member mapping everywhere yields the empty dual") {
    ClassSample sample = graphs_sample(3);
    Structure d = dual_construct({to_structure(complete_graph(1))}, sample, 3);
    CHECK(d.order() == 0);
    for (const auto& g : sample.members) CHECK_FALSE(hom_exists(g, d));
}

TEST_CASE("dual_construct rejects bad arguments") {
    ClassSample sample = graphs_sample(3);
    Structure k2k2 = disjoint_union(to_structure(complete_graph(2)),
                                    to_structure(complete_graph(2)));
    CHECK_THROWS_AS(dual_construct({k2k2}, sample, 5), argument_error);
    CHECK_THROWS_AS(dual_construct({to_structure(cycle_graph(3))}, sample, 2),
                    argument_error);
    CHECK_THROWS_AS(dual_construct({}, sample, 3), argument_error);
}

TEST_CASE("product_dual") {
    Structure k2 = to_structure(complete_graph(2));
    Structure k3 = to_structure(complete_graph(3));
    Structure single = product_dual({k3});
    CHECK(single == k3);

    Structure p = product_dual({k2, k3});
    CHECK(p.order() == 6);
    for (const Graph& x : all_graphs_up_to(4)) {
        bool into = hom_exists(to_structure(x), p).has_value();
        CHECK(into == is_bipartite(x));
    }

    Structure edgeless = to_structure(edgeless_graph(2));
    Structure q = product_dual({k3, edgeless});
    CHECK(q.relation(0).tuple_count() == 0);

    CHECK_THROWS_AS(product_dual({}), argument_error);
}

TEST_CASE("budget exhaustion keeps the verdict withheld") {
    HomSearchConfig tiny;
    tiny.node_budget = 1;
    DualityInstance inst{{to_structure(cycle_graph(3))}, to_structure(complete_graph(2))};
    CHECK_THROWS_AS(verify_duality(inst, graphs_sample(4), tiny), budget_error);
}

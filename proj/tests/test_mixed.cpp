#include <doctest.h>

#include "helpers.hpp"
#include "mixed.hpp"

using namespace arcpack;
using namespace arcpack::testing;

TEST_CASE("infer_regularity") {
    CHECK(infer_regularity(k3bi()) == 2);
    CHECK(infer_regularity(c3()) == 1);
    CHECK_THROWS_WITH_AS(infer_regularity(path3()),
                         doctest::Contains("vertex"), std::invalid_argument);
    CHECK_THROWS_AS(infer_regularity(Digraph(0, {})), std::invalid_argument);
    CHECK_THROWS_AS(infer_regularity(Digraph(2, {})), std::invalid_argument);
}

TEST_CASE("derive_root_vector reads the heads of the missing arcs") {
    TreePackResult packed = pack_spanning_trees(k3bi(), 2);
    const TreePacking& trees = std::get<TreePacking>(packed);
    RootVector r = derive_root_vector(k3bi(), trees);
    CHECK(r.k == 2);
    CHECK(r.total() == 2);
    // cross-check directly against the unused arcs
    std::vector<char> used(6, 0);
    for (const ArcSet& t : trees.trees)
        for (int id : t) used[id] = 1;
    std::vector<int> expect(3, 0);
    for (int id = 0; id < 6; ++id)
        if (!used[id]) ++expect[k3bi().arc(id).head];
    CHECK(r.multiplicity == expect);
}

TEST_CASE("derive_root_vector validates its inputs") {
    TreePacking p{{{0, 2}, {1, 4}}};
    CHECK_THROWS_AS(derive_root_vector(c3(), p), std::invalid_argument);
    CHECK_THROWS_AS(derive_root_vector(k3bi(), TreePacking{{{0, 1}, {2, 4}}}),
                    std::invalid_argument);
}

TEST_CASE("decide_equivalence on the bidirected triangle") {
    EquivalenceDecision dec = decide_equivalence(k3bi());
    REQUIRE(dec.feasible);
    REQUIRE(dec.branchings.has_value());
    CHECK(verify_branching_set(k3bi(), *dec.branchings));
    REQUIRE(dec.trace.has_value());
    CHECK(dec.trace->missing_arcs.size() == 2);
    CHECK(dec.trace->derived_roots.total() == 2);
}

TEST_CASE("decide_equivalence emits a certificate when no packing exists") {
    // two disjoint doubled 2-cycles: 2-regular, but the partition into the
    // two components is crossed by 0 < 2 arcs
    Digraph d(4, {{0, 1}, {0, 1}, {1, 0}, {1, 0},
                  {2, 3}, {2, 3}, {3, 2}, {3, 2}});
    EquivalenceDecision dec = decide_equivalence(d);
    CHECK_FALSE(dec.feasible);
    REQUIRE(dec.certificate.has_value());
    CHECK(dec.certificate->deficiency >= 1);
    CHECK(tutte_deficiency(d, dec.certificate->partition, 2) ==
          dec.certificate->deficiency);
}

TEST_CASE("solve_mixed splits branchings and trees") {
    MixedResult r = solve_mixed(k3bi(), 1);
    auto* s = std::get_if<MixedSolution>(&r);
    REQUIRE(s != nullptr);
    CHECK(s->k == 2);
    CHECK(s->l == 1);
    CHECK(s->out_branchings.branchings.size() == 1);
    CHECK(s->trees.size() == 1);
    CHECK(verify_mixed_solution(k3bi(), *s));

    MixedResult all = solve_mixed(k3bi(), 2);
    REQUIRE(std::holds_alternative<MixedSolution>(all));
    CHECK(verify_mixed_solution(k3bi(), std::get<MixedSolution>(all)));
}

TEST_CASE("solve_mixed validates l") {
    CHECK_THROWS_AS(solve_mixed(k3bi(), 0), std::invalid_argument);
    CHECK_THROWS_AS(solve_mixed(k3bi(), 3), std::invalid_argument);
}

TEST_CASE("verify_mixed_solution rejects corruption") {
    MixedSolution s = std::get<MixedSolution>(solve_mixed(k3bi(), 1));
    MixedSolution bad = s;
    bad.trees[0] = bad.out_branchings.branchings[0];  // overlap
    CHECK_FALSE(verify_mixed_solution(k3bi(), bad));
    bad = s;
    bad.l = 2;  // count mismatch
    CHECK_FALSE(verify_mixed_solution(k3bi(), bad));
}

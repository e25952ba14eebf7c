#include <doctest.h>

#include <stdexcept>

#include "gadget.hpp"
#include "helpers.hpp"
#include "maxflow.hpp"

using namespace arcpack;
using namespace arcpack::testing;

TEST_CASE("shipped gadget satisfies all five properties") {
    GadgetReport r = verify_cycle_breaker(cycle_breaker());
    CHECK(r.g1_degrees);
    CHECK(r.g2_insertion);
    CHECK(r.g3_no_clean_path);
    CHECK(r.g4_fragments);
    CHECK(r.g5_path_exists);
    CHECK(r.all());
}

TEST_CASE("shipped gadget has exactly two spanning (s,t)-paths") {
    Gadget g = cycle_breaker();
    CHECK(spanning_st_paths(g.digraph, g.s, g.t).size() == 2);
}

TEST_CASE("fragments really extend host paths") {
    Gadget g = cycle_breaker();
    // fragment_P: a path d->...->t and a path s->...->e, disjoint from
    // fragment_Q (b->...->t and s->...->c)
    CHECK(arc_sets_disjoint(g.fragment_P, g.fragment_Q));
    // two vertex-disjoint paths covering all n vertices use n-2 arcs
    CHECK(g.fragment_P.size() ==
          static_cast<size_t>(g.digraph.vertex_count() - 2));
    CHECK(g.fragment_Q.size() ==
          static_cast<size_t>(g.digraph.vertex_count() - 2));
}

TEST_CASE("broken gadgets fail the right property") {
    SUBCASE("emptied fragment fails G4") {
        Gadget g = cycle_breaker();
        g.fragment_Q.clear();
        GadgetReport r = verify_cycle_breaker(g);
        CHECK_FALSE(r.g4_fragments);
        CHECK(r.g1_degrees);
    }
    SUBCASE("extra s->t arc fails G1") {
        Gadget g = cycle_breaker();
        std::vector<Arc> arcs = g.digraph.arcs();
        arcs.push_back({g.s, g.t});
        g.digraph = Digraph(g.digraph.vertex_count(), std::move(arcs));
        GadgetReport r = verify_cycle_breaker(g);
        CHECK_FALSE(r.g1_degrees);
    }
    SUBCASE("oversized gadget is refused") {
        Gadget g = cycle_breaker();
        g.digraph = Digraph(13, {});
        CHECK_THROWS_AS(verify_cycle_breaker(g), std::invalid_argument);
    }
}

TEST_CASE("splicing one copy keeps 2-regularity and 2-arc-strength") {
    std::map<std::string, int> ports;
    Digraph out = splice_into_host(k3bi(), 0, cycle_breaker(), 1, &ports);
    CHECK(out.vertex_count() == 8);  // 2 host + 2 junctions + 4 internal
    CHECK(out.arc_count() == 16);
    CHECK(is_k_regular(out, 2));
    CHECK(arc_connectivity_at_least(out, 2).ok);
    CHECK(ports.count("s") == 1);
    CHECK(ports.count("t") == 1);
    CHECK(ports.count("mid") == 0);
}

TEST_CASE("splicing two chained copies") {
    std::map<std::string, int> ports;
    Digraph out = splice_into_host(k3bi(), 1, cycle_breaker(), 2, &ports);
    CHECK(out.vertex_count() == 13);
    CHECK(out.arc_count() == 26);
    CHECK(is_k_regular(out, 2));
    CHECK(ports.count("mid") == 1);
    CHECK(ports.count("g0.2") == 1);
    CHECK(ports.count("g1.5") == 1);
}

TEST_CASE("splice argument validation") {
    CHECK_THROWS_AS(splice_into_host(k3bi(), 5, cycle_breaker(), 1, nullptr),
                    std::invalid_argument);
    CHECK_THROWS_AS(splice_into_host(k3bi(), 0, cycle_breaker(), 3, nullptr),
                    std::invalid_argument);
}

TEST_CASE("spanning path enumeration on a known digraph") {
    // on C3 the only spanning path 0->1->2 exists
    auto paths = spanning_st_paths(c3(), 0, 2);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] == std::vector<int>{0, 1});
    CHECK(spanning_st_paths(c3(), 0, 1).empty());
}

#include <doctest.h>

#include <cstring>
#include <string>

#include "arcpack.h"

namespace {

struct Str {
    char* v = nullptr;
    ~Str() { arcpack_string_free(v); }
    std::string s() const { return v ? v : ""; }
};

struct Dg {
    arcpack_digraph* d = nullptr;
    ~Dg() { arcpack_digraph_free(d); }
};

Dg parse(const char* text) {
    Dg g;
    REQUIRE(arcpack_digraph_parse(text, &g.d) == ARCPACK_OK);
    return g;
}

const char* K3BI = "3 6\n0 1\n1 0\n0 2\n2 0\n1 2\n2 1\n";
const char* C3 = "3 3\n0 1\n1 2\n2 0\n";

}  // namespace

TEST_CASE("digraph lifecycle through the C API") {
    Dg g = parse(K3BI);
    CHECK(arcpack_digraph_vertex_count(g.d) == 3);
    CHECK(arcpack_digraph_arc_count(g.d) == 6);
    CHECK(arcpack_digraph_is_k_regular(g.d, 2) == 1);
    CHECK(arcpack_digraph_is_k_regular(g.d, 3) == 0);
    Str text;
    CHECK(arcpack_digraph_format(g.d, &text.v) == ARCPACK_OK);
    CHECK(text.s() == K3BI);
    Str dot;
    CHECK(arcpack_digraph_to_dot(g.d, &dot.v) == ARCPACK_OK);
    CHECK(dot.s().find("digraph") == 0);
}

TEST_CASE("parse errors set the thread-local message") {
    arcpack_digraph* d = nullptr;
    CHECK(arcpack_digraph_parse("garbage", &d) == ARCPACK_ERR_ARGUMENT);
    CHECK(std::strlen(arcpack_last_error()) > 0);
    CHECK(d == nullptr);
}

TEST_CASE("digraph_build") {
    int tails[] = {0, 1, 2};
    int heads[] = {1, 2, 0};
    Dg g;
    REQUIRE(arcpack_digraph_build(3, 3, tails, heads, &g.d) == ARCPACK_OK);
    CHECK(arcpack_digraph_arc_count(g.d) == 3);
    arcpack_digraph* bad = nullptr;
    CHECK(arcpack_digraph_build(1, 1, tails, heads, &bad) ==
          ARCPACK_ERR_ARGUMENT);
}

TEST_CASE("pack trees yes and no, with verify round trip") {
    Dg yes = parse(K3BI);
    Str cert;
    CHECK(arcpack_pack_trees(yes.d, 2, &cert.v) == ARCPACK_OK);
    CHECK(cert.s().find("\"trees\"") != std::string::npos);
    CHECK(arcpack_verify(yes.d, cert.v) == ARCPACK_OK);

    Dg no = parse(C3);
    Str tutte;
    CHECK(arcpack_pack_trees(no.d, 2, &tutte.v) == ARCPACK_INFEASIBLE);
    CHECK(tutte.s().find("\"tutte\"") != std::string::npos);
    CHECK(arcpack_verify(no.d, tutte.v) == ARCPACK_OK);
    // a certificate for the wrong digraph fails verification
    CHECK(arcpack_verify(yes.d, tutte.v) != ARCPACK_OK);
}

TEST_CASE("pack branchings and equivalence") {
    Dg g = parse(K3BI);
    Str out;
    CHECK(arcpack_pack_branchings(g.d, "0:1,1:1", &out.v) == ARCPACK_OK);
    CHECK(arcpack_verify(g.d, out.v) == ARCPACK_OK);
    Str eq;
    CHECK(arcpack_decide_equivalence(g.d, &eq.v) == ARCPACK_OK);
    CHECK(eq.s().find("pipeline_trace") != std::string::npos);

    Dg path = parse("3 2\n0 1\n1 2\n");
    Str no;
    CHECK(arcpack_pack_branchings(path.d, "1:1", &no.v) == ARCPACK_INFEASIBLE);
    CHECK(no.s().find("rootvector-violation") != std::string::npos);
    CHECK(arcpack_verify(path.d, no.v) == ARCPACK_OK);

    Str bad;
    CHECK(arcpack_pack_branchings(g.d, "9:1", &bad.v) == ARCPACK_ERR_ARGUMENT);
}

TEST_CASE("mixed packing") {
    Dg g = parse(K3BI);
    Str out;
    CHECK(arcpack_pack_mixed(g.d, 1, &out.v) == ARCPACK_OK);
    CHECK(arcpack_verify(g.d, out.v) == ARCPACK_OK);
    Str bad;
    CHECK(arcpack_pack_mixed(g.d, 5, &bad.v) == ARCPACK_ERR_ARGUMENT);
}

TEST_CASE("reductions through the C API") {
    Str text, sidecar;
    CHECK(arcpack_reduce_sat("p cnf 3 1\n1 2 3 0\n", 0, &text.v, &sidecar.v) ==
          ARCPACK_OK);
    Dg red;
    REQUIRE(arcpack_digraph_parse(text.v, &red.d) == ARCPACK_OK);
    CHECK(arcpack_digraph_vertex_count(red.d) == 22);
    CHECK(sidecar.s().find("\"reduction\"") != std::string::npos);

    Dg host = parse(K3BI);
    Str ham, ports;
    CHECK(arcpack_reduce_ham_inout(host.d, 0, &ham.v, &ports.v) == ARCPACK_OK);
    Str kx;
    CHECK(arcpack_reduce_k_expand(host.d, 3, &kx.v) == ARCPACK_OK);
    Str gt;
    CHECK(arcpack_gadget_text(&gt.v) == ARCPACK_OK);
    Str report;
    CHECK(arcpack_gadget_verify(&report.v) == ARCPACK_OK);
    CHECK(report.s().find("\"all\":true") != std::string::npos);
}

TEST_CASE("oracles through the C API, including budget refusal") {
    Dg g = parse(K3BI);
    Str yes;
    CHECK(arcpack_oracle_ham_pair(g.d, 1, -1, -1, nullptr, &yes.v) == ARCPACK_OK);
    Dg c3 = parse(C3);
    Str no;
    CHECK(arcpack_oracle_ham_pair(c3.d, 1, -1, -1, nullptr, &no.v) ==
          ARCPACK_INFEASIBLE);
    arcpack_budget tiny{1, 1, 1.0};
    Str refused;
    CHECK(arcpack_oracle_ham_pair(g.d, 1, -1, -1, &tiny, &refused.v) ==
          ARCPACK_ERR_BUDGET);
    arcpack_budget invalid{0, -3, 1.0};
    Str bad;
    CHECK(arcpack_oracle_ham_pair(g.d, 1, -1, -1, &invalid, &bad.v) ==
          ARCPACK_ERR_ARGUMENT);

    CHECK(arcpack_oracle_tree_packing(g.d, 2, nullptr) == ARCPACK_OK);
    CHECK(arcpack_oracle_tree_packing(c3.d, 2, nullptr) == ARCPACK_INFEASIBLE);

    Str rv;
    CHECK(arcpack_oracle_root_vector(c3.d, "0:1", nullptr, &rv.v) == ARCPACK_OK);
    Str sat;
    CHECK(arcpack_oracle_sat("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n", nullptr,
                             &sat.v) == ARCPACK_INFEASIBLE);
    Str io;
    CHECK(arcpack_oracle_inout_pair(g.d, -1, -1, nullptr, &io.v) == ARCPACK_OK);
    Str path;
    CHECK(arcpack_oracle_remainder_path(g.d, 0, 1, 7, nullptr, &path.v) ==
          ARCPACK_ERR_ARGUMENT);
}

TEST_CASE("counterexample search through the C API") {
    arcpack_budget b{5, 16, 300.0};
    Str text, witness;
    CHECK(arcpack_search_counterexample(&b, &text.v, &witness.v) == ARCPACK_OK);
    Dg found;
    REQUIRE(arcpack_digraph_parse(text.v, &found.d) == ARCPACK_OK);
    CHECK(arcpack_digraph_vertex_count(found.d) >= 3);
}

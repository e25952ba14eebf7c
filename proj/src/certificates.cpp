#include "certificates.hpp"

#include <stdexcept>

namespace arcpack {

namespace {

json base(const char* kind) { return json{{"schema", "1"}, {"kind", kind}}; }

void expect(const json& j, const char* kind) {
    if (!j.is_object() || j.value("schema", "") != "1")
        throw std::invalid_argument("certificate: missing schema \"1\"");
    if (j.value("kind", "") != kind)
        throw std::invalid_argument(std::string("certificate: expected kind ") +
                                    kind);
}

std::vector<ArcSet> arc_sets_from(const json& j) {
    std::vector<ArcSet> sets;
    for (const auto& entry : j) sets.push_back(entry.get<ArcSet>());
    return sets;
}

}  // namespace

json trees_to_json(const TreePacking& p) {
    json j = base("trees");
    j["trees"] = p.trees;
    return j;
}

json tutte_to_json(const PartitionCertificate& c) {
    json j = base("tutte");
    j["k"] = c.k;
    j["deficiency"] = c.deficiency;
    j["partition"] = c.partition.blocks;
    return j;
}

json branchings_to_json(const BranchingSet& b) {
    json j = base("branchings");
    j["roots"] = b.roots;
    j["branchings"] = b.branchings;
    return j;
}

json rootvector_violation_to_json(const RootVector& r,
                                  const std::vector<int>& violating_x) {
    json j = base("rootvector-violation");
    j["k"] = r.k;
    j["roots"] = r.multiplicity;
    j["violating_x"] = violating_x;
    return j;
}

json mixed_to_json(const MixedSolution& s,
                   const std::optional<PipelineTrace>& trace) {
    json j = base("mixed");
    j["k"] = s.k;
    j["l"] = s.l;
    j["roots"] = s.out_branchings.roots;
    j["branchings"] = s.out_branchings.branchings;
    j["trees"] = s.trees;
    if (trace) {
        j["pipeline_trace"] = {{"missing_arcs", trace->missing_arcs},
                               {"derived_roots", trace->derived_roots.multiplicity}};
    }
    return j;
}

json reduction_to_json(const ReductionInstance& r) {
    json j = base("reduction");
    j["provenance"] = r.provenance;
    j["s"] = r.s;
    j["t"] = r.t;
    j["cycle_variant"] = r.cycle_variant;
    j["dimacs"] = r.cnf.to_dimacs();
    j["literal_vertices"] = r.literal_vertices;
    json routes = json::array();
    for (const auto& [y, z] : r.variable_routes)
        routes.push_back({{"y", y}, {"z", z}});
    j["variable_routes"] = routes;
    return j;
}

json ham_reduction_to_json(const HamReduction& r) {
    json j = base("reduction");
    j["provenance"] = r.provenance;
    j["ports"] = r.ports;
    return j;
}

TreePacking trees_from_json(const json& j) {
    expect(j, "trees");
    return {arc_sets_from(j.at("trees"))};
}

PartitionCertificate tutte_from_json(const json& j) {
    expect(j, "tutte");
    PartitionCertificate c;
    c.k = j.at("k").get<int>();
    c.deficiency = j.at("deficiency").get<int>();
    for (const auto& block : j.at("partition"))
        c.partition.blocks.push_back(block.get<std::vector<int>>());
    return c;
}

BranchingSet branchings_from_json(const json& j) {
    expect(j, "branchings");
    BranchingSet b;
    b.roots = j.at("roots").get<std::vector<int>>();
    b.branchings = arc_sets_from(j.at("branchings"));
    return b;
}

MixedSolution mixed_from_json(const json& j) {
    expect(j, "mixed");
    MixedSolution s;
    s.k = j.at("k").get<int>();
    s.l = j.at("l").get<int>();
    s.out_branchings.roots = j.at("roots").get<std::vector<int>>();
    s.out_branchings.branchings = arc_sets_from(j.at("branchings"));
    s.trees = arc_sets_from(j.at("trees"));
    return s;
}

bool verify_certificate(const Digraph& d, const json& j) {
    if (!j.is_object()) throw std::invalid_argument("certificate: not an object");
    std::string kind = j.value("kind", "");
    if (kind == "trees") {
        return verify_tree_packing(d, trees_from_json(j));
    }
    if (kind == "tutte") {
        PartitionCertificate c = tutte_from_json(j);
        c.partition.validate(d.vertex_count());
        return c.deficiency >= 1 &&
               tutte_deficiency(d, c.partition, c.k) == c.deficiency;
    }
    if (kind == "branchings") {
        return verify_branching_set(d, branchings_from_json(j));
    }
    if (kind == "rootvector-violation") {
        expect(j, "rootvector-violation");
        RootVector r{j.at("roots").get<std::vector<int>>(), j.at("k").get<int>()};
        r.validate(d.vertex_count());
        std::vector<int> x = j.at("violating_x").get<std::vector<int>>();
        if (x.empty()) return false;
        int rx = 0;
        for (int v : x) {
            if (v < 0 || v >= d.vertex_count())
                throw std::invalid_argument("certificate: vertex out of range");
            rx += r.multiplicity[v];
        }
        return degrees(d, x).d_in < r.k - rx;
    }
    if (kind == "mixed") {
        return verify_mixed_solution(d, mixed_from_json(j));
    }
    throw std::invalid_argument("certificate: unknown kind \"" + kind + "\"");
}

}  // namespace arcpack

#include "mixed.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcpack {

int infer_regularity(const Digraph& d) {
    if (d.vertex_count() == 0)
        throw std::invalid_argument("regularity undefined on the empty digraph");
    int k = d.out_degree(0);
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.out_degree(v) != k || d.in_degree(v) != k)
            throw std::invalid_argument("digraph is not regular: vertex " +
                                        std::to_string(v) + " has degrees " +
                                        std::to_string(d.in_degree(v)) + "/" +
                                        std::to_string(d.out_degree(v)));
    if (k == 0) throw std::invalid_argument("digraph is 0-regular");
    return k;
}

RootVector derive_root_vector(const Digraph& d, const TreePacking& p) {
    int k = static_cast<int>(p.trees.size());
    if (!is_k_regular(d, k))
        throw std::invalid_argument("derive_root_vector: digraph is not k-regular");
    if (!verify_tree_packing(d, p))
        throw std::invalid_argument("derive_root_vector: invalid tree packing");
    std::vector<char> used(d.arc_count(), 0);
    for (const ArcSet& t : p.trees)
        for (int id : t) used[id] = 1;
    RootVector r;
    r.multiplicity.assign(d.vertex_count(), 0);
    r.k = k;
    int missing = 0;
    for (int id = 0; id < d.arc_count(); ++id)
        if (!used[id]) {
            ++r.multiplicity[d.arc(id).head];
            ++missing;
        }
    if (missing != k)
        throw std::logic_error("derive_root_vector: expected exactly k missing arcs");
    return r;
}

EquivalenceDecision decide_equivalence(const Digraph& d) {
    int k = infer_regularity(d);
    TreePackResult packed = pack_spanning_trees(d, k);
    if (auto* cert = std::get_if<PartitionCertificate>(&packed))
        return {false, std::nullopt, *cert, std::nullopt};

    const TreePacking& trees = std::get<TreePacking>(packed);
    RootVector r = derive_root_vector(d, trees);
    RootVectorCheck check = check_root_vector(d, r);
    if (!check.ok)
        throw std::logic_error(
            "decide_equivalence: derived root vector rejected (internal defect)");

    PipelineTrace trace;
    std::vector<char> used(d.arc_count(), 0);
    for (const ArcSet& t : trees.trees)
        for (int id : t) used[id] = 1;
    for (int id = 0; id < d.arc_count(); ++id)
        if (!used[id]) trace.missing_arcs.push_back(id);
    trace.derived_roots = r;

    EquivalenceDecision dec;
    dec.feasible = true;
    dec.branchings = pack_out_branchings(d, r);
    dec.trace = std::move(trace);
    return dec;
}

MixedResult solve_mixed(const Digraph& d, int l) {
    int k = infer_regularity(d);
    if (l <= 0 || l > k)
        throw std::invalid_argument("solve_mixed: need 0 < l <= k");
    EquivalenceDecision dec = decide_equivalence(d);
    if (!dec.feasible) return *dec.certificate;
    // All k structures are out-branchings; label the first l as branchings
    // and the rest as plain spanning trees.
    MixedSolution s;
    s.l = l;
    s.k = k;
    for (int i = 0; i < l; ++i) {
        s.out_branchings.branchings.push_back(dec.branchings->branchings[i]);
        s.out_branchings.roots.push_back(dec.branchings->roots[i]);
    }
    for (int i = l; i < k; ++i) s.trees.push_back(dec.branchings->branchings[i]);
    return s;
}

bool verify_mixed_solution(const Digraph& d, const MixedSolution& s) {
    if (static_cast<int>(s.out_branchings.branchings.size()) != s.l) return false;
    if (static_cast<int>(s.trees.size()) != s.k - s.l) return false;
    if (!verify_branching_set(d, s.out_branchings)) return false;
    std::vector<char> used(d.arc_count(), 0);
    for (const ArcSet& b : s.out_branchings.branchings)
        for (int id : b) used[id] = 1;
    for (const ArcSet& t : s.trees) {
        if (!is_spanning_tree(d, t)) return false;
        for (int id : t) {
            if (used[id]) return false;
            used[id] = 1;
        }
    }
    return true;
}

}  // namespace arcpack

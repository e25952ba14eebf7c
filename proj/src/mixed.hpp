#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "branching.hpp"
#include "digraph.hpp"
#include "tree_packing.hpp"

namespace arcpack {

/// l out-branchings plus k-l spanning trees, all pairwise arc-disjoint.
struct MixedSolution {
    BranchingSet out_branchings;
    std::vector<ArcSet> trees;
    int l = 0;
    int k = 0;
};

/// Audit trail for the k-regular pipeline: the k arcs left out of the tree
/// packing and the root vector read off their heads.
struct PipelineTrace {
    ArcSet missing_arcs;
    RootVector derived_roots;
};

struct EquivalenceDecision {
    bool feasible = false;
    std::optional<BranchingSet> branchings;
    std::optional<PartitionCertificate> certificate;
    std::optional<PipelineTrace> trace;
};

/// The common in/out degree of a regular digraph; throws naming a deviant
/// vertex otherwise.
int infer_regularity(const Digraph& d);

/// r(v) = number of arcs of the k-regular digraph d outside the packing
/// whose head is v. Sum is always k.
RootVector derive_root_vector(const Digraph& d, const TreePacking& p);

/// k-regular digraphs contain k arc-disjoint out-branchings (free roots)
/// iff they contain k arc-disjoint spanning trees; decide constructively.
EquivalenceDecision decide_equivalence(const Digraph& d);

using MixedResult = std::variant<MixedSolution, PartitionCertificate>;

/// k disjoint spanning structures of which the first l are out-branchings.
MixedResult solve_mixed(const Digraph& d, int l);

bool verify_mixed_solution(const Digraph& d, const MixedSolution& s);

}  // namespace arcpack

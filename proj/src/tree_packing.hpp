#pragma once

#include <variant>
#include <vector>

#include "digraph.hpp"

namespace arcpack {

/// k pairwise edge-disjoint spanning trees of UG(D), as arc-id sets.
struct TreePacking {
    std::vector<ArcSet> trees;
};

/// Partition witnessing that no k edge-disjoint spanning trees exist:
/// deficiency = k(t-1) - e_F >= 1.
struct PartitionCertificate {
    Partition partition;
    int k = 0;
    int deficiency = 0;
};

using TreePackResult = std::variant<TreePacking, PartitionCertificate>;

/// k(t-1) - e_F for partition f; positive means f witnesses infeasibility.
int tutte_deficiency(const Digraph& d, const Partition& f, int k);

/// Matroid union over k copies of the graphic matroid, augmenting paths in
/// the element exchange digraph. Deterministic: elements in id order, BFS
/// with ties broken by smallest id.
TreePackResult pack_spanning_trees(const Digraph& d, int k);

bool verify_tree_packing(const Digraph& d, const TreePacking& p);

}  // namespace arcpack

#pragma once

#include <stdexcept>
#include <vector>

#include "digraph.hpp"

namespace arcpack {

/// Per-vertex root multiplicities with total k.
struct RootVector {
    std::vector<int> multiplicity;  // indexed by vertex id
    int k = 0;

    void validate(int vertex_count) const;
    int total() const;
};

/// Pairwise arc-disjoint out-branchings; roots[i] is the root of
/// branchings[i].
struct BranchingSet {
    std::vector<ArcSet> branchings;
    std::vector<int> roots;
};

struct RootVectorCheck {
    bool ok = false;
    /// On failure: non-empty X with d_in(X) < k - r(X).
    std::vector<int> violating_x;
};

/// Decides the root-vector condition d^-(X) >= k - r(X) for all non-empty X
/// via max-flow from a super-root with r(v) parallel arcs to each v.
RootVectorCheck check_root_vector(const Digraph& d, const RootVector& r);

/// Constructs k arc-disjoint out-branchings with vertex v rooting exactly
/// r(v) of them. Throws infeasible_root_vector when check_root_vector fails.
BranchingSet pack_out_branchings(const Digraph& d, const RootVector& r);

/// Same on the arc-reversed digraph; returned arc ids refer to d.
BranchingSet pack_in_branchings(const Digraph& d, const RootVector& r);

bool verify_branching_set(const Digraph& d, const BranchingSet& b);

/// Does the set of roots in b match the multiset encoded by r?
bool roots_match(const BranchingSet& b, const RootVector& r);

/// Is `arcs` an out-branching of d rooted at `root`?
bool is_out_branching(const Digraph& d, const ArcSet& arcs, int root);

struct infeasible_root_vector : std::invalid_argument {
    explicit infeasible_root_vector(std::vector<int> x)
        : std::invalid_argument("root vector is infeasible"),
          violating_x(std::move(x)) {}
    std::vector<int> violating_x;
};

}  // namespace arcpack

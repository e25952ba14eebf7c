#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "gadget.hpp"

namespace arcpack {

/// Output of the Hamiltonian-cycle reductions: the constructed digraph and
/// the gadget port locations inside it.
struct HamReduction {
    Digraph digraph;
    std::map<std::string, int> ports;
    std::string provenance;
};

/// Guarantee: D (2-regular, 2-arc-strong) has two arc-disjoint Hamiltonian
/// cycles iff the output has two arc-disjoint Hamiltonian paths.
HamReduction ham_cycle_to_ham_path(const Digraph& d, int a);

/// Double-gadget variant: D has two arc-disjoint Hamiltonian cycles iff the
/// output has arc-disjoint branchings B_u^+, B_v^- for some u, v.
HamReduction ham_cycle_to_inout(const Digraph& d, int a);

/// Per-vertex expansion of a 2-regular 2-arc-strong digraph into a
/// k-regular one (k >= 3) preserving the in/out-branching-pair answer.
Digraph k_expand(const Digraph& d, int k);

struct Literal {
    int var = 0;
    bool negated = false;
    bool operator==(const Literal&) const = default;
};

/// 3-SAT instance; exactly three literals per clause. Repeated literals in
/// a clause are allowed (each position becomes its own occurrence vertex).
struct Cnf {
    int variable_count = 0;
    std::vector<std::array<Literal, 3>> clauses;

    void validate() const;
    bool evaluate(const std::vector<bool>& assignment) const;
    static Cnf parse_dimacs(const std::string& text);
    std::string to_dimacs() const;
};

/// The 2-regular digraph of the 3-SAT reduction, with decoding maps.
struct ReductionInstance {
    Digraph digraph;
    int s = 0, t = 0;
    /// literal_vertices[i][h] = a_{i,h}.
    std::vector<std::array<int, 3>> literal_vertices;
    /// Per variable: arcs of the y-route (positive occurrences, taken when
    /// the variable is false) and the z-route.
    std::vector<std::pair<ArcSet, ArcSet>> variable_routes;
    std::string provenance;
    bool cycle_variant = false;
    Cnf cnf;
};

ReductionInstance sat_to_instance(const Cnf& f, bool cycle_variant = false);

/// The chain (s,t)-path routed through all false literals; avoids at least
/// one vertex per clause triple iff the assignment satisfies the formula.
ArcSet assignment_to_path(const ReductionInstance& r,
                          const std::vector<bool>& assignment);

/// Inverse decoding: variable false precisely when the y-route is taken.
std::vector<bool> path_to_assignment(const ReductionInstance& r, const ArcSet& p);

}  // namespace arcpack

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "branching.hpp"
#include "digraph.hpp"
#include "reductions.hpp"

namespace arcpack {

/// Thrown when an input exceeds an oracle budget or a time limit expires.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleBudget {
    int max_vertices = 0;
    int max_arcs = 0;
    double time_limit_seconds = 0;
};

enum class OracleKind {
    HamPair,
    InOutPair,
    RemainderPath,
    TreePacking,
    TreeFamily,
    RootVector,
    Sat,
    Counterexample,
};

OracleBudget default_budget(OracleKind kind);

struct HamPairResult {
    bool found = false;
    ArcSet first, second;
};

/// Exhaustive enumeration of Hamiltonian cycles (mode cycles) or paths,
/// then pairwise arc-disjointness. Optional endpoint constraints apply to
/// paths only.
HamPairResult oracle_ham_pairs(const Digraph& d, bool cycles,
                               std::optional<int> start, std::optional<int> end,
                               const OracleBudget& budget);

struct InOutPairResult {
    bool found = false;
    ArcSet out_branching, in_branching;
    int u = -1, v = -1;
};

/// Arc-disjoint B_u^+ / B_v^- pair; roots free when unspecified.
InOutPairResult oracle_inout_pair(const Digraph& d, std::optional<int> u,
                                  std::optional<int> v,
                                  const OracleBudget& budget);

enum class RemainderRequirement { Connected, Strong, OutBranchingFromS };

struct PathWitness {
    bool found = false;
    std::vector<int> path;  // arc ids in traversal order
};

/// Enumerates directed (s,t)-paths and tests the requirement on D - A(P).
PathWitness oracle_remainder_path(const Digraph& d, int s, int t,
                                  RemainderRequirement requirement,
                                  const OracleBudget& budget);

/// Tutte condition checked over every partition of V (Bell enumeration).
bool oracle_tree_packing(const Digraph& d, int k, const OracleBudget& budget);

/// Same answer by enumerating k-tuples of disjoint spanning trees.
bool oracle_tree_family(const Digraph& d, int k, const OracleBudget& budget);

struct RootVectorOracleResult {
    bool ok = false;
    std::vector<int> violating_x;
};

/// Direct subset enumeration of d^-(X) >= k - r(X).
RootVectorOracleResult oracle_root_vector(const Digraph& d, const RootVector& r,
                                          const OracleBudget& budget);

struct SatResult {
    bool satisfiable = false;
    std::vector<bool> assignment;
};

SatResult oracle_sat(const Cnf& f, const OracleBudget& budget);

/// k pairwise arc-disjoint out-branchings with free roots, by enumeration.
bool oracle_out_branching_packing(const Digraph& d, int k,
                                  const OracleBudget& budget);

struct BranchingRemainderResult {
    bool found = false;
    ArcSet branching;
    int root = -1;
};

/// Some out-branching whose removal leaves UG(D) connected.
BranchingRemainderResult oracle_branching_connected_remainder(
    const Digraph& d, const OracleBudget& budget);

struct CounterexampleResult {
    bool found = false;
    std::optional<Digraph> digraph;
    ArcSet branching;  // out-branching with connected remainder
    int root = -1;
};

/// Smallest-first search for an Eulerian digraph that contains an
/// out-branching with connected remainder yet no two arc-disjoint
/// out-branchings (regularity cannot be dropped from the equivalence).
CounterexampleResult search_eulerian_counterexample(const OracleBudget& budget);

}  // namespace arcpack

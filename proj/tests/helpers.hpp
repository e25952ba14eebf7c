#pragma once

#include "digraph.hpp"

namespace arcpack::testing {

/// Bidirected triangle: 2-regular, 2-arc-strong, two arc-disjoint
/// Hamiltonian cycles.
inline Digraph k3bi() {
    return Digraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
}

inline Digraph c3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

/// Directed triangle with every arc doubled.
inline Digraph doubled_c3() {
    return Digraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}, {1, 2}, {2, 0}});
}

/// Two vertices with both arcs doubled: the smallest 2-regular
/// 2-arc-strong digraph.
inline Digraph k2bi_doubled() {
    return Digraph(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}});
}

/// 2-regular 2-arc-strong digraph with exactly one Hamiltonian cycle
/// (a "no" instance for two arc-disjoint Hamiltonian cycles).
inline Digraph single_ham_host() {
    return Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                       {0, 2}, {2, 0}, {1, 3}, {3, 1}});
}

/// Eulerian "flower": out-branching with connected remainder exists, but
/// no two arc-disjoint out-branchings.
inline Digraph flower() {
    return Digraph(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}});
}

inline Digraph path3() { return Digraph(3, {{0, 1}, {1, 2}}); }

}  // namespace arcpack::testing

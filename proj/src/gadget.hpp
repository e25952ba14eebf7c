#pragma once

#include <map>
#include <string>
#include <vector>

#include "digraph.hpp"

namespace arcpack {

/// The Cycle Breaker gadget: a fixed digraph with ports s (in-degree 0,
/// out-degree 2) and t (out-degree 0, in-degree 2) that admits a spanning
/// (s,t)-path, but removing the arcs of any such path disconnects it.
/// fragment_P extends a host (t,s)-path into a Hamiltonian (d,e)-path,
/// fragment_Q into a Hamiltonian (b,c)-path; the two are arc-disjoint.
struct Gadget {
    Digraph digraph;
    int s, t, b, c, d, e;
    ArcSet fragment_P;
    ArcSet fragment_Q;
};

/// The library's compiled-in gadget (6 vertices, 10 arcs, exactly two
/// spanning (s,t)-paths).
Gadget cycle_breaker();

struct GadgetReport {
    bool g1_degrees = false;        // port/internal degree pattern
    bool g2_insertion = false;      // splicing into a 2-regular 2-arc-strong
                                    // host preserves both properties
    bool g3_no_clean_path = false;  // every spanning (s,t)-path disconnects
    bool g4_fragments = false;      // fragment endpoint/coverage contract
    bool g5_path_exists = false;    // some spanning (s,t)-path exists
    bool all() const {
        return g1_degrees && g2_insertion && g3_no_clean_path && g4_fragments &&
               g5_path_exists;
    }
};

/// Exhaustive property check; refuses gadgets with more than 12 vertices.
GadgetReport verify_cycle_breaker(const Gadget& g);

/// Split host vertex a into a^-/a^+ and splice `copies` chained gadget
/// copies between them (a^- = s, t = s', ..., t_last = a^+). Port map keys:
/// "s", "t" and for two copies additionally "mid"; internal vertices of
/// copy c get keys "g<c>.<v>".
Digraph splice_into_host(const Digraph& host, int a, const Gadget& g,
                         int copies, std::map<std::string, int>* ports);

/// All spanning (s,t)-paths of d as arc-id sequences.
std::vector<std::vector<int>> spanning_st_paths(const Digraph& d, int s, int t);

}  // namespace arcpack

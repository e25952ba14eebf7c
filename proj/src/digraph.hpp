#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arcpack {

struct Arc {
    int tail = 0;
    int head = 0;
};

/// Sorted, duplicate-free list of arc ids referencing one Digraph.
using ArcSet = std::vector<int>;

/// Loopless directed multigraph. Arc ids are dense 0..m-1 in construction
/// order and never change; parallel arcs are distinguished by id only.
/// Immutable after construction.
class Digraph {
public:
    Digraph() : n_(0) {}
    Digraph(int vertex_count, std::vector<Arc> arcs,
            std::vector<std::string> labels = {});

    /// Text format: first non-comment line "n m", then m lines "tail head".
    /// Lines starting with '#' are ignored.
    static Digraph parse(const std::string& text);
    std::string format() const;
    std::string to_dot() const;

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int id) const { return arcs_[id]; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out_arcs(int v) const { return out_[v]; }
    const std::vector<int>& in_arcs(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Same vertex set and arc ids, every arc reversed.
    Digraph reversed() const;

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

struct CutDegrees {
    int d_in = 0;    // arcs entering X
    int d_out = 0;   // arcs leaving X
    int inside = 0;  // arcs with both ends in X
};

CutDegrees degrees(const Digraph& d, const std::vector<int>& x);

bool is_k_regular(const Digraph& d, int k);

/// (weakly connected, strongly connected).
std::pair<bool, bool> connectivity(const Digraph& d);

struct SplitResult {
    Digraph digraph;
    int v_minus;  // absorbs entering arcs
    int v_plus;   // emits leaving arcs
};

/// Replace v by v^- / v^+ with no connecting arc. v^- keeps the id of v,
/// v^+ is the new vertex n. Arc ids are unchanged.
SplitResult split_vertex(const Digraph& d, int v);

/// Vertex partition into disjoint non-empty blocks covering V.
struct Partition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    void validate(int vertex_count) const;
    /// Number of arcs whose endpoints lie in different blocks.
    int crossing_arcs(const Digraph& d) const;
    static Partition singletons(int vertex_count);
};

ArcSet make_arc_set(std::vector<int> ids, int arc_count);
bool arc_sets_disjoint(const ArcSet& a, const ArcSet& b);

/// Is `edges` (as undirected edges of UG(D)) a spanning tree of UG(D)?
bool is_spanning_tree(const Digraph& d, const ArcSet& edges);

/// Connectivity of UG(D) restricted to the given arcs, over all vertices.
bool ug_connected_with(const Digraph& d, const std::vector<char>& arc_present);

}  // namespace arcpack

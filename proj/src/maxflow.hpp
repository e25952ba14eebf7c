#pragma once

#include <vector>

#include "digraph.hpp"

namespace arcpack {

/// Unit-capacity max-flow (Dinic) over an explicit arc list. Parallel arcs
/// are kept as separate unit edges so witnesses stay id-exact.
class UnitFlow {
public:
    explicit UnitFlow(int vertex_count);
    /// Returns the internal edge index; arcs keep insertion order.
    int add_arc(int tail, int head);

    /// Max s-t flow, stopping early once `limit` is reached.
    int max_flow(int s, int t, int limit);

    /// Vertices reachable from s in the residual network of the last
    /// max_flow call (the source side of a minimum cut).
    std::vector<char> source_side(int s) const;

private:
    struct Edge {
        int to;
        int cap;
    };
    bool bfs(int s, int t);
    int dfs(int u, int t, int pushed);

    int n_;
    std::vector<Edge> edges_;  // paired: i ^ 1 is the reverse edge
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

/// Max number of arc-disjoint (s,t)-paths in d, counting only enabled arcs.
/// `enabled` may be empty (all arcs enabled).
int arc_disjoint_paths(const Digraph& d, int s, int t, int limit,
                       const std::vector<char>& enabled = {});

struct ArcStrengthResult {
    bool ok = false;
    /// On failure: non-empty proper X with d_out(X) < k.
    std::vector<int> witness;
};

/// Is d k-arc-strong? Unit-capacity flow between vertex 0 and every other
/// vertex in both directions; witness is the source side of a deficient cut.
ArcStrengthResult arc_connectivity_at_least(const Digraph& d, int k);

}  // namespace arcpack

#include "maxflow.hpp"

#include <deque>
#include <stdexcept>

namespace arcpack {

UnitFlow::UnitFlow(int vertex_count) : n_(vertex_count), adj_(vertex_count) {}

int UnitFlow::add_arc(int tail, int head) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({head, 1});
    edges_.push_back({tail, 0});
    adj_[tail].push_back(id);
    adj_[head].push_back(id + 1);
    return id;
}

bool UnitFlow::bfs(int s, int t) {
    level_.assign(n_, -1);
    std::deque<int> q{s};
    level_[s] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int e : adj_[u]) {
            if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                level_[edges_[e].to] = level_[u] + 1;
                q.push_back(edges_[e].to);
            }
        }
    }
    return level_[t] >= 0;
}

int UnitFlow::dfs(int u, int t, int pushed) {
    if (u == t) return pushed;
    for (int& i = iter_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
        int e = adj_[u][i];
        int v = edges_[e].to;
        if (edges_[e].cap > 0 && level_[v] == level_[u] + 1) {
            int got = dfs(v, t, std::min(pushed, edges_[e].cap));
            if (got > 0) {
                edges_[e].cap -= got;
                edges_[e ^ 1].cap += got;
                return got;
            }
        }
    }
    return 0;
}

int UnitFlow::max_flow(int s, int t, int limit) {
    if (s == t) throw std::invalid_argument("max_flow: s == t");
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
        iter_.assign(n_, 0);
        int got;
        while (flow < limit && (got = dfs(s, t, limit - flow)) > 0) flow += got;
    }
    return flow;
}

std::vector<char> UnitFlow::source_side(int s) const {
    std::vector<char> seen(n_, 0);
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int e : adj_[u]) {
            if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                seen[edges_[e].to] = 1;
                q.push_back(edges_[e].to);
            }
        }
    }
    return seen;
}

int arc_disjoint_paths(const Digraph& d, int s, int t, int limit,
                       const std::vector<char>& enabled) {
    UnitFlow flow(d.vertex_count());
    for (int id = 0; id < d.arc_count(); ++id)
        if (enabled.empty() || enabled[id])
            flow.add_arc(d.arc(id).tail, d.arc(id).head);
    return flow.max_flow(s, t, limit);
}

ArcStrengthResult arc_connectivity_at_least(const Digraph& d, int k) {
    if (k <= 0) throw std::invalid_argument("arc_connectivity: k must be positive");
    if (d.vertex_count() < 2)
        throw std::invalid_argument("arc_connectivity: need at least 2 vertices");
    for (int v = 1; v < d.vertex_count(); ++v) {
        for (auto [s, t] : {std::pair{0, v}, std::pair{v, 0}}) {
            UnitFlow flow(d.vertex_count());
            for (const Arc& a : d.arcs()) flow.add_arc(a.tail, a.head);
            if (flow.max_flow(s, t, k) < k) {
                std::vector<char> side = flow.source_side(s);
                ArcStrengthResult r;
                for (int u = 0; u < d.vertex_count(); ++u)
                    if (side[u]) r.witness.push_back(u);
                return r;
            }
        }
    }
    return {true, {}};
}

}  // namespace arcpack

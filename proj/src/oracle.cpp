#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <numeric>

namespace arcpack {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at;
    mutable int countdown = 0;

    explicit Deadline(double seconds)
        : at(Clock::now() +
             std::chrono::microseconds(static_cast<long long>(seconds * 1e6))) {}

    void check() const {
        if (--countdown > 0) return;
        countdown = 512;
        if (Clock::now() > at) throw budget_error("oracle time limit exceeded");
    }
};

void require_size(const Digraph& d, const OracleBudget& b) {
    if (d.vertex_count() > b.max_vertices)
        throw budget_error("input exceeds oracle vertex budget (" +
                           std::to_string(d.vertex_count()) + " > " +
                           std::to_string(b.max_vertices) + ")");
    if (d.arc_count() > b.max_arcs)
        throw budget_error("input exceeds oracle arc budget (" +
                           std::to_string(d.arc_count()) + " > " +
                           std::to_string(b.max_arcs) + ")");
}

// Enumerate out-branchings rooted at `root` using only enabled arcs; each
// non-root vertex picks one in-arc (in id order). Stop when the callback
// returns true.
bool for_each_out_branching(const Digraph& d, int root,
                            const std::vector<char>& enabled,
                            const Deadline& deadline,
                            const std::function<bool(const ArcSet&)>& visit) {
    int n = d.vertex_count();
    std::vector<int> parent_arc(n, -1);
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (v != root) order.push_back(v);

    std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
        deadline.check();
        if (idx == order.size()) {
            // acyclicity toward the root
            for (int v : order) {
                int x = v, steps = 0;
                while (x != root) {
                    if (++steps > n) return false;
                    x = d.arc(parent_arc[x]).tail;
                }
            }
            ArcSet arcs;
            for (int v : order) arcs.push_back(parent_arc[v]);
            std::sort(arcs.begin(), arcs.end());
            return visit(arcs);
        }
        int v = order[idx];
        for (int a : d.in_arcs(v)) {
            if (!enabled.empty() && !enabled[a]) continue;
            parent_arc[v] = a;
            if (rec(idx + 1)) return true;
        }
        parent_arc[v] = -1;
        return false;
    };
    return rec(0);
}

bool all_reach(const Digraph& d, int target, const std::vector<char>& enabled,
               bool toward) {
    // toward=true: every vertex reaches target; else: target reaches all.
    int n = d.vertex_count();
    std::vector<char> seen(n, 0);
    std::deque<int> q{target};
    seen[target] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        const auto& arcs = toward ? d.in_arcs(u) : d.out_arcs(u);
        for (int a : arcs) {
            if (!enabled.empty() && !enabled[a]) continue;
            int w = toward ? d.arc(a).tail : d.arc(a).head;
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push_back(w);
            }
        }
    }
    return count == n;
}

// In-branching rooted at v from enabled arcs (assumes all vertices reach v).
ArcSet extract_in_branching(const Digraph& d, int v,
                            const std::vector<char>& enabled) {
    int n = d.vertex_count();
    std::vector<int> out_arc(n, -1);
    std::deque<int> q{v};
    std::vector<char> seen(n, 0);
    seen[v] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int a : d.in_arcs(u)) {
            if (!enabled.empty() && !enabled[a]) continue;
            int w = d.arc(a).tail;
            if (!seen[w]) {
                seen[w] = 1;
                out_arc[w] = a;
                q.push_back(w);
            }
        }
    }
    ArcSet arcs;
    for (int w = 0; w < n; ++w)
        if (w != v) arcs.push_back(out_arc[w]);
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

}  // namespace

OracleBudget default_budget(OracleKind kind) {
    switch (kind) {
        case OracleKind::HamPair: return {16, 48, 60.0};
        case OracleKind::InOutPair: return {20, 64, 120.0};
        case OracleKind::RemainderPath: return {64, 128, 300.0};
        case OracleKind::TreePacking: return {8, 32, 60.0};
        case OracleKind::TreeFamily: return {8, 14, 60.0};
        case OracleKind::RootVector: return {6, 64, 60.0};
        case OracleKind::Sat: return {20, 1 << 20, 60.0};
        case OracleKind::Counterexample: return {7, 32, 600.0};
    }
    return {};
}

HamPairResult oracle_ham_pairs(const Digraph& d, bool cycles,
                               std::optional<int> start, std::optional<int> end,
                               const OracleBudget& budget) {
    require_size(d, budget);
    Deadline deadline(budget.time_limit_seconds);
    int n = d.vertex_count();
    std::vector<ArcSet> found;
    HamPairResult result;

    std::vector<char> visited(n, 0);
    std::vector<int> path;
    auto record = [&]() {
        ArcSet arcs(path.begin(), path.end());
        std::sort(arcs.begin(), arcs.end());
        for (const ArcSet& other : found)
            if (arc_sets_disjoint(arcs, other)) {
                result = {true, other, arcs};
                return true;
            }
        found.push_back(std::move(arcs));
        return false;
    };
    std::function<bool(int, int, int)> dfs = [&](int u, int count,
                                                 int origin) -> bool {
        deadline.check();
        if (cycles) {
            for (int a : d.out_arcs(u))
                if (d.arc(a).head == origin && count == n) {
                    path.push_back(a);
                    bool done = record();
                    path.pop_back();
                    if (done) return true;
                }
        } else if (count == n && (!end || *end == u)) {
            if (record()) return true;
        }
        for (int a : d.out_arcs(u)) {
            int v = d.arc(a).head;
            if (!visited[v]) {
                visited[v] = 1;
                path.push_back(a);
                bool done = dfs(v, count + 1, origin);
                path.pop_back();
                visited[v] = 0;
                if (done) return true;
            }
        }
        return false;
    };

    std::vector<int> starts;
    if (cycles) starts = {0};  // every Hamiltonian cycle passes vertex 0
    else if (start) starts = {*start};
    else {
        starts.resize(n);
        std::iota(starts.begin(), starts.end(), 0);
    }
    for (int s0 : starts) {
        if (n == 0) break;
        visited.assign(n, 0);
        visited[s0] = 1;
        if (dfs(s0, 1, s0)) return result;
    }
    return result;
}

InOutPairResult oracle_inout_pair(const Digraph& d, std::optional<int> u,
                                  std::optional<int> v,
                                  const OracleBudget& budget) {
    require_size(d, budget);
    Deadline deadline(budget.time_limit_seconds);
    int n = d.vertex_count();
    std::vector<int> out_roots, in_roots;
    if (u) out_roots = {*u};
    else {
        out_roots.resize(n);
        std::iota(out_roots.begin(), out_roots.end(), 0);
    }
    if (v) in_roots = {*v};
    else {
        in_roots.resize(n);
        std::iota(in_roots.begin(), in_roots.end(), 0);
    }

    InOutPairResult result;
    std::vector<char> enabled(d.arc_count(), 1);
    for (int root : out_roots) {
        bool stop = for_each_out_branching(
            d, root, {}, deadline, [&](const ArcSet& branching) {
                std::vector<char> rest(d.arc_count(), 1);
                for (int id : branching) rest[id] = 0;
                for (int in_root : in_roots) {
                    if (all_reach(d, in_root, rest, true)) {
                        result = {true, branching,
                                  extract_in_branching(d, in_root, rest), root,
                                  in_root};
                        return true;
                    }
                }
                return false;
            });
        if (stop) return result;
    }
    return result;
}

PathWitness oracle_remainder_path(const Digraph& d, int s, int t,
                                  RemainderRequirement requirement,
                                  const OracleBudget& budget) {
    require_size(d, budget);
    if (s < 0 || s >= d.vertex_count() || t < 0 || t >= d.vertex_count() || s == t)
        throw std::invalid_argument("oracle_remainder_path: bad endpoints");
    Deadline deadline(budget.time_limit_seconds);
    int n = d.vertex_count();

    std::vector<char> present(d.arc_count(), 1);
    auto satisfied = [&]() {
        switch (requirement) {
            case RemainderRequirement::Connected:
                return ug_connected_with(d, present);
            case RemainderRequirement::Strong:
                return all_reach(d, s, present, true) &&
                       all_reach(d, s, present, false);
            case RemainderRequirement::OutBranchingFromS:
                return all_reach(d, s, present, false);
        }
        return false;
    };

    std::vector<char> visited(n, 0);
    std::vector<int> path;
    visited[s] = 1;
    PathWitness witness;
    std::function<bool(int)> dfs = [&](int vtx) -> bool {
        deadline.check();
        if (vtx == t) {
            if (satisfied()) {
                witness = {true, path};
                return true;
            }
            return false;
        }
        for (int a : d.out_arcs(vtx)) {
            int w = d.arc(a).head;
            if (visited[w]) continue;
            visited[w] = 1;
            path.push_back(a);
            present[a] = 0;
            bool done = dfs(w);
            present[a] = 1;
            path.pop_back();
            visited[w] = 0;
            if (done) return true;
        }
        return false;
    };
    dfs(s);
    return witness;
}

bool oracle_tree_packing(const Digraph& d, int k, const OracleBudget& budget) {
    require_size(d, budget);
    if (k <= 0) throw std::invalid_argument("oracle_tree_packing: k > 0 required");
    Deadline deadline(budget.time_limit_seconds);
    int n = d.vertex_count();
    if (n <= 1) return true;
    std::vector<int> rgs(n, 0);
    while (true) {
        deadline.check();
        int t = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (t > 1) {
            std::vector<int> block_of(rgs.begin(), rgs.end());
            int crossing = 0;
            for (const Arc& a : d.arcs())
                if (block_of[a.tail] != block_of[a.head]) ++crossing;
            if (crossing < k * (t - 1)) return false;
        }
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0) return true;
    }
}

bool oracle_tree_family(const Digraph& d, int k, const OracleBudget& budget) {
    require_size(d, budget);
    Deadline deadline(budget.time_limit_seconds);
    int n = d.vertex_count();
    if (n <= 1) return true;
    // all spanning trees as (n-1)-subsets of arc ids
    std::vector<ArcSet> trees;
    ArcSet pick;
    std::function<void(int)> choose = [&](int from) {
        deadline.check();
        if (static_cast<int>(pick.size()) == n - 1) {
            if (is_spanning_tree(d, pick)) trees.push_back(pick);
            return;
        }
        for (int id = from; id < d.arc_count(); ++id) {
            pick.push_back(id);
            choose(id + 1);
            pick.pop_back();
        }
    };
    choose(0);
    std::vector<int> chosen;
    std::function<bool(int, int)> select = [&](int from, int left) -> bool {
        deadline.check();
        if (left == 0) return true;
        for (int i = from; i < static_cast<int>(trees.size()); ++i) {
            bool ok = true;
            for (int j : chosen)
                if (!arc_sets_disjoint(trees[i], trees[j])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            if (select(i + 1, left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return select(0, k);
}

RootVectorOracleResult oracle_root_vector(const Digraph& d, const RootVector& r,
                                          const OracleBudget& budget) {
    require_size(d, budget);
    r.validate(d.vertex_count());
    Deadline deadline(budget.time_limit_seconds);
    int n = d.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        deadline.check();
        int rx = 0, d_in = 0;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) rx += r.multiplicity[v];
        for (const Arc& a : d.arcs())
            if ((mask & (1u << a.head)) && !(mask & (1u << a.tail))) ++d_in;
        if (d_in < r.k - rx) {
            RootVectorOracleResult res;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) res.violating_x.push_back(v);
            return res;
        }
    }
    return {true, {}};
}

SatResult oracle_sat(const Cnf& f, const OracleBudget& budget) {
    if (f.variable_count > budget.max_vertices)
        throw budget_error("formula exceeds oracle variable budget");
    f.validate();
    Deadline deadline(budget.time_limit_seconds);
    int n = f.variable_count;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        deadline.check();
        std::vector<bool> assignment(n);
        for (int v = 0; v < n; ++v) assignment[v] = mask & (1u << v);
        if (f.evaluate(assignment)) return {true, assignment};
    }
    return {false, {}};
}

bool oracle_out_branching_packing(const Digraph& d, int k,
                                  const OracleBudget& budget) {
    require_size(d, budget);
    if (k <= 0) throw std::invalid_argument("need k > 0");
    Deadline deadline(budget.time_limit_seconds);
    int n = d.vertex_count();

    std::function<bool(const std::vector<char>&, int)> pack =
        [&](const std::vector<char>& enabled, int left) -> bool {
        if (left == 1) {
            for (int root = 0; root < n; ++root)
                if (all_reach(d, root, enabled, false)) return true;
            return false;
        }
        for (int root = 0; root < n; ++root) {
            bool stop = for_each_out_branching(
                d, root, enabled, deadline, [&](const ArcSet& branching) {
                    std::vector<char> rest = enabled;
                    for (int id : branching) rest[id] = 0;
                    return pack(rest, left - 1);
                });
            if (stop) return true;
        }
        return false;
    };
    return pack(std::vector<char>(d.arc_count(), 1), k);
}

BranchingRemainderResult oracle_branching_connected_remainder(
    const Digraph& d, const OracleBudget& budget) {
    require_size(d, budget);
    Deadline deadline(budget.time_limit_seconds);
    BranchingRemainderResult result;
    for (int root = 0; root < d.vertex_count(); ++root) {
        bool stop = for_each_out_branching(
            d, root, {}, deadline, [&](const ArcSet& branching) {
                std::vector<char> rest(d.arc_count(), 1);
                for (int id : branching) rest[id] = 0;
                if (ug_connected_with(d, rest)) {
                    result = {true, branching, root};
                    return true;
                }
                return false;
            });
        if (stop) return result;
    }
    return result;
}

CounterexampleResult search_eulerian_counterexample(const OracleBudget& budget) {
    Deadline deadline(budget.time_limit_seconds);
    OracleBudget inner = budget;
    for (int n = 3; n <= budget.max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) pairs.push_back({u, v});
        for (int m = 2 * n - 2; m <= std::min(2 * n, budget.max_arcs); ++m) {
            // lexicographic multisets of ordered pairs, multiplicity <= 2
            std::vector<int> chosen;
            CounterexampleResult found;
            std::function<bool(int)> rec = [&](int from) -> bool {
                deadline.check();
                if (static_cast<int>(chosen.size()) == m) {
                    std::vector<int> din(n, 0), dout(n, 0);
                    std::vector<Arc> arcs;
                    for (int p : chosen) {
                        ++dout[pairs[p].first];
                        ++din[pairs[p].second];
                        arcs.push_back({pairs[p].first, pairs[p].second});
                    }
                    for (int v = 0; v < n; ++v)
                        if (din[v] != dout[v] || din[v] == 0) return false;
                    Digraph cand(n, std::move(arcs));
                    if (!connectivity(cand).first) return false;
                    auto mixed = oracle_branching_connected_remainder(cand, inner);
                    if (!mixed.found) return false;
                    if (oracle_out_branching_packing(cand, 2, inner)) return false;
                    found = {true, cand, mixed.branching, mixed.root};
                    return true;
                }
                int start = chosen.empty() ? 0 : chosen.back();
                for (int p = start; p < static_cast<int>(pairs.size()); ++p) {
                    if (chosen.size() >= 2 &&
                        chosen[chosen.size() - 2] == p && chosen.back() == p)
                        continue;  // multiplicity cap 2
                    chosen.push_back(p);
                    if (rec(p)) return true;
                    chosen.pop_back();
                }
                return false;
            };
            if (rec(0)) return found;
        }
    }
    return {};
}

}  // namespace arcpack

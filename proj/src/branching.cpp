#include "branching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "maxflow.hpp"

namespace arcpack {

void RootVector::validate(int vertex_count) const {
    if (static_cast<int>(multiplicity.size()) != vertex_count)
        throw std::invalid_argument("root vector size does not match digraph");
    if (k <= 0) throw std::invalid_argument("root vector: k must be positive");
    for (int r : multiplicity)
        if (r < 0) throw std::invalid_argument("negative root multiplicity");
    if (total() != k)
        throw std::invalid_argument("root multiplicities must sum to k");
}

int RootVector::total() const {
    int s = 0;
    for (int r : multiplicity) s += r;
    return s;
}

namespace {

// Digraph plus super-root rho = n with r(v) parallel arcs rho -> v.
// Super arcs get ids m .. m+k-1; original ids are unchanged.
struct Augmented {
    Digraph graph;
    int rho;

    static Augmented build(const Digraph& d, const RootVector& r) {
        std::vector<Arc> arcs = d.arcs();
        int rho = d.vertex_count();
        for (int v = 0; v < d.vertex_count(); ++v)
            for (int i = 0; i < r.multiplicity[v]; ++i) arcs.push_back({rho, v});
        return {Digraph(d.vertex_count() + 1, std::move(arcs)), rho};
    }
};

int flow_from(const Digraph& g, const std::vector<char>& enabled, int s, int t,
              int limit, std::vector<char>* source_side = nullptr) {
    UnitFlow flow(g.vertex_count());
    for (int id = 0; id < g.arc_count(); ++id)
        if (enabled[id]) flow.add_arc(g.arc(id).tail, g.arc(id).head);
    int f = flow.max_flow(s, t, limit);
    if (source_side) *source_side = flow.source_side(s);
    return f;
}

}  // namespace

RootVectorCheck check_root_vector(const Digraph& d, const RootVector& r) {
    r.validate(d.vertex_count());
    Augmented aug = Augmented::build(d, r);
    std::vector<char> all(aug.graph.arc_count(), 1);
    for (int v = 0; v < d.vertex_count(); ++v) {
        std::vector<char> side;
        if (flow_from(aug.graph, all, aug.rho, v, r.k, &side) < r.k) {
            RootVectorCheck res;
            for (int u = 0; u < d.vertex_count(); ++u)
                if (!side[u]) res.violating_x.push_back(u);
            // Menger: the sink side X of a deficient cut has
            // d^-(X) + r(X) < k.
            CutDegrees deg = degrees(d, res.violating_x);
            int rx = 0;
            for (int u : res.violating_x) rx += r.multiplicity[u];
            if (deg.d_in >= r.k - rx)
                throw std::logic_error("check_root_vector: witness defect");
            return res;
        }
    }
    return {true, {}};
}

BranchingSet pack_out_branchings(const Digraph& d, const RootVector& r) {
    RootVectorCheck check = check_root_vector(d, r);
    if (!check.ok) throw infeasible_root_vector(check.violating_x);

    Augmented aug = Augmented::build(d, r);
    const Digraph& g = aug.graph;
    int n = d.vertex_count();
    int k = r.k;
    std::vector<char> avail(g.arc_count(), 1);

    BranchingSet result;
    for (int b = 0; b < k; ++b) {
        int needed_after = k - b - 1;
        std::vector<char> in_tree(g.vertex_count(), 0);
        in_tree[aug.rho] = 1;
        std::vector<int> tree_arcs;
        int covered = 0;
        while (covered < n) {
            int admitted = -1;
            for (int a = 0; a < g.arc_count() && admitted < 0; ++a) {
                if (!avail[a] || !in_tree[g.arc(a).tail] || in_tree[g.arc(a).head])
                    continue;
                avail[a] = 0;
                // Admissibility invariant: after removing the candidate,
                // every vertex keeps k-b-1 arc-disjoint paths from the
                // super-root for the branchings still to be built.
                bool ok = true;
                for (int v = 0; v < n && ok; ++v) {
                    if (needed_after > 0 &&
                        flow_from(g, avail, aug.rho, v, needed_after) <
                            needed_after)
                        ok = false;
                }
                if (ok) admitted = a;
                else avail[a] = 1;
            }
            if (admitted < 0)
                throw std::logic_error(
                    "pack_out_branchings: no admissible arc (internal defect)");
            in_tree[g.arc(admitted).head] = 1;
            tree_arcs.push_back(admitted);
            ++covered;
        }
        // Exactly one super-root arc per branching; its head is the root.
        int root = -1;
        ArcSet real_arcs;
        for (int a : tree_arcs) {
            if (g.arc(a).tail == aug.rho) {
                if (root >= 0)
                    throw std::logic_error(
                        "pack_out_branchings: branching uses two super arcs");
                root = g.arc(a).head;
            } else {
                real_arcs.push_back(a);
            }
        }
        if (root < 0)
            throw std::logic_error("pack_out_branchings: missing super arc");
        std::sort(real_arcs.begin(), real_arcs.end());
        result.branchings.push_back(std::move(real_arcs));
        result.roots.push_back(root);
    }
    if (!verify_branching_set(d, result) || !roots_match(result, r))
        throw std::logic_error("pack_out_branchings: produced invalid packing");
    return result;
}

BranchingSet pack_in_branchings(const Digraph& d, const RootVector& r) {
    BranchingSet rev = pack_out_branchings(d.reversed(), r);
    return rev;  // arc ids are preserved by reversal
}

bool is_out_branching(const Digraph& d, const ArcSet& arcs, int root) {
    int n = d.vertex_count();
    if (root < 0 || root >= n) return false;
    if (static_cast<int>(arcs.size()) != n - 1) return false;
    std::vector<int> parent_arc(n, -1);
    for (int id : arcs) {
        if (id < 0 || id >= d.arc_count()) return false;
        int h = d.arc(id).head;
        if (h == root || parent_arc[h] >= 0) return false;
        parent_arc[h] = id;
    }
    // every non-root has in-degree 1; check all reach root via parents
    for (int v = 0; v < n; ++v) {
        int x = v, steps = 0;
        while (x != root) {
            if (parent_arc[x] < 0 || ++steps > n) return false;
            x = d.arc(parent_arc[x]).tail;
        }
    }
    return true;
}

bool verify_branching_set(const Digraph& d, const BranchingSet& b) {
    if (b.branchings.size() != b.roots.size()) return false;
    std::vector<char> used(d.arc_count(), 0);
    for (size_t i = 0; i < b.branchings.size(); ++i) {
        if (!is_out_branching(d, b.branchings[i], b.roots[i])) return false;
        for (int id : b.branchings[i]) {
            if (used[id]) return false;
            used[id] = 1;
        }
    }
    return true;
}

bool roots_match(const BranchingSet& b, const RootVector& r) {
    std::vector<int> count(r.multiplicity.size(), 0);
    for (int root : b.roots) {
        if (root < 0 || root >= static_cast<int>(count.size())) return false;
        ++count[root];
    }
    return count == r.multiplicity;
}

}  // namespace arcpack

#include "digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace arcpack {

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs,
                 std::vector<std::string> labels)
    : n_(vertex_count), arcs_(std::move(arcs)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("label count does not match vertex count");
    for (size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            throw std::invalid_argument("arc " + std::to_string(i) +
                                        " has an out-of-range endpoint");
        if (a.tail == a.head)
            throw std::invalid_argument("arc " + std::to_string(i) +
                                        " is a self-loop");
    }
    out_.resize(n_);
    in_.resize(n_);
    for (size_t i = 0; i < arcs_.size(); ++i) {
        out_[arcs_[i].tail].push_back(static_cast<int>(i));
        in_[arcs_[i].head].push_back(static_cast<int>(i));
    }
}

Digraph Digraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        size_t p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected header 'n m'");
            arcs.reserve(m);
        } else {
            Arc a;
            if (!(ls >> a.tail >> a.head))
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected 'tail head'");
            arcs.push_back(a);
        }
    }
    if (n < 0) throw std::invalid_argument("empty digraph file");
    if (static_cast<int>(arcs.size()) != m)
        throw std::invalid_argument("header announced " + std::to_string(m) +
                                    " arcs, found " +
                                    std::to_string(arcs.size()));
    return Digraph(n, std::move(arcs));
}

std::string Digraph::format() const {
    std::ostringstream out;
    out << n_ << ' ' << arcs_.size() << '\n';
    for (const Arc& a : arcs_) out << a.tail << ' ' << a.head << '\n';
    return out.str();
}

std::string Digraph::to_dot() const {
    std::ostringstream out;
    out << "digraph D {\n";
    for (int v = 0; v < n_; ++v) {
        out << "  " << v;
        if (!labels_.empty() && !labels_[v].empty())
            out << " [label=\"" << labels_[v] << "\"]";
        out << ";\n";
    }
    for (size_t i = 0; i < arcs_.size(); ++i)
        out << "  " << arcs_[i].tail << " -> " << arcs_[i].head
            << " [label=\"" << i << "\"];\n";
    out << "}\n";
    return out.str();
}

Digraph Digraph::reversed() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (const Arc& a : arcs_) rev.push_back({a.head, a.tail});
    return Digraph(n_, std::move(rev), labels_);
}

CutDegrees degrees(const Digraph& d, const std::vector<int>& x) {
    if (x.empty()) throw std::invalid_argument("degrees: empty vertex set");
    std::vector<char> in_x(d.vertex_count(), 0);
    for (int v : x) {
        if (v < 0 || v >= d.vertex_count())
            throw std::invalid_argument("degrees: vertex out of range");
        in_x[v] = 1;
    }
    CutDegrees r;
    for (const Arc& a : d.arcs()) {
        if (in_x[a.tail] && in_x[a.head]) ++r.inside;
        else if (in_x[a.head]) ++r.d_in;
        else if (in_x[a.tail]) ++r.d_out;
    }
    return r;
}

bool is_k_regular(const Digraph& d, int k) {
    if (k <= 0) throw std::invalid_argument("is_k_regular: k must be positive");
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.out_degree(v) != k || d.in_degree(v) != k) return false;
    return true;
}

namespace {

int reach_count(const Digraph& d, int start, bool forward, bool undirected) {
    std::vector<char> seen(d.vertex_count(), 0);
    std::deque<int> q{start};
    seen[start] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        auto visit = [&](int v) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push_back(v);
            }
        };
        if (forward || undirected)
            for (int a : d.out_arcs(u)) visit(d.arc(a).head);
        if (!forward || undirected)
            for (int a : d.in_arcs(u)) visit(d.arc(a).tail);
    }
    return count;
}

}  // namespace

std::pair<bool, bool> connectivity(const Digraph& d) {
    if (d.vertex_count() == 0) return {true, true};
    int n = d.vertex_count();
    bool weak = reach_count(d, 0, true, true) == n;
    bool strong = weak && reach_count(d, 0, true, false) == n &&
                  reach_count(d, 0, false, false) == n;
    return {weak, strong};
}

SplitResult split_vertex(const Digraph& d, int v) {
    if (v < 0 || v >= d.vertex_count())
        throw std::invalid_argument("split_vertex: vertex out of range");
    int v_plus = d.vertex_count();
    std::vector<Arc> arcs = d.arcs();
    for (Arc& a : arcs)
        if (a.tail == v) a.tail = v_plus;
    return {Digraph(d.vertex_count() + 1, std::move(arcs)), v, v_plus};
}

void Partition::validate(int vertex_count) const {
    std::vector<char> seen(vertex_count, 0);
    int covered = 0;
    if (blocks.empty()) throw std::invalid_argument("partition has no blocks");
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("partition has an empty block");
        for (int v : b) {
            if (v < 0 || v >= vertex_count)
                throw std::invalid_argument("partition vertex out of range");
            if (seen[v])
                throw std::invalid_argument("partition blocks overlap");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != vertex_count)
        throw std::invalid_argument("partition does not cover all vertices");
}

int Partition::crossing_arcs(const Digraph& d) const {
    std::vector<int> block_of(d.vertex_count(), -1);
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int v : blocks[i]) block_of[v] = static_cast<int>(i);
    int count = 0;
    for (const Arc& a : d.arcs())
        if (block_of[a.tail] != block_of[a.head]) ++count;
    return count;
}

Partition Partition::singletons(int vertex_count) {
    Partition p;
    p.blocks.resize(vertex_count);
    for (int v = 0; v < vertex_count; ++v) p.blocks[v] = {v};
    return p;
}

ArcSet make_arc_set(std::vector<int> ids, int arc_count) {
    std::sort(ids.begin(), ids.end());
    for (size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= arc_count)
            throw std::invalid_argument("arc id out of range");
        if (i > 0 && ids[i] == ids[i - 1])
            throw std::invalid_argument("duplicate arc id in arc set");
    }
    return ids;
}

bool arc_sets_disjoint(const ArcSet& a, const ArcSet& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

bool is_spanning_tree(const Digraph& d, const ArcSet& edges) {
    int n = d.vertex_count();
    if (static_cast<int>(edges.size()) != n - 1) return false;
    Dsu dsu(n);
    for (int id : edges) {
        if (id < 0 || id >= d.arc_count())
            throw std::invalid_argument("is_spanning_tree: arc id out of range");
        if (!dsu.unite(d.arc(id).tail, d.arc(id).head)) return false;
    }
    return true;
}

bool ug_connected_with(const Digraph& d, const std::vector<char>& arc_present) {
    int n = d.vertex_count();
    if (n <= 1) return true;
    Dsu dsu(n);
    int components = n;
    for (int id = 0; id < d.arc_count(); ++id)
        if (arc_present[id] && dsu.unite(d.arc(id).tail, d.arc(id).head))
            --components;
    return components == 1;
}

}  // namespace arcpack

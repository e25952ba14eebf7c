#include "reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "maxflow.hpp"

namespace arcpack {

namespace {

void require_host(const Digraph& d, const char* who) {
    if (!is_k_regular(d, 2))
        throw std::invalid_argument(std::string(who) + ": host must be 2-regular");
    if (!arc_connectivity_at_least(d, 2).ok)
        throw std::invalid_argument(std::string(who) +
                                    ": host must be 2-arc-strong");
}

void assert_output(const Digraph& d, int k, const char* who) {
    if (!is_k_regular(d, k) || !arc_connectivity_at_least(d, 2).ok)
        throw std::logic_error(std::string(who) +
                               ": construction lost regularity or arc-strength");
}

}  // namespace

HamReduction ham_cycle_to_ham_path(const Digraph& d, int a) {
    require_host(d, "ham_cycle_to_ham_path");
    std::map<std::string, int> ports;
    Digraph out = splice_into_host(d, a, cycle_breaker(), 1, &ports);
    assert_output(out, 2, "ham_cycle_to_ham_path");
    return {std::move(out), std::move(ports), "ham-path"};
}

HamReduction ham_cycle_to_inout(const Digraph& d, int a) {
    require_host(d, "ham_cycle_to_inout");
    std::map<std::string, int> ports;
    Digraph out = splice_into_host(d, a, cycle_breaker(), 2, &ports);
    assert_output(out, 2, "ham_cycle_to_inout");
    return {std::move(out), std::move(ports), "ham-inout"};
}

Digraph k_expand(const Digraph& d, int k) {
    if (k < 3) throw std::invalid_argument("k_expand: k must be at least 3");
    require_host(d, "k_expand");
    // Per original vertex v: v^- = 4v, v^+ = 4v+1, H = {4v+2, 4v+3}.
    auto minus = [](int v) { return 4 * v; };
    auto plus = [](int v) { return 4 * v + 1; };
    auto hb = [](int v) { return 4 * v + 2; };
    auto hc = [](int v) { return 4 * v + 3; };
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs()) arcs.push_back({plus(a.tail), minus(a.head)});
    for (int v = 0; v < d.vertex_count(); ++v) {
        arcs.push_back({minus(v), plus(v)});
        arcs.push_back({minus(v), plus(v)});
        arcs.push_back({hb(v), hc(v)});
        arcs.push_back({hb(v), hc(v)});
        arcs.push_back({hc(v), hb(v)});
        arcs.push_back({hc(v), hb(v)});
        for (int i = 0; i < k - 2; ++i) {
            arcs.push_back({minus(v), hb(v)});
            arcs.push_back({hb(v), plus(v)});
            arcs.push_back({plus(v), hc(v)});
            arcs.push_back({hc(v), minus(v)});
        }
    }
    Digraph out(4 * d.vertex_count(), std::move(arcs));
    assert_output(out, k, "k_expand");
    return out;
}

void Cnf::validate() const {
    std::vector<char> occurs(variable_count, 0);
    for (const auto& clause : clauses)
        for (const Literal& lit : clause) {
            if (lit.var < 0 || lit.var >= variable_count)
                throw std::invalid_argument("cnf: literal variable out of range");
            occurs[lit.var] = 1;
        }
    for (int v = 0; v < variable_count; ++v)
        if (!occurs[v])
            throw std::invalid_argument("cnf: variable " + std::to_string(v + 1) +
                                        " never occurs");
}

bool Cnf::evaluate(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
        bool sat = false;
        for (const Literal& lit : clause)
            if (assignment[lit.var] != lit.negated) sat = true;
        if (!sat) return false;
    }
    return true;
}

Cnf Cnf::parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Cnf f;
    int announced_clauses = -1;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        if (first == "p") {
            std::string kind;
            if (!(ls >> kind >> f.variable_count >> announced_clauses) ||
                kind != "cnf")
                throw std::invalid_argument("dimacs: malformed problem line");
            continue;
        }
        ls.clear();
        ls.seekg(0);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw std::invalid_argument(
                        "dimacs: every clause must have exactly 3 literals");
                std::array<Literal, 3> clause;
                for (int i = 0; i < 3; ++i)
                    clause[i] = {std::abs(pending[i]) - 1, pending[i] < 0};
                f.clauses.push_back(clause);
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
    }
    if (!pending.empty())
        throw std::invalid_argument("dimacs: unterminated clause");
    if (announced_clauses >= 0 &&
        announced_clauses != static_cast<int>(f.clauses.size()))
        throw std::invalid_argument("dimacs: clause count mismatch");
    f.validate();
    return f;
}

std::string Cnf::to_dimacs() const {
    std::ostringstream out;
    out << "p cnf " << variable_count << ' ' << clauses.size() << '\n';
    for (const auto& clause : clauses) {
        for (const Literal& lit : clause)
            out << (lit.negated ? -(lit.var + 1) : lit.var + 1) << ' ';
        out << "0\n";
    }
    return out.str();
}

ReductionInstance sat_to_instance(const Cnf& f, bool cycle_variant) {
    f.validate();
    int n = f.variable_count;
    int m = static_cast<int>(f.clauses.size());

    std::vector<int> pos_count(n, 0), neg_count(n, 0);
    for (const auto& clause : f.clauses)
        for (const Literal& lit : clause)
            (lit.negated ? neg_count : pos_count)[lit.var]++;

    // Chain u_0..u_n, then per variable the y- and z-route internals, then
    // three clause gadgets per clause, then the terminal gadget(s).
    int next = n + 1;
    std::vector<std::vector<int>> yv(n), zv(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < pos_count[i]; ++j) yv[i].push_back(next++);
        for (int j = 0; j < neg_count[i]; ++j) zv[i].push_back(next++);
    }
    // F copy: alpha, beta, gamma (arcs ab, bg, ga, ag, gb).
    auto alloc_f = [&next]() {
        std::array<int, 3> f{next, next + 1, next + 2};
        next += 3;
        return f;
    };
    std::vector<std::array<std::array<int, 3>, 3>> clause_f(m);
    for (int i = 0; i < m; ++i)
        for (int h = 0; h < 3; ++h) clause_f[i][h] = alloc_f();
    std::array<int, 3> f1{-1, -1, -1};
    if (!cycle_variant) f1 = alloc_f();
    std::array<int, 3> f2 = alloc_f();

    ReductionInstance r;
    r.s = 0;
    r.t = n;
    r.provenance = cycle_variant ? "sat-cycle" : "sat";
    r.cycle_variant = cycle_variant;
    r.cnf = f;

    std::vector<Arc> arcs;
    auto add = [&arcs](int u, int v) {
        arcs.push_back({u, v});
        return static_cast<int>(arcs.size()) - 1;
    };

    r.variable_routes.resize(n);
    for (int i = 0; i < n; ++i) {
        auto route = [&](const std::vector<int>& internals) {
            ArcSet ids;
            int prev = i;
            for (int v : internals) {
                ids.push_back(add(prev, v));
                prev = v;
            }
            ids.push_back(add(prev, i + 1));
            return ids;
        };
        r.variable_routes[i].first = route(yv[i]);
        r.variable_routes[i].second = route(zv[i]);
    }

    // Identify a_{i,h} with the next unused occurrence vertex of its literal.
    std::vector<int> pos_used(n, 0), neg_used(n, 0);
    r.literal_vertices.resize(m);
    for (int i = 0; i < m; ++i)
        for (int h = 0; h < 3; ++h) {
            const Literal& lit = f.clauses[i][h];
            r.literal_vertices[i][h] = lit.negated
                                           ? zv[lit.var][neg_used[lit.var]++]
                                           : yv[lit.var][pos_used[lit.var]++];
        }

    auto add_f_copy = [&](const std::array<int, 3>& fc) {
        auto [a, b, g] = fc;
        add(a, b);
        add(b, g);
        add(g, a);
        add(a, g);
        add(g, b);
    };
    for (int i = 0; i < m; ++i) {
        for (int h = 0; h < 3; ++h) add_f_copy(clause_f[i][h]);
        for (int h = 0; h < 3; ++h) {
            add(r.literal_vertices[i][h], clause_f[i][h][0]);          // a -> alpha
            add(clause_f[i][h][1], r.literal_vertices[i][(h + 1) % 3]); // beta -> next a
        }
    }
    if (!cycle_variant) {
        add_f_copy(f1);
        add_f_copy(f2);
        add(r.t, f1[0]);
        add(r.t, f2[0]);
        add(f1[1], r.s);
        add(f2[1], r.s);
    } else {
        add_f_copy(f2);
        add(r.t, f2[0]);
        add(f2[1], r.s);
        add(r.t, r.s);
    }

    r.digraph = Digraph(next, std::move(arcs));
    if (!is_k_regular(r.digraph, 2))
        throw std::logic_error("sat_to_instance: output is not 2-regular");
    if (!connectivity(r.digraph).second)
        throw std::logic_error("sat_to_instance: output is not strongly connected");
    return r;
}

ArcSet assignment_to_path(const ReductionInstance& r,
                          const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != r.cnf.variable_count)
        throw std::invalid_argument("assignment size mismatch");
    ArcSet path;
    for (int i = 0; i < r.cnf.variable_count; ++i) {
        const ArcSet& route = assignment[i] ? r.variable_routes[i].second
                                            : r.variable_routes[i].first;
        path.insert(path.end(), route.begin(), route.end());
    }
    std::sort(path.begin(), path.end());
    return path;
}

std::vector<bool> path_to_assignment(const ReductionInstance& r, const ArcSet& p) {
    std::set<int> arcs(p.begin(), p.end());
    std::vector<bool> assignment(r.cnf.variable_count);
    size_t consumed = 0;
    for (int i = 0; i < r.cnf.variable_count; ++i) {
        auto contains_all = [&](const ArcSet& route) {
            for (int id : route)
                if (!arcs.count(id)) return false;
            return true;
        };
        bool via_y = contains_all(r.variable_routes[i].first);
        bool via_z = contains_all(r.variable_routes[i].second);
        if (via_y == via_z)
            throw std::invalid_argument(
                "path_to_assignment: not a chain (s,t)-path");
        assignment[i] = via_z;  // z-route taken means the variable is true
        consumed += (via_y ? r.variable_routes[i].first
                           : r.variable_routes[i].second)
                        .size();
    }
    if (consumed != arcs.size())
        throw std::invalid_argument(
            "path_to_assignment: path leaves the variable chain");
    return assignment;
}

}  // namespace arcpack

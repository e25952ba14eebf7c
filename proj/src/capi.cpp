#include "arcpack.h"

#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "certificates.hpp"
#include "gadget.hpp"
#include "mixed.hpp"
#include "oracle.hpp"
#include "reductions.hpp"

using namespace arcpack;

struct arcpack_digraph {
    Digraph d;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char** slot, const std::string& s) {
    if (slot) *slot = dup_string(s);
}

arcpack_status fail(arcpack_status code, const char* what) {
    g_last_error = what;
    return code;
}

/// Runs `body`, translating exceptions into status codes.
template <typename F>
arcpack_status guarded(F&& body) {
    try {
        return body();
    } catch (const budget_error& e) {
        return fail(ARCPACK_ERR_BUDGET, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ARCPACK_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(ARCPACK_ERR_ARGUMENT, e.what());
    }
}

RootVector parse_roots(const std::string& spec, int vertex_count) {
    RootVector r;
    r.multiplicity.assign(vertex_count, 0);
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("roots: expected v:count entries");
        int v = std::stoi(item.substr(0, colon));
        int count = std::stoi(item.substr(colon + 1));
        if (v < 0 || v >= vertex_count || count < 0)
            throw std::invalid_argument("roots: entry out of range");
        r.multiplicity[v] += count;
        r.k += count;
    }
    r.validate(vertex_count);
    return r;
}

OracleBudget pick_budget(const arcpack_budget* b, OracleKind kind) {
    if (!b) return default_budget(kind);
    if (b->max_vertices <= 0 || b->max_arcs <= 0 || b->time_limit_seconds <= 0)
        throw std::invalid_argument("budget: all fields must be positive");
    return {b->max_vertices, b->max_arcs, b->time_limit_seconds};
}

json yes_no(bool yes) {
    return json{{"schema", "1"}, {"kind", "oracle"}, {"answer", yes}};
}

}  // namespace

extern "C" {

const char* arcpack_last_error(void) { return g_last_error.c_str(); }

void arcpack_string_free(char* s) { delete[] s; }

arcpack_status arcpack_digraph_parse(const char* text, arcpack_digraph** out) {
    return guarded([&] {
        if (!text || !out)
            throw std::invalid_argument("digraph_parse: null argument");
        *out = new arcpack_digraph{Digraph::parse(text)};
        return ARCPACK_OK;
    });
}

arcpack_status arcpack_digraph_build(int vertex_count, int arc_count,
                                     const int* tails, const int* heads,
                                     arcpack_digraph** out) {
    return guarded([&] {
        if (!out || (arc_count > 0 && (!tails || !heads)))
            throw std::invalid_argument("digraph_build: null argument");
        std::vector<Arc> arcs(arc_count);
        for (int i = 0; i < arc_count; ++i) arcs[i] = {tails[i], heads[i]};
        *out = new arcpack_digraph{Digraph(vertex_count, std::move(arcs))};
        return ARCPACK_OK;
    });
}

void arcpack_digraph_free(arcpack_digraph* d) { delete d; }

arcpack_status arcpack_digraph_format(const arcpack_digraph* d, char** out) {
    return guarded([&] {
        if (!d || !out) throw std::invalid_argument("format: null argument");
        set_out(out, d->d.format());
        return ARCPACK_OK;
    });
}

arcpack_status arcpack_digraph_to_dot(const arcpack_digraph* d, char** out) {
    return guarded([&] {
        if (!d || !out) throw std::invalid_argument("to_dot: null argument");
        set_out(out, d->d.to_dot());
        return ARCPACK_OK;
    });
}

int arcpack_digraph_vertex_count(const arcpack_digraph* d) {
    return d ? d->d.vertex_count() : -1;
}

int arcpack_digraph_arc_count(const arcpack_digraph* d) {
    return d ? d->d.arc_count() : -1;
}

int arcpack_digraph_is_k_regular(const arcpack_digraph* d, int k) {
    return (d && k > 0 && is_k_regular(d->d, k)) ? 1 : 0;
}

arcpack_status arcpack_pack_trees(const arcpack_digraph* d, int k, char** out) {
    return guarded([&] {
        if (!d || !out) throw std::invalid_argument("pack_trees: null argument");
        if (k <= 0) throw std::invalid_argument("pack_trees: k must be positive");
        TreePackResult result = pack_spanning_trees(d->d, k);
        if (auto* trees = std::get_if<TreePacking>(&result)) {
            set_out(out, trees_to_json(*trees).dump());
            return ARCPACK_OK;
        }
        set_out(out, tutte_to_json(std::get<PartitionCertificate>(result)).dump());
        return fail(ARCPACK_INFEASIBLE, "no k edge-disjoint spanning trees");
    });
}

arcpack_status arcpack_pack_branchings(const arcpack_digraph* d,
                                       const char* roots, char** out) {
    return guarded([&] {
        if (!d || !roots || !out)
            throw std::invalid_argument("pack_branchings: null argument");
        RootVector r = parse_roots(roots, d->d.vertex_count());
        try {
            BranchingSet b = pack_out_branchings(d->d, r);
            set_out(out, branchings_to_json(b).dump());
            return ARCPACK_OK;
        } catch (const infeasible_root_vector& e) {
            set_out(out,
                    rootvector_violation_to_json(r, e.violating_x).dump());
            return fail(ARCPACK_INFEASIBLE, e.what());
        }
    });
}

arcpack_status arcpack_pack_mixed(const arcpack_digraph* d, int l, char** out) {
    return guarded([&] {
        if (!d || !out) throw std::invalid_argument("pack_mixed: null argument");
        MixedResult result = solve_mixed(d->d, l);
        if (auto* sol = std::get_if<MixedSolution>(&result)) {
            set_out(out, mixed_to_json(*sol, std::nullopt).dump());
            return ARCPACK_OK;
        }
        set_out(out, tutte_to_json(std::get<PartitionCertificate>(result)).dump());
        return fail(ARCPACK_INFEASIBLE, "no mixed packing");
    });
}

arcpack_status arcpack_decide_equivalence(const arcpack_digraph* d, char** out) {
    return guarded([&] {
        if (!d || !out)
            throw std::invalid_argument("decide_equivalence: null argument");
        EquivalenceDecision decision = decide_equivalence(d->d);
        if (decision.feasible) {
            json j = branchings_to_json(*decision.branchings);
            if (decision.trace)
                j["pipeline_trace"] = {
                    {"missing_arcs", decision.trace->missing_arcs},
                    {"derived_roots", decision.trace->derived_roots.multiplicity}};
            set_out(out, j.dump());
            return ARCPACK_OK;
        }
        set_out(out, tutte_to_json(*decision.certificate).dump());
        return fail(ARCPACK_INFEASIBLE, "no packing; Tutte certificate attached");
    });
}

arcpack_status arcpack_reduce_sat(const char* dimacs, int cycle_variant,
                                  char** digraph_text, char** sidecar_json) {
    return guarded([&] {
        if (!dimacs || !digraph_text)
            throw std::invalid_argument("reduce_sat: null argument");
        Cnf f = Cnf::parse_dimacs(dimacs);
        ReductionInstance r = sat_to_instance(f, cycle_variant != 0);
        set_out(digraph_text, r.digraph.format());
        if (sidecar_json) set_out(sidecar_json, reduction_to_json(r).dump());
        return ARCPACK_OK;
    });
}

static arcpack_status reduce_ham(const arcpack_digraph* d, int vertex,
                                 bool inout, char** digraph_text,
                                 char** sidecar_json) {
    return guarded([&] {
        if (!d || !digraph_text)
            throw std::invalid_argument("reduce_ham: null argument");
        HamReduction r = inout ? ham_cycle_to_inout(d->d, vertex)
                               : ham_cycle_to_ham_path(d->d, vertex);
        set_out(digraph_text, r.digraph.format());
        if (sidecar_json) set_out(sidecar_json, ham_reduction_to_json(r).dump());
        return ARCPACK_OK;
    });
}

arcpack_status arcpack_reduce_ham_path(const arcpack_digraph* d, int vertex,
                                       char** digraph_text,
                                       char** sidecar_json) {
    return reduce_ham(d, vertex, false, digraph_text, sidecar_json);
}

arcpack_status arcpack_reduce_ham_inout(const arcpack_digraph* d, int vertex,
                                        char** digraph_text,
                                        char** sidecar_json) {
    return reduce_ham(d, vertex, true, digraph_text, sidecar_json);
}

arcpack_status arcpack_reduce_k_expand(const arcpack_digraph* d, int k,
                                       char** digraph_text) {
    return guarded([&] {
        if (!d || !digraph_text)
            throw std::invalid_argument("k_expand: null argument");
        set_out(digraph_text, k_expand(d->d, k).format());
        return ARCPACK_OK;
    });
}

arcpack_status arcpack_gadget_text(char** digraph_text) {
    return guarded([&] {
        if (!digraph_text) throw std::invalid_argument("gadget: null argument");
        set_out(digraph_text, cycle_breaker().digraph.format());
        return ARCPACK_OK;
    });
}

arcpack_status arcpack_gadget_verify(char** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("gadget_verify: null argument");
        GadgetReport r = verify_cycle_breaker(cycle_breaker());
        json j{{"schema", "1"},
               {"kind", "gadget-report"},
               {"g1_degrees", r.g1_degrees},
               {"g2_insertion", r.g2_insertion},
               {"g3_no_clean_path", r.g3_no_clean_path},
               {"g4_fragments", r.g4_fragments},
               {"g5_path_exists", r.g5_path_exists},
               {"all", r.all()}};
        set_out(out, j.dump());
        return r.all() ? ARCPACK_OK
                       : fail(ARCPACK_INFEASIBLE, "gadget property violated");
    });
}

arcpack_status arcpack_oracle_ham_pair(const arcpack_digraph* d, int cycles,
                                       int start, int end,
                                       const arcpack_budget* budget,
                                       char** out) {
    return guarded([&] {
        if (!d || !out) throw std::invalid_argument("ham_pair: null argument");
        HamPairResult r = oracle_ham_pairs(
            d->d, cycles != 0,
            start >= 0 ? std::optional<int>(start) : std::nullopt,
            end >= 0 ? std::optional<int>(end) : std::nullopt,
            pick_budget(budget, OracleKind::HamPair));
        json j = yes_no(r.found);
        if (r.found) {
            j["first"] = r.first;
            j["second"] = r.second;
        }
        set_out(out, j.dump());
        return r.found ? ARCPACK_OK
                       : fail(ARCPACK_INFEASIBLE, "no arc-disjoint pair");
    });
}

arcpack_status arcpack_oracle_inout_pair(const arcpack_digraph* d, int u, int v,
                                         const arcpack_budget* budget,
                                         char** out) {
    return guarded([&] {
        if (!d || !out) throw std::invalid_argument("inout_pair: null argument");
        InOutPairResult r = oracle_inout_pair(
            d->d, u >= 0 ? std::optional<int>(u) : std::nullopt,
            v >= 0 ? std::optional<int>(v) : std::nullopt,
            pick_budget(budget, OracleKind::InOutPair));
        json j = yes_no(r.found);
        if (r.found) {
            j["out_branching"] = r.out_branching;
            j["in_branching"] = r.in_branching;
            j["u"] = r.u;
            j["v"] = r.v;
        }
        set_out(out, j.dump());
        return r.found ? ARCPACK_OK
                       : fail(ARCPACK_INFEASIBLE, "no arc-disjoint in/out pair");
    });
}

arcpack_status arcpack_oracle_remainder_path(const arcpack_digraph* d, int s,
                                             int t, int requirement,
                                             const arcpack_budget* budget,
                                             char** out) {
    return guarded([&] {
        if (!d || !out)
            throw std::invalid_argument("remainder_path: null argument");
        RemainderRequirement req;
        switch (requirement) {
            case 1: req = RemainderRequirement::Connected; break;
            case 2: req = RemainderRequirement::Strong; break;
            case 3: req = RemainderRequirement::OutBranchingFromS; break;
            default:
                throw std::invalid_argument(
                    "remainder_path: requirement must be 1, 2, or 3");
        }
        PathWitness w = oracle_remainder_path(
            d->d, s, t, req, pick_budget(budget, OracleKind::RemainderPath));
        json j = yes_no(w.found);
        if (w.found) j["path"] = w.path;
        set_out(out, j.dump());
        return w.found ? ARCPACK_OK
                       : fail(ARCPACK_INFEASIBLE, "no qualifying (s,t)-path");
    });
}

arcpack_status arcpack_oracle_tree_packing(const arcpack_digraph* d, int k,
                                           const arcpack_budget* budget) {
    return guarded([&] {
        if (!d) throw std::invalid_argument("tree_packing: null argument");
        bool yes = oracle_tree_packing(
            d->d, k, pick_budget(budget, OracleKind::TreePacking));
        return yes ? ARCPACK_OK
                   : fail(ARCPACK_INFEASIBLE, "Tutte condition violated");
    });
}

arcpack_status arcpack_oracle_root_vector(const arcpack_digraph* d,
                                          const char* roots,
                                          const arcpack_budget* budget,
                                          char** out) {
    return guarded([&] {
        if (!d || !roots || !out)
            throw std::invalid_argument("root_vector: null argument");
        RootVector r = parse_roots(roots, d->d.vertex_count());
        RootVectorOracleResult res = oracle_root_vector(
            d->d, r, pick_budget(budget, OracleKind::RootVector));
        if (res.ok) {
            set_out(out, yes_no(true).dump());
            return ARCPACK_OK;
        }
        set_out(out, rootvector_violation_to_json(r, res.violating_x).dump());
        return fail(ARCPACK_INFEASIBLE, "root-vector condition violated");
    });
}

arcpack_status arcpack_oracle_sat(const char* dimacs,
                                  const arcpack_budget* budget, char** out) {
    return guarded([&] {
        if (!dimacs || !out)
            throw std::invalid_argument("oracle_sat: null argument");
        Cnf f = Cnf::parse_dimacs(dimacs);
        SatResult r = oracle_sat(f, pick_budget(budget, OracleKind::Sat));
        json j = yes_no(r.satisfiable);
        if (r.satisfiable) j["assignment"] = r.assignment;
        set_out(out, j.dump());
        return r.satisfiable ? ARCPACK_OK
                             : fail(ARCPACK_INFEASIBLE, "unsatisfiable");
    });
}

arcpack_status arcpack_search_counterexample(const arcpack_budget* budget,
                                             char** digraph_text, char** out) {
    return guarded([&] {
        if (!digraph_text || !out)
            throw std::invalid_argument("counterexample: null argument");
        CounterexampleResult r = search_eulerian_counterexample(
            pick_budget(budget, OracleKind::Counterexample));
        if (!r.found) {
            set_out(out, yes_no(false).dump());
            return fail(ARCPACK_INFEASIBLE, "search exhausted without a find");
        }
        set_out(digraph_text, r.digraph->format());
        json j = yes_no(true);
        j["branching"] = r.branching;
        j["root"] = r.root;
        set_out(out, j.dump());
        return ARCPACK_OK;
    });
}

arcpack_status arcpack_verify(const arcpack_digraph* d, const char* text) {
    return guarded([&] {
        if (!d || !text) throw std::invalid_argument("verify: null argument");
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded())
            throw std::invalid_argument("verify: certificate is not valid JSON");
        return verify_certificate(d->d, j)
                   ? ARCPACK_OK
                   : fail(ARCPACK_INFEASIBLE, "certificate does not verify");
    });
}

}  // extern "C"

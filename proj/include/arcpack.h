/* arcpack — packings of arc-disjoint branchings and spanning trees in
 * directed multigraphs, hardness-reduction constructions, and exhaustive
 * oracles for small instances.
 *
 * Conventions:
 *  - All functions return an arcpack_status; results are written through
 *    out-parameters.
 *  - Structured results are JSON strings (versioned with "schema":"1");
 *    free them with arcpack_string_free.
 *  - ARCPACK_INFEASIBLE is a successful "no" answer; for packing problems
 *    the JSON output then holds the infeasibility certificate.
 *  - arcpack_last_error() returns a thread-local message for the most
 *    recent non-OK status on the calling thread.
 */
#ifndef ARCPACK_H
#define ARCPACK_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arcpack_status {
    ARCPACK_OK = 0,
    ARCPACK_INFEASIBLE = 1,   /* valid "no" answer, certificate attached */
    ARCPACK_ERR_ARGUMENT = 2, /* parse/precondition failure */
    ARCPACK_ERR_BUDGET = 3    /* oracle refused: input over budget/time */
} arcpack_status;

typedef struct arcpack_digraph arcpack_digraph;

typedef struct arcpack_budget {
    int max_vertices;
    int max_arcs;
    double time_limit_seconds;
} arcpack_budget;

/* ---- diagnostics ------------------------------------------------------ */

/* Message for the last non-OK status on this thread; never NULL. */
const char* arcpack_last_error(void);

/* Free any string returned by this library. NULL is a no-op. */
void arcpack_string_free(char* s);

/* ---- digraphs --------------------------------------------------------- */

/* Text format: first non-comment line "n m", then m lines "tail head";
 * '#' starts a comment line. Arc ids are 0..m-1 in input order. */
arcpack_status arcpack_digraph_parse(const char* text, arcpack_digraph** out);
arcpack_status arcpack_digraph_build(int vertex_count, int arc_count,
                                     const int* tails, const int* heads,
                                     arcpack_digraph** out);
void arcpack_digraph_free(arcpack_digraph* d);

arcpack_status arcpack_digraph_format(const arcpack_digraph* d, char** out);
arcpack_status arcpack_digraph_to_dot(const arcpack_digraph* d, char** out);
int arcpack_digraph_vertex_count(const arcpack_digraph* d);
int arcpack_digraph_arc_count(const arcpack_digraph* d);
/* 1 / 0; k must be positive. */
int arcpack_digraph_is_k_regular(const arcpack_digraph* d, int k);

/* ---- packing ----------------------------------------------------------
 * Each emits JSON: on OK a witness ("trees"/"branchings"/"mixed"), on
 * INFEASIBLE a certificate ("tutte"/"rootvector-violation"). */

/* k edge-disjoint spanning trees of the underlying graph. */
arcpack_status arcpack_pack_trees(const arcpack_digraph* d, int k, char** json);

/* k arc-disjoint out-branchings with prescribed root multiplicities.
 * roots: string "v:count,v:count,..."; k is the multiplicity total. */
arcpack_status arcpack_pack_branchings(const arcpack_digraph* d,
                                       const char* roots, char** json);

/* l out-branchings (free roots) + (k-l) spanning trees, pairwise
 * arc-disjoint; d must be k-regular with 0 < l <= k. */
arcpack_status arcpack_pack_mixed(const arcpack_digraph* d, int l, char** json);

/* For k-regular d: k arc-disjoint out-branchings with free roots iff
 * k edge-disjoint spanning trees; constructive either way. */
arcpack_status arcpack_decide_equivalence(const arcpack_digraph* d, char** json);

/* ---- reductions --------------------------------------------------------
 * Each writes the constructed digraph (text format) and a JSON sidecar with
 * decode/port maps. */

/* 3-SAT (DIMACS, exactly 3 literals per clause) to a 2-regular digraph whose
 * (s,t)-path-with-connected-remainder answer equals satisfiability.
 * cycle_variant != 0 builds the Hamiltonian-cycle flavored instance. */
arcpack_status arcpack_reduce_sat(const char* dimacs, int cycle_variant,
                                  char** digraph_text, char** sidecar_json);

/* Hamiltonian-cycle-pair to Hamiltonian-path-pair (one gadget copy) or to
 * in/out-branching-pair (two copies); host must be 2-regular 2-arc-strong,
 * `vertex` is the host vertex that gets split. */
arcpack_status arcpack_reduce_ham_path(const arcpack_digraph* d, int vertex,
                                       char** digraph_text, char** sidecar_json);
arcpack_status arcpack_reduce_ham_inout(const arcpack_digraph* d, int vertex,
                                        char** digraph_text,
                                        char** sidecar_json);

/* 2-regular 2-arc-strong host to a k-regular digraph (k >= 3) with the same
 * in/out-branching-pair answer. */
arcpack_status arcpack_reduce_k_expand(const arcpack_digraph* d, int k,
                                       char** digraph_text);

/* ---- gadget ------------------------------------------------------------ */

/* The compiled-in Cycle Breaker gadget as digraph text. */
arcpack_status arcpack_gadget_text(char** digraph_text);
/* JSON report of the five gadget properties plus "all". */
arcpack_status arcpack_gadget_verify(char** json);

/* ---- oracles -----------------------------------------------------------
 * Exhaustive deciders. budget == NULL uses the per-oracle default. Status:
 * OK = yes (witness JSON), INFEASIBLE = no, ERR_BUDGET = refused. */

/* Two arc-disjoint Hamiltonian cycles (cycles != 0) or paths; for paths,
 * start/end constrain endpoints when >= 0. */
arcpack_status arcpack_oracle_ham_pair(const arcpack_digraph* d, int cycles,
                                       int start, int end,
                                       const arcpack_budget* budget,
                                       char** json);

/* Arc-disjoint out-branching/in-branching pair; roots free when u/v < 0. */
arcpack_status arcpack_oracle_inout_pair(const arcpack_digraph* d, int u, int v,
                                         const arcpack_budget* budget,
                                         char** json);

/* (s,t)-path whose removal leaves the remainder: 1 = connected,
 * 2 = strongly connected, 3 = containing an out-branching rooted at s. */
arcpack_status arcpack_oracle_remainder_path(const arcpack_digraph* d, int s,
                                             int t, int requirement,
                                             const arcpack_budget* budget,
                                             char** json);

/* Tutte condition over all vertex partitions. */
arcpack_status arcpack_oracle_tree_packing(const arcpack_digraph* d, int k,
                                           const arcpack_budget* budget);

/* Root-vector condition by subset scan; violating X in JSON on INFEASIBLE. */
arcpack_status arcpack_oracle_root_vector(const arcpack_digraph* d,
                                          const char* roots,
                                          const arcpack_budget* budget,
                                          char** json);

/* Satisfiability scan; witness assignment JSON on OK. */
arcpack_status arcpack_oracle_sat(const char* dimacs,
                                  const arcpack_budget* budget, char** json);

/* Smallest-first search for an Eulerian digraph with an out-branching whose
 * removal leaves it connected but no two arc-disjoint out-branchings.
 * OK = found (digraph text + witness JSON), INFEASIBLE = exhausted budget. */
arcpack_status arcpack_search_counterexample(const arcpack_budget* budget,
                                             char** digraph_text, char** json);

/* ---- verification ------------------------------------------------------ */

/* Re-check any certificate JSON emitted by this library against d.
 * OK = valid, INFEASIBLE = well-formed but violated, ERR_ARGUMENT = malformed. */
arcpack_status arcpack_verify(const arcpack_digraph* d, const char* json);

#ifdef __cplusplus
}
#endif

#endif /* ARCPACK_H */

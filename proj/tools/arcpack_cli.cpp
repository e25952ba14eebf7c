// arcpack command-line tool. Exit codes: 0 = yes/success, 1 = no with a
// certificate on stdout, 2 = usage or input error, 3 = oracle budget refusal.
// All structured output is JSON on stdout; diagnostics go to stderr.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "arcpack.h"

namespace {

struct StringOut {
    char* value = nullptr;
    ~StringOut() { arcpack_string_free(value); }
    char** slot() { return &value; }
    std::string str() const { return value ? value : ""; }
};

struct DigraphHandle {
    arcpack_digraph* d = nullptr;
    ~DigraphHandle() { arcpack_digraph_free(d); }
};

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    std::exit(2);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) die("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) die("cannot write " + path);
    out << content;
}

DigraphHandle load_digraph(const std::string& path) {
    DigraphHandle h;
    if (arcpack_digraph_parse(read_input(path).c_str(), &h.d) != ARCPACK_OK)
        die(arcpack_last_error());
    return h;
}

/// Prints the payload and converts the status into the process exit code.
int finish(arcpack_status status, const StringOut& payload) {
    if (payload.value) std::cout << payload.str() << '\n';
    if (status == ARCPACK_ERR_ARGUMENT || status == ARCPACK_ERR_BUDGET)
        std::cerr << "error: " << arcpack_last_error() << '\n';
    return static_cast<int>(status);
}

struct BudgetFlags {
    int max_vertices = 0;
    int max_arcs = 0;
    double time_limit = 0;
    arcpack_budget storage{};

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-vertices", max_vertices,
                        "Override the oracle vertex budget");
        cmd->add_option("--max-arcs", max_arcs,
                        "Override the oracle arc budget");
        cmd->add_option("--time-limit", time_limit,
                        "Override the oracle time limit (seconds)");
    }
    /// nullptr means "use the library default for this oracle".
    const arcpack_budget* get() {
        if (max_vertices <= 0 && max_arcs <= 0 && time_limit <= 0) return nullptr;
        storage = {max_vertices > 0 ? max_vertices : 1 << 20,
                   max_arcs > 0 ? max_arcs : 1 << 20,
                   time_limit > 0 ? time_limit : 3600.0};
        return &storage;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Packings of arc-disjoint branchings and spanning trees"};
    app.require_subcommand(1);
    unsigned long seed = 20240901;
    app.add_option("--seed", seed,
                   "Seed for any randomized sampling (fixed default)");

    // ---- pack ----------------------------------------------------------
    auto* pack = app.add_subcommand("pack", "Construct packings or certificates");
    pack->require_subcommand(1);
    int pack_k = 0, pack_l = 1;
    std::string roots_spec, pack_input;

    auto* pack_trees = pack->add_subcommand("trees", "k edge-disjoint spanning trees");
    pack_trees->add_option("-k", pack_k, "Number of trees")->required();
    pack_trees->add_option("input", pack_input, "Digraph file (- for stdin)")->required();

    auto* pack_br = pack->add_subcommand(
        "branchings", "Arc-disjoint out-branchings with prescribed roots");
    pack_br->add_option("--roots", roots_spec, "Root multiplicities v:count[,v:count...]")
        ->required();
    pack_br->add_option("-k", pack_k, "Expected total (checked against --roots)");
    pack_br->add_option("input", pack_input, "Digraph file (- for stdin)")->required();

    auto* pack_mixed = pack->add_subcommand(
        "mixed", "l out-branchings plus k-l spanning trees (k-regular input)");
    pack_mixed->add_option("-l", pack_l, "Number of out-branchings")->required();
    pack_mixed->add_option("input", pack_input, "Digraph file (- for stdin)")->required();

    auto* pack_eq = pack->add_subcommand(
        "equivalence", "k out-branchings (free roots) on a k-regular digraph");
    pack_eq->add_option("input", pack_input, "Digraph file (- for stdin)")->required();

    // ---- reduce --------------------------------------------------------
    auto* reduce = app.add_subcommand("reduce", "Build hardness-reduction instances");
    reduce->require_subcommand(1);
    std::string reduce_input, reduce_out, reduce_sidecar;
    int reduce_vertex = 0, reduce_k = 3;

    auto add_reduce_io = [&](CLI::App* cmd, bool sidecar) {
        cmd->add_option("input", reduce_input, "Input file (- for stdin)")->required();
        cmd->add_option("-o,--output", reduce_out, "Constructed digraph file");
        if (sidecar)
            cmd->add_option("--sidecar", reduce_sidecar, "Decode-map JSON file");
    };
    auto* red_sat = reduce->add_subcommand("sat", "3-SAT (DIMACS) to a 2-regular digraph");
    add_reduce_io(red_sat, true);
    auto* red_satc = reduce->add_subcommand("sat-cycle", "Hamiltonian-cycle flavored 3-SAT reduction");
    add_reduce_io(red_satc, true);
    auto* red_hp = reduce->add_subcommand("ham-path", "Cycle pair to path pair (one gadget copy)");
    red_hp->add_option("--vertex", reduce_vertex, "Host vertex to split")->required();
    add_reduce_io(red_hp, true);
    auto* red_hio = reduce->add_subcommand("ham-inout", "Cycle pair to in/out pair (two gadget copies)");
    red_hio->add_option("--vertex", reduce_vertex, "Host vertex to split")->required();
    add_reduce_io(red_hio, true);
    auto* red_kx = reduce->add_subcommand("k-expand", "2-regular host to a k-regular digraph");
    red_kx->add_option("-k", reduce_k, "Target regularity (>= 3)")->required();
    add_reduce_io(red_kx, false);

    // ---- oracle ---------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "Exhaustive ground-truth deciders");
    oracle->require_subcommand(1);
    std::string oracle_input, oracle_mode = "cycles", oracle_out;
    int o_start = -1, o_end = -1, o_u = -1, o_v = -1, o_s = 0, o_t = 0, o_k = 2;
    BudgetFlags budget;

    auto* o_ham = oracle->add_subcommand("ham-pair", "Two arc-disjoint Hamiltonian cycles/paths");
    o_ham->add_option("--mode", oracle_mode, "cycles or paths")
        ->check(CLI::IsMember({"cycles", "paths"}));
    o_ham->add_option("--start", o_start, "Path start vertex");
    o_ham->add_option("--end", o_end, "Path end vertex");
    o_ham->add_option("input", oracle_input)->required();
    budget.attach(o_ham);

    auto* o_io = oracle->add_subcommand("inout-pair", "Arc-disjoint out/in-branching pair");
    o_io->add_option("-u", o_u, "Out-branching root (free when omitted)");
    o_io->add_option("-v", o_v, "In-branching root (free when omitted)");
    o_io->add_option("input", oracle_input)->required();
    budget.attach(o_io);

    CLI::App* o_path[3];
    const char* path_help[3] = {"(s,t)-path with connected remainder",
                                "(s,t)-path with strongly connected remainder",
                                "(s,t)-path, remainder has an out-branching at s"};
    for (int i = 0; i < 3; ++i) {
        o_path[i] = oracle->add_subcommand("p" + std::to_string(i + 1), path_help[i]);
        o_path[i]->add_option("-s", o_s, "Path start")->required();
        o_path[i]->add_option("-t", o_t, "Path end")->required();
        o_path[i]->add_option("input", oracle_input)->required();
        budget.attach(o_path[i]);
    }

    auto* o_trees = oracle->add_subcommand("trees", "Tutte condition over all partitions");
    o_trees->add_option("-k", o_k, "Number of trees")->required();
    o_trees->add_option("input", oracle_input)->required();
    budget.attach(o_trees);

    auto* o_rv = oracle->add_subcommand("root-vector", "Root-vector condition by subset scan");
    o_rv->add_option("--roots", roots_spec, "Root multiplicities v:count[,...]")->required();
    o_rv->add_option("input", oracle_input)->required();
    budget.attach(o_rv);

    auto* o_sat = oracle->add_subcommand("sat", "Exhaustive satisfiability scan (DIMACS)");
    o_sat->add_option("input", oracle_input)->required();
    budget.attach(o_sat);

    auto* o_cx = oracle->add_subcommand(
        "counterexample", "Search for the Eulerian non-extension witness");
    o_cx->add_option("-o,--output", oracle_out, "Where to write the found digraph");
    budget.attach(o_cx);

    // ---- verify / export-dot / gadget ------------------------------------
    std::string verify_cert, verify_dg, dot_input;
    auto* verify = app.add_subcommand("verify", "Re-check a certificate against a digraph");
    verify->add_option("certificate", verify_cert, "Certificate JSON file")->required();
    verify->add_option("digraph", verify_dg, "Digraph file")->required();

    auto* export_dot = app.add_subcommand("export-dot", "Print a digraph in DOT format");
    export_dot->add_option("input", dot_input, "Digraph file (- for stdin)")->required();

    auto* gadget = app.add_subcommand("gadget", "Print the Cycle Breaker gadget");
    bool gadget_check = false;
    gadget->add_flag("--verify", gadget_check, "Print the property report instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are exit 2
    }

    // ---- dispatch ---------------------------------------------------------
    if (pack->parsed()) {
        DigraphHandle d = load_digraph(pack_input);
        StringOut out;
        arcpack_status status;
        if (pack_trees->parsed()) {
            status = arcpack_pack_trees(d.d, pack_k, out.slot());
        } else if (pack_br->parsed()) {
            if (pack_br->count("-k") > 0) {
                int total = 0;
                std::istringstream in(roots_spec);
                std::string item;
                while (std::getline(in, item, ',')) {
                    auto colon = item.find(':');
                    if (colon != std::string::npos)
                        total += std::atoi(item.c_str() + colon + 1);
                }
                if (total != pack_k)
                    die("-k " + std::to_string(pack_k) +
                        " conflicts with --roots total " + std::to_string(total));
            }
            status = arcpack_pack_branchings(d.d, roots_spec.c_str(), out.slot());
        } else if (pack_mixed->parsed()) {
            status = arcpack_pack_mixed(d.d, pack_l, out.slot());
        } else {
            status = arcpack_decide_equivalence(d.d, out.slot());
        }
        return finish(status, out);
    }

    if (reduce->parsed()) {
        StringOut text, sidecar;
        arcpack_status status;
        if (red_sat->parsed() || red_satc->parsed()) {
            status = arcpack_reduce_sat(read_input(reduce_input).c_str(),
                                        red_satc->parsed() ? 1 : 0, text.slot(),
                                        sidecar.slot());
        } else if (red_kx->parsed()) {
            DigraphHandle d = load_digraph(reduce_input);
            status = arcpack_reduce_k_expand(d.d, reduce_k, text.slot());
        } else {
            DigraphHandle d = load_digraph(reduce_input);
            status = red_hio->parsed()
                         ? arcpack_reduce_ham_inout(d.d, reduce_vertex,
                                                    text.slot(), sidecar.slot())
                         : arcpack_reduce_ham_path(d.d, reduce_vertex,
                                                   text.slot(), sidecar.slot());
        }
        if (status != ARCPACK_OK) die(arcpack_last_error());
        if (!reduce_out.empty()) write_output(reduce_out, text.str());
        else std::cout << text.str();
        if (!reduce_sidecar.empty() && sidecar.value)
            write_output(reduce_sidecar, sidecar.str());
        // Instance statistics on stderr so stdout stays machine-readable.
        DigraphHandle check;
        if (arcpack_digraph_parse(text.value, &check.d) == ARCPACK_OK)
            std::cerr << "constructed: " << arcpack_digraph_vertex_count(check.d)
                      << " vertices, " << arcpack_digraph_arc_count(check.d)
                      << " arcs, 2-regular="
                      << arcpack_digraph_is_k_regular(check.d, 2) << '\n';
        return 0;
    }

    if (oracle->parsed()) {
        StringOut out;
        arcpack_status status;
        if (o_sat->parsed()) {
            status = arcpack_oracle_sat(read_input(oracle_input).c_str(),
                                        budget.get(), out.slot());
        } else if (o_cx->parsed()) {
            StringOut text;
            status = arcpack_search_counterexample(budget.get(), text.slot(),
                                                   out.slot());
            if (status == ARCPACK_OK && !oracle_out.empty())
                write_output(oracle_out, text.str());
            else if (status == ARCPACK_OK)
                std::cerr << text.str();
        } else {
            DigraphHandle d = load_digraph(oracle_input);
            if (o_ham->parsed()) {
                status = arcpack_oracle_ham_pair(d.d, oracle_mode == "cycles",
                                                 o_start, o_end, budget.get(),
                                                 out.slot());
            } else if (o_io->parsed()) {
                status = arcpack_oracle_inout_pair(d.d, o_u, o_v, budget.get(),
                                                   out.slot());
            } else if (o_trees->parsed()) {
                status = arcpack_oracle_tree_packing(d.d, o_k, budget.get());
            } else if (o_rv->parsed()) {
                status = arcpack_oracle_root_vector(d.d, roots_spec.c_str(),
                                                    budget.get(), out.slot());
            } else {
                int req = o_path[0]->parsed() ? 1 : (o_path[1]->parsed() ? 2 : 3);
                status = arcpack_oracle_remainder_path(d.d, o_s, o_t, req,
                                                       budget.get(), out.slot());
            }
        }
        return finish(status, out);
    }

    if (verify->parsed()) {
        DigraphHandle d = load_digraph(verify_dg);
        arcpack_status status =
            arcpack_verify(d.d, read_input(verify_cert).c_str());
        if (status == ARCPACK_OK) {
            std::cout << R"({"schema":"1","kind":"verify","valid":true})" << '\n';
            return 0;
        }
        std::cerr << "error: " << arcpack_last_error() << '\n';
        return 2;
    }

    if (export_dot->parsed()) {
        DigraphHandle d = load_digraph(dot_input);
        StringOut dot;
        if (arcpack_digraph_to_dot(d.d, dot.slot()) != ARCPACK_OK)
            die(arcpack_last_error());
        std::cout << dot.str();
        return 0;
    }

    if (gadget->parsed()) {
        StringOut out;
        arcpack_status status =
            gadget_check ? arcpack_gadget_verify(out.slot())
                         : arcpack_gadget_text(out.slot());
        if (gadget_check) return finish(status, out);
        if (status != ARCPACK_OK) die(arcpack_last_error());
        std::cout << out.str();
        return 0;
    }

    die("no subcommand");
}

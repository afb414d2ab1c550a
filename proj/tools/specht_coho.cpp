#include <CLI11.hpp>

#include <iostream>

#include "specht/commands.hpp"

using namespace specht;

namespace {

/// Default for check-conjectures: keeps (6,2,1^4) ⊢ 12 (k = 2100) and larger
/// out of an unattended run.
constexpr std::int64_t kConjectureSizeLimit = 8'000'000;

void add_common(CLI::App* cmd, CommonOptions& c, bool store_only = false) {
    cmd->add_option("--store", c.store, "Result store directory");
    if (store_only) return;
    cmd->add_option("--snf", c.snf, "Elimination strategy")->check(CLI::IsMember({"auto", "dense", "modular"}));
    cmd->add_option("--primes", c.primes, "Primes for p-parts and mod-p dimensions (default: all primes <= n)")->delimiter(',');
    cmd->add_option("--size-limit", c.size_limit, "Skip partitions whose Zassenhaus matrix has more entries (0: no limit)");
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of symmetric groups with Specht module coefficients"};
    app.require_subcommand(1);
    CommonOptions common;

    ComputeRequest compute;
    bool h0 = false, h1 = false, h2 = false;
    auto* c = app.add_subcommand("compute", "Compute H^0, H^1, H^2 for one partition");
    c->add_option("--n", compute.n, "n")->required();
    c->add_option("--lambda", compute.lambda, "Partition, e.g. 3,1^2")->required();
    c->add_flag("--h0", h0, "Print H^0");
    c->add_flag("--h1", h1, "Print H^1");
    c->add_flag("--h2", h2, "Print H^2");
    c->add_flag("--dims", compute.dims, "Print mod-p dimensions and p-ranks");
    c->add_option("--dump-matrices", compute.dump_dir, "Write generator, B and Z matrices to this directory");
    c->add_flag("--sparse", compute.sparse_dump, "Use the sparse text format for --dump-matrices");
    add_common(c, common);

    SweepRequest sweep;
    auto* s = app.add_subcommand("sweep", "Compute every partition of min-n..max-n (or the listed ones)");
    s->add_option("--max-n", sweep.max_n, "Largest n")->required();
    s->add_option("--min-n", sweep.min_n, "Smallest n");
    s->add_option("--lambda", sweep.lambdas, "Only these partitions (repeatable)");
    add_common(s, common);

    VerifyRequest verify;
    auto* v = app.add_subcommand("verify", "Compare stored results with a golden table");
    v->add_option("--golden", verify.golden, "Golden TSV")->required()->check(CLI::ExistingFile);
    v->add_option("--min-n", verify.min_n, "Smallest n");
    v->add_option("--max-n", verify.max_n, "Largest n");
    add_common(v, common, true);

    TableRequest table;
    auto* t = app.add_subcommand("table", "Print stored H^2 results as a table");
    t->add_option("--min-n", table.min_n, "Smallest n");
    t->add_option("--max-n", table.max_n, "Largest n");
    add_common(t, common, true);

    GraphRequest graph;
    std::string kind = "integral";
    auto* g = app.add_subcommand("graph", "Build C_p^i or C^i(F_p) from stored results");
    g->add_option("--p", graph.p, "Prime")->required();
    g->add_option("--degree", graph.degree, "Degree");
    g->add_option("--max-n", graph.max_n, "Largest n")->required();
    g->add_option("--kind", kind, "integral (C_p^i) or modular (C^i(F_p))")->check(CLI::IsMember({"integral", "modular"}));
    g->add_option("--dot", graph.dot_path, "DOT output file");
    g->add_option("--json", graph.json_path, "JSON adjacency output file");
    add_common(g, common, true);

    PredictRequest predict;
    auto* p = app.add_subcommand("predict", "Closed-form predictions for one partition");
    p->add_option("--n", predict.n, "n")->required();
    p->add_option("--lambda", predict.lambda, "Partition")->required();
    p->add_option("--p", predict.p, "Prime (default: every prime <= n)");
    p->add_flag("--check", predict.check, "Compute and compare");
    add_common(p, common);

    ConjectureRequest conj;
    auto* k = app.add_subcommand("check-conjectures", "Compare the conjectured H^2 families with computation");
    k->add_option("--max-n", conj.max_n, "Largest n");
    add_common(k, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*c) {
            if (h0) compute.degrees.push_back(0);
            if (h1) compute.degrees.push_back(1);
            if (h2) compute.degrees.push_back(2);
            return cmd_compute(compute, common, std::cout);
        }
        if (*s) return cmd_sweep(sweep, common, std::cout);
        if (*v) return cmd_verify(verify, common, std::cout);
        if (*t) return cmd_table(table, common, std::cout);
        if (*g) {
            graph.kind = kind == "modular" ? GraphKind::modular : GraphKind::integral;
            return cmd_graph(graph, common, std::cout);
        }
        if (*p) return cmd_predict(predict, common, std::cout);
        if (*k) {
            if (k->count("--size-limit") == 0) common.size_limit = kConjectureSizeLimit;
            return cmd_check_conjectures(conj, common, std::cout);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_usage;
}

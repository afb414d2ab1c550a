#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "specht/graph.hpp"
#include "specht/store.hpp"
#include "specht/zassenhaus.hpp"

namespace specht {

enum ExitCode : int { exit_ok = 0, exit_mismatch = 2, exit_partial = 3, exit_usage = 64 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Flags shared by the subcommands.
struct CommonOptions {
    std::string snf = "auto";
    std::vector<int> primes;
    std::int64_t size_limit = 0;
    int jobs = 1;
    /// Result store directory; empty for none.
    std::string store;
};

/// Throws UsageError for an unknown SNF strategy or a non-prime.
CohomologyOptions cohomology_options(const CommonOptions& common);

/// Parses λ and checks it sums to n (UsageError otherwise).
Partition partition_of_size(int n, const std::string& text);

struct SweepSummary {
    int computed = 0;
    int cached = 0;
    int skipped = 0;
    std::vector<std::string> failures;
    double seconds = 0;
};

/// Computes every partition in `todo` with a pool of `common.jobs` workers,
/// reusing and filling `store` when given. Results (cached or new) land in
/// `results`. `log` receives one line per partition.
SweepSummary run_sweep(const std::vector<Partition>& todo, const CommonOptions& common, ResultStore* store, ResultIndex& results,
                       std::ostream* log = nullptr);

/// All partitions of min_n..max_n.
std::vector<Partition> partitions_between(int min_n, int max_n);

struct ComputeRequest {
    int n = 0;
    std::string lambda;
    /// Degrees to print; empty for all.
    std::vector<int> degrees;
    bool dims = false;
    /// Directory receiving the generator, B and Z matrices; empty for none.
    std::string dump_dir;
    bool sparse_dump = false;
};

int cmd_compute(const ComputeRequest& req, const CommonOptions& common, std::ostream& out);

struct SweepRequest {
    int min_n = 2;
    int max_n = 0;
    /// Restricts the sweep to these partitions when nonempty.
    std::vector<std::string> lambdas;
};

int cmd_sweep(const SweepRequest& req, const CommonOptions& common, std::ostream& out);

struct VerifyRequest {
    std::string golden;
    int min_n = 2;
    int max_n = 1 << 30;
};

int cmd_verify(const VerifyRequest& req, const CommonOptions& common, std::ostream& out);

struct TableRequest {
    int min_n = 2;
    int max_n = 1 << 30;
};

/// Reference-table layout: n, λ, k, nontrivial elementary divisors of H².
int cmd_table(const TableRequest& req, const CommonOptions& common, std::ostream& out);
std::string format_table(const ResultIndex& results, int min_n, int max_n);

struct GraphRequest {
    int p = 2;
    int degree = 2;
    int max_n = 0;
    GraphKind kind = GraphKind::integral;
    std::string dot_path;
    std::string json_path;
};

int cmd_graph(const GraphRequest& req, const CommonOptions& common, std::ostream& out);

struct PredictRequest {
    int n = 0;
    std::string lambda;
    /// Zero for every prime <= n.
    int p = 0;
    /// Also compute and attach verdicts.
    bool check = false;
};

/// One JSON object per (λ, p).
int cmd_predict(const PredictRequest& req, const CommonOptions& common, std::ostream& out);

struct ConjectureRow {
    std::string family;
    Partition lambda;
    std::string conjectured;
    std::string computed;
    /// "match", "mismatch" or "not computed".
    std::string status;
};

/// (n−2,1²) for 4 <= n <= max_n, (n−3,2,1) for 5 <= n <= max_n, and the
/// (2l,2,1^q) partitions of n <= max_n. Missing results are computed and
/// added to `results` (and the store) unless their size exceeds the limit.
std::vector<ConjectureRow> conjecture_rows(int max_n, const CommonOptions& common, ResultStore* store, ResultIndex& results,
                                           bool membership_family = true);

struct ConjectureRequest {
    int max_n = 12;
};

int cmd_check_conjectures(const ConjectureRequest& req, const CommonOptions& common, std::ostream& out);

}  // namespace specht

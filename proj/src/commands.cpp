#include "specht/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "specht/checks.hpp"
#include "specht/golden.hpp"
#include "specht/theory.hpp"

namespace specht {

CohomologyOptions cohomology_options(const CommonOptions& c) {
    CohomologyOptions o;
    try {
        o.snf.strategy = parse_snf_strategy(c.snf);
    } catch (const std::exception&) {
        throw UsageError("unknown --snf value '" + c.snf + "' (expected auto, dense or modular)");
    }
    for (int p : c.primes) {
        if (!is_prime(p)) throw UsageError("--primes: " + std::to_string(p) + " is not prime");
    }
    if (c.size_limit < 0) throw UsageError("--size-limit must be >= 0");
    if (c.jobs < 1) throw UsageError("--jobs must be >= 1");
    o.primes = c.primes;
    o.size_limit = c.size_limit;
    return o;
}

Partition partition_of_size(int n, const std::string& text) {
    Partition l;
    try {
        l = parse_partition(text);
    } catch (const std::exception& e) {
        throw UsageError("'" + text + "' is not a partition: " + e.what());
    }
    if (l.size() != n) throw UsageError("parts sum to " + std::to_string(l.size()) + " ≠ " + std::to_string(n));
    return l;
}

std::vector<Partition> partitions_between(int min_n, int max_n) {
    std::vector<Partition> out;
    for (int n = std::max(min_n, 0); n <= max_n; ++n) {
        for (auto& l : partitions_of(n)) out.push_back(std::move(l));
    }
    return out;
}

namespace {

std::unique_ptr<ResultStore> open_store(const CommonOptions& c, bool required) {
    if (c.store.empty()) {
        if (required) throw UsageError("--store is required for this command");
        return nullptr;
    }
    return std::make_unique<ResultStore>(c.store);
}

std::string paren(const Partition& l) { return "(" + l.to_exponent_string() + ")"; }

std::string seconds_string(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << s << "s";
    return os.str();
}

bool covers(const std::vector<int>& have, const std::vector<int>& want) {
    return std::all_of(want.begin(), want.end(), [&](int p) { return std::find(have.begin(), have.end(), p) != have.end(); });
}

/// A stored result can stand in for a fresh computation with these options.
bool reusable(const CohomologyResult& r, const CohomologyOptions& o) {
    if (r.status == "skipped") {
        return o.size_limit > 0 && r.zmat_rows * r.zmat_cols > o.size_limit;
    }
    if (r.status != "ok") return false;
    const auto want = o.primes.empty() ? primes_up_to(r.n) : o.primes;
    if (!covers(r.primes, want)) return false;
    return r.complete || !o.primes.empty();
}

std::string summary_line(const CohomologyResult& r) {
    std::ostringstream os;
    os << "n=" << r.n << " " << paren(r.lambda) << " k=" << r.k << " ";
    if (r.status != "ok") {
        os << r.status << " (Z is " << r.zmat_rows << "x" << r.zmat_cols << ")";
    } else {
        os << r.strategy << " " << seconds_string(r.seconds) << " H1=" << r.h1.type_string() << " H2=" << r.h2.type_string();
    }
    return os.str();
}

}  // namespace

SweepSummary run_sweep(const std::vector<Partition>& todo, const CommonOptions& common, ResultStore* store, ResultIndex& results,
                       std::ostream* log) {
    auto opts = cohomology_options(common);
    const auto t0 = std::chrono::steady_clock::now();
    SweepSummary s;
    std::vector<Partition> work;
    for (const auto& l : todo) {
        if (store) {
            if (auto r = store->find(l); r && reusable(*r, opts)) {
                ++s.cached;
                if (r->status != "ok") ++s.skipped;
                results[l] = std::move(*r);
                continue;
            }
        }
        work.push_back(l);
    }
    std::stable_sort(work.begin(), work.end(),
                     [](const Partition& a, const Partition& b) { return standard_tableau_count(a) > standard_tableau_count(b); });

    opts.threads = std::max<int>(1, common.jobs / static_cast<int>(std::max<std::size_t>(1, work.size())));

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            const auto& l = work[i];
            try {
                auto r = compute_cohomology(l, opts);
                if (store) store->put(r);
                std::lock_guard lock(mu);
                if (r.status == "ok") {
                    ++s.computed;
                } else {
                    ++s.skipped;
                }
                if (log) *log << summary_line(r) << "\n" << std::flush;
                results[l] = std::move(r);
            } catch (const std::exception& e) {
                std::lock_guard lock(mu);
                s.failures.push_back(paren(l) + ": " + e.what());
                if (log) *log << "n=" << l.size() << " " << paren(l) << " failed: " << e.what() << "\n" << std::flush;
            }
        }
    };
    const int threads = std::max(1, std::min<int>(common.jobs, static_cast<int>(work.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

int cmd_compute(const ComputeRequest& req, const CommonOptions& common, std::ostream& out) {
    const auto lambda = partition_of_size(req.n, req.lambda);
    for (int d : req.degrees) {
        if (d < 0 || d > 2) throw UsageError("degrees must be 0, 1 or 2");
    }
    auto store = open_store(common, false);
    ResultIndex results;
    const auto s = run_sweep({lambda}, common, store.get(), results, nullptr);
    if (!s.failures.empty()) throw std::runtime_error(s.failures.front());
    const auto& r = results.at(lambda);

    if (!req.dump_dir.empty()) {
        std::filesystem::create_directories(req.dump_dir);
        const auto rep = generator_matrices(lambda);
        const auto sys = build_system(rep);
        const auto base = std::filesystem::path(req.dump_dir);
        for (const auto& [g, m] : rep.generators) {
            write_matrix_file((base / (std::string(1, generator_symbol(g)) + ".txt")).string(), m, req.sparse_dump);
        }
        write_matrix_file((base / "B.txt").string(), sys.bmat, req.sparse_dump);
        write_matrix_file((base / "Z.txt").string(), sys.zmat, req.sparse_dump);
        out << "matrices written to " << req.dump_dir << "\n";
    }

    out << "lambda = " << paren(lambda) << ", n=" << r.n << ", k=" << r.k << ", strategy=" << r.strategy << "\n";
    if (r.status != "ok") {
        out << "skipped: Zassenhaus matrix is " << r.zmat_rows << "x" << r.zmat_cols << " (size limit " << common.size_limit << ")\n";
        return exit_partial;
    }
    std::vector<int> degrees = req.degrees.empty() ? std::vector<int>{0, 1, 2} : req.degrees;
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int d : degrees) out << "H" << d << " = " << r.degree(d).type_string() << ", k=" << r.k << "\n";
    if (!r.complete) {
        out << "p-parts determined only at primes";
        for (int p : r.primes) out << " " << p;
        out << "\n";
    }
    if (req.dims) {
        for (int p : r.primes) {
            const auto d = r.dims(p);
            out << "p=" << p << ": d0=" << d->first << " d1=" << d->second << " x1=" << r.h1.p_rank(p) << " x2=" << r.h2.p_rank(p) << "\n";
        }
    }
    return exit_ok;
}

int cmd_sweep(const SweepRequest& req, const CommonOptions& common, std::ostream& out) {
    if (req.max_n < req.min_n) throw UsageError("--max-n must be >= --min-n");
    std::vector<Partition> todo;
    if (req.lambdas.empty()) {
        todo = partitions_between(req.min_n, req.max_n);
    } else {
        for (const auto& text : req.lambdas) {
            Partition l;
            try {
                l = parse_partition(text);
            } catch (const std::exception& e) {
                throw UsageError("'" + text + "' is not a partition: " + e.what());
            }
            todo.push_back(l);
        }
    }
    auto store = open_store(common, false);
    ResultIndex results;
    const auto s = run_sweep(todo, common, store.get(), results, &out);
    out << "sweep: " << todo.size() << " partitions, " << s.computed << " computed, " << s.cached << " cached, " << s.skipped << " skipped, "
        << s.failures.size() << " failed, " << seconds_string(s.seconds) << "\n";
    for (const auto& f : s.failures) out << "failed: " << f << "\n";
    return (s.skipped > 0 || !s.failures.empty()) ? exit_partial : exit_ok;
}

int cmd_verify(const VerifyRequest& req, const CommonOptions& common, std::ostream& out) {
    auto store = open_store(common, true);
    if (store->size() == 0) {
        out << "store " << common.store << " is empty; run sweep first\n";
        return exit_partial;
    }
    const auto table = GoldenTable::load(req.golden);
    const auto rep = verify_against(table, store->index(), req.min_n, req.max_n);
    for (const auto& m : rep.mismatches) {
        out << "MISMATCH " << paren(m.lambda) << " " << m.field << ": expected " << m.expected << ", computed " << m.actual << "\n";
    }
    out << "verify: " << rep.rows << " rows, " << rep.exact_matched << " exact matches, " << rep.primes_matched << " prime-set matches, "
        << rep.unknown_skipped << " unknown rows, " << rep.not_computed << " not computed, " << rep.mismatches.size() << " mismatches\n";
    if (!rep.ok()) return exit_mismatch;
    return rep.not_computed > 0 ? exit_partial : exit_ok;
}

std::string format_table(const ResultIndex& results, int min_n, int max_n) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "n" << std::setw(20) << "lambda" << std::setw(8) << "k"
       << "e.d.\n";
    int last = -1;
    for (const auto& [l, r] : results) (void)r, last = std::max(last, l.size());
    for (int n = min_n; n <= std::min(max_n, last); ++n) {
        bool first = true;
        bool gap = false;
        for (const auto& l : partitions_of(n)) {
            const auto it = results.find(l);
            if (it == results.end()) {
                gap = true;
                continue;
            }
            if (gap && !first) os << std::setw(4) << "" << "...\n";
            gap = false;
            const auto& r = it->second;
            std::string ed = "?";
            if (r.status == "ok" && r.h2.computed()) {
                ed = divisor_list(*r.h2.divisors);
                if (!r.complete) {
                    std::string ps;
                    for (int p : r.primes) ps += (ps.empty() ? "" : ",") + std::to_string(p);
                    ed += " [p-parts at " + ps + "]";
                }
            }
            os << std::setw(4) << (first ? std::to_string(n) : "") << std::setw(20) << paren(l) << std::setw(8) << r.k << ed << "\n";
            first = false;
        }
        if (gap && !first) os << std::setw(4) << "" << "...\n";
    }
    return os.str();
}

int cmd_table(const TableRequest& req, const CommonOptions& common, std::ostream& out) {
    auto store = open_store(common, true);
    if (store->size() == 0) {
        out << "store " << common.store << " is empty; run sweep first\n";
        return exit_partial;
    }
    out << format_table(store->index(), req.min_n, req.max_n);
    return exit_ok;
}

int cmd_graph(const GraphRequest& req, const CommonOptions& common, std::ostream& out) {
    auto store = open_store(common, true);
    if (store->size() == 0) {
        out << "store " << common.store << " is empty; run sweep first\n";
        return exit_partial;
    }
    if (req.max_n < 2) throw UsageError("--max-n must be >= 2");
    CohomologyGraph g;
    try {
        g = build_graph(store->index(), req.p, req.degree, req.max_n, req.kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!req.dot_path.empty()) write_text_file(req.dot_path, export_dot(g));
    if (!req.json_path.empty()) write_text_file(req.json_path, export_json(g));
    if (req.dot_path.empty() && req.json_path.empty()) out << export_dot(g);

    const auto rep = check_structure(g);
    out << "graph: " << g.vertices.size() << " vertices, " << g.edges.size() << " edges, " << g.frontier.size() << " frontier, " << g.unknown.size()
        << " unknown\n";
    for (const auto& v : rep.violations) out << "VIOLATION " << v << "\n";
    for (const auto& v : rep.undetermined) out << "undetermined " << v << "\n";
    bool failed = !rep.ok();
    for (const auto& c : verify_path_lemmas(g)) {
        out << "path " << c.status << ": " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        failed = failed || c.status == "fail";
    }
    if (failed) return exit_mismatch;
    return (g.unknown.empty() && rep.undetermined.empty()) ? exit_ok : exit_partial;
}

namespace {

nlohmann::ordered_json prediction_json(const Prediction& p) {
    nlohmann::ordered_json j;
    j["quantity"] = to_string(p.quantity);
    j["bound"] = to_string(p.bound);
    if (p.quantity == Quantity::h1 || p.quantity == Quantity::h2) {
        j["group"] = p.group;
    } else {
        j["value"] = p.value;
    }
    j["text"] = p.value_string();
    j["source"] = p.source;
    j["conjecture"] = p.conjecture;
    return j;
}

}  // namespace

int cmd_predict(const PredictRequest& req, const CommonOptions& common, std::ostream& out) {
    const auto lambda = partition_of_size(req.n, req.lambda);
    if (req.p != 0 && !is_prime(req.p)) throw UsageError("--p must be prime");
    std::vector<int> primes = req.p ? std::vector<int>{req.p} : primes_up_to(req.n);
    std::optional<CohomologyResult> r;
    if (req.check) {
        auto c = common;
        c.primes = primes;
        auto store = open_store(common, false);
        ResultIndex results;
        const auto s = run_sweep({lambda}, c, store.get(), results, nullptr);
        if (!s.failures.empty()) throw std::runtime_error(s.failures.front());
        r = results.at(lambda);
    }
    bool violated = false;
    for (int p : primes) {
        nlohmann::ordered_json j;
        j["n"] = req.n;
        j["lambda"] = lambda.to_exponent_string();
        j["p"] = p;
        auto arr = nlohmann::ordered_json::array();
        if (r) {
            for (const auto& o : check_predictions(*r, p)) {
                auto pj = prediction_json(o.prediction);
                pj["verdict"] = to_string(o.verdict);
                pj["actual"] = o.actual;
                violated = violated || o.verdict == Verdict::violates;
                arr.push_back(pj);
            }
        } else {
            for (const auto& pred : predictions_for(lambda, p)) arr.push_back(prediction_json(pred));
        }
        j["predictions"] = arr;
        out << j.dump() << "\n";
    }
    return violated ? exit_mismatch : exit_ok;
}

std::vector<ConjectureRow> conjecture_rows(int max_n, const CommonOptions& common, ResultStore* store, ResultIndex& results,
                                           bool membership_family) {
    std::vector<std::pair<std::string, Partition>> wanted;
    for (int n = 4; n <= max_n; ++n) wanted.push_back({"(n-2,1^2)", Partition({n - 2, 1, 1})});
    for (int n = 5; n <= max_n; ++n) wanted.push_back({"(n-3,2,1)", Partition({n - 3, 2, 1})});
    for (int n = 4; membership_family && n <= max_n; ++n) {
        for (int l2 = 2; l2 + 2 <= n; l2 += 2) {
            std::vector<int> parts{l2, 2};
            parts.insert(parts.end(), static_cast<std::size_t>(n - l2 - 2), 1);
            wanted.push_back({"(2l,2,1^q)", Partition(parts)});
        }
    }
    std::vector<Partition> missing;
    for (const auto& [f, l] : wanted) {
        if (!results.count(l)) missing.push_back(l);
    }
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    auto c = common;
    c.primes.clear();
    run_sweep(missing, c, store, results, nullptr);

    std::vector<ConjectureRow> rows;
    for (const auto& [family, l] : wanted) {
        const bool membership = family == "(2l,2,1^q)";
        const auto pred = conjecture_values(l);
        ConjectureRow row{family, l, membership ? "2 | |H2|" : pred.value_string(), "not computed", "not computed"};
        const auto it = results.find(l);
        if (it != results.end() && it->second.status == "ok" && it->second.h2.computed() && it->second.complete) {
            const auto& r = it->second;
            row.computed = r.h2.type_string();
            bool match;
            if (membership) {
                match = r.h2.p_rank(2) > 0;
            } else {
                match = pred.admits(small_divisors(r.h2));
            }
            row.status = match ? "match" : "mismatch";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_check_conjectures(const ConjectureRequest& req, const CommonOptions& common, std::ostream& out) {
    auto store = open_store(common, false);
    ResultIndex results = store ? store->index() : ResultIndex{};
    const auto rows = conjecture_rows(req.max_n, common, store.get(), results);
    int mismatches = 0, missing = 0;
    out << std::left << std::setw(13) << "family" << std::setw(16) << "lambda" << std::setw(14) << "conjectured" << std::setw(14) << "computed"
        << "status\n";
    for (const auto& r : rows) {
        out << std::setw(13) << r.family << std::setw(16) << paren(r.lambda) << std::setw(14) << r.conjectured << std::setw(14) << r.computed << r.status
            << "\n";
        mismatches += r.status == "mismatch";
        missing += r.status == "not computed";
    }
    out << "conjectures: " << rows.size() << " checked, " << mismatches << " mismatches, " << missing << " not computed\n";
    if (mismatches) return exit_mismatch;
    return missing ? exit_partial : exit_ok;
}

}  // namespace specht

#include "specht/zassenhaus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace specht {

ZassenhausSystem build_system(const Presentation& pres, const std::map<Generator, IntMatrix>& rho, const Partition& lambda) {
    const int g = pres.generator_count();
    if (g == 0) throw std::invalid_argument("build_system: presentation without generators");
    const int k = rho.at(pres.generators.front()).rows();
    std::map<Generator, int> block;
    std::map<Generator, SparseRows> sparse;
    for (int i = 0; i < g; ++i) {
        const auto x = pres.generators[static_cast<std::size_t>(i)];
        const auto it = rho.find(x);
        if (it == rho.end()) throw std::invalid_argument("build_system: generator without a matrix");
        if (it->second.rows() != k || it->second.cols() != k) throw std::invalid_argument("build_system: generator matrices differ in size");
        block[x] = i;
        sparse.emplace(x, SparseRows::from_dense(it->second));
    }

    ZassenhausSystem sys;
    sys.lambda = lambda;
    sys.g = g;
    sys.k = k;
    sys.bmat = IntMatrix(g * k, k);
    const auto id = IntMatrix::identity(k);
    for (int i = 0; i < g; ++i) sys.bmat.set_block(i * k, 0, rho.at(pres.generators[static_cast<std::size_t>(i)]) - id);

    sys.zmat = IntMatrix(pres.relator_count() * k, g * k);
    for (int r = 0; r < pres.relator_count(); ++r) {
        IntMatrix prefix = id;
        const auto& w = pres.relators[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < w.size(); ++i) {
            const int c0 = block.at(w[i]) * k;
            for (int a = 0; a < k; ++a) {
                auto dst = sys.zmat.row(r * k + a);
                auto src = prefix.row(a);
                for (int b = 0; b < k; ++b) {
                    auto& d = dst[static_cast<std::size_t>(c0 + b)];
                    if (__builtin_add_overflow(d, src[static_cast<std::size_t>(b)], &d)) throw std::overflow_error("build_system: 64-bit overflow");
                }
            }
            if (i + 1 < w.size()) prefix = multiply(prefix, sparse.at(w[i]));
        }
    }
    if (!cocycle_identity_holds(sys)) throw std::logic_error("build_system: Zmat * Bmat is not zero");
    return sys;
}

ZassenhausSystem build_system(const SpechtRep& rep) {
    return build_system(presentation_for(rep.lambda.size()), rep.generators, rep.lambda);
}

bool cocycle_identity_holds(const ZassenhausSystem& sys) {
    return multiply(sys.zmat, SparseRows::from_dense(sys.bmat)).is_zero();
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::computed: return "computed";
        case Provenance::predicted: return "predicted";
        case Provenance::golden: return "golden";
    }
    return "?";
}

std::string CohomologyRecord::type_string() const {
    if (!divisors) return "not computed";
    if (degree == 0) {
        if (free_rank == 0) return "0";
        return free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    if (divisors->empty()) return "0";
    std::string out;
    for (const auto& d : *divisors) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.get_str();
    }
    return out;
}

int CohomologyRecord::p_rank(int p) const {
    if (!divisors) return 0;
    return static_cast<int>(std::count_if(divisors->begin(), divisors->end(),
                                          [p](const mpz_class& d) { return mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) != 0; }));
}

const CohomologyRecord& CohomologyResult::degree(int i) const {
    switch (i) {
        case 0: return h0;
        case 1: return h1;
        case 2: return h2;
    }
    throw std::out_of_range("CohomologyResult::degree: only degrees 0, 1, 2");
}

std::optional<std::pair<int, int>> CohomologyResult::dims(int p) const {
    auto a = h0.modp_dims.find(p);
    auto b = h1.modp_dims.find(p);
    if (a == h0.modp_dims.end() || b == h1.modp_dims.end()) return std::nullopt;
    return std::pair{a->second, b->second};
}

int factorial_valuation(int n, int p) {
    int v = 0;
    for (std::int64_t q = p; q <= n; q *= p) v += static_cast<int>(n / q);
    return v;
}

namespace {

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int i; (i = next++) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

struct Divisors {
    ElemDivisors all;  // every nonzero divisor, ones included
    std::map<int, int> rank_mod_p;
    std::string certificate;
};

// Every nonzero divisor divides n! since |Σ_n| kills positive-degree cohomology.
Divisors dense_divisors(const IntMatrix& m, const std::vector<int>& primes, int n) {
    Divisors out;
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(std::max(n, 1)));
    out.all = smith_elementary_divisors_bounded(m, factorial);
    out.certificate = "snf";
    for (int p : primes) out.rank_mod_p[p] = out.all.rank() - out.all.count_divisible(p);
    return out;
}

// p-adic elimination at every prime, starting at the exponent that exceeds
// v_p(n!). The rank is certified when some prime sees `upper_bound` nonzero
// divisors; otherwise it is recomputed.
Divisors modular_divisors(const IntMatrix& m, const std::vector<int>& primes, int n, int upper_bound, int threads) {
    upper_bound = std::min({upper_bound, m.rows(), m.cols()});
    std::vector<LocalSmith> local(primes.size());
    std::vector<int> start(primes.size());
    parallel_for(static_cast<int>(primes.size()), threads, [&](int i) {
        const int p = primes[static_cast<std::size_t>(i)];
        start[static_cast<std::size_t>(i)] = factorial_valuation(std::max(n, 1), p) + 1;
        local[static_cast<std::size_t>(i)] = local_smith(m, static_cast<std::uint64_t>(p), start[static_cast<std::size_t>(i)]);
    });
    Divisors out;
    int lower = 0;
    for (const auto& ls : local) lower = std::max(lower, ls.nonzero());
    int rank;
    if (lower == upper_bound) {
        rank = lower;
        out.certificate = "p-adic";
    } else {
        const auto rr = rational_rank(m, upper_bound);
        rank = rr.rank;
        out.certificate = rr.certificate;
    }
    std::map<int, std::vector<int>> valuations;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const int p = primes[i];
        out.rank_mod_p[p] = local[i].rank_mod_p();
        if (local[i].nonzero() == rank) {
            auto& vals = valuations[p];
            for (int v = 0; v < local[i].exponent; ++v) vals.insert(vals.end(), static_cast<std::size_t>(local[i].valuation_counts[static_cast<std::size_t>(v)]), v);
        } else {
            valuations[p] = p_part_valuations(m, p, rank, 2 * start[i]);
        }
    }
    out.all = assemble_from_p_parts(rank, valuations);
    return out;
}

}  // namespace

CohomologyResult compute_cohomology(const ZassenhausSystem& sys, const CohomologyOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    CohomologyResult res;
    res.lambda = sys.lambda;
    res.n = sys.lambda.size();
    res.k = sys.k;
    res.g = sys.g;
    res.zmat_rows = sys.zmat.rows();
    res.zmat_cols = sys.zmat.cols();
    res.primes = options.primes.empty() ? primes_up_to(res.n) : options.primes;
    std::sort(res.primes.begin(), res.primes.end());
    res.primes.erase(std::unique(res.primes.begin(), res.primes.end()), res.primes.end());
    for (int p : res.primes) {
        if (!is_prime(p)) throw std::invalid_argument("compute_cohomology: " + std::to_string(p) + " is not prime");
    }

    for (auto* rec : {&res.h0, &res.h1, &res.h2}) rec->lambda = sys.lambda;
    res.h1.degree = 1;
    res.h2.degree = 2;

    const std::int64_t size = res.zmat_rows * res.zmat_cols;
    if (options.size_limit > 0 && size > options.size_limit) {
        res.status = "skipped";
        res.strategy = "none";
        return res;
    }
    bool dense = options.snf.strategy == SnfStrategy::dense ||
                 (options.snf.strategy == SnfStrategy::automatic && size <= options.snf.dense_threshold);
    res.strategy = dense ? "dense" : "modular";
    if (!dense) {
        for (int p : primes_up_to(res.n)) {
            if (!std::binary_search(res.primes.begin(), res.primes.end(), p)) res.complete = false;
        }
    }

    const auto b = dense ? dense_divisors(sys.bmat, res.primes, res.n) : modular_divisors(sys.bmat, res.primes, res.n, sys.k, options.threads);
    res.rank_b = b.all.rank();
    const int bound = sys.g * sys.k - res.rank_b;
    const auto z = dense ? dense_divisors(sys.zmat, res.primes, res.n) : modular_divisors(sys.zmat, res.primes, res.n, bound, options.threads);
    res.rank_z = z.all.rank();
    res.rank_certificate = z.certificate;

    res.h0.free_rank = sys.k - res.rank_b;
    res.h0.divisors.emplace();
    res.h1.divisors = b.all.nontrivial();
    res.h2.divisors = z.all.nontrivial();
    for (int p : res.primes) {
        const int rb = b.rank_mod_p.at(p), rz = z.rank_mod_p.at(p);
        res.h0.modp_dims[p] = sys.k - rb;
        res.h1.modp_dims[p] = sys.g * sys.k - rz - rb;
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

CohomologyResult compute_cohomology(const Partition& lambda, const CohomologyOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = lambda.size();
    if (n <= 1) {
        CohomologyResult res;
        res.lambda = lambda;
        res.n = n;
        res.k = 1;
        res.strategy = "trivial";
        res.rank_certificate = "trivial";
        for (auto* rec : {&res.h0, &res.h1, &res.h2}) {
            rec->lambda = lambda;
            rec->divisors.emplace();
        }
        res.h0.free_rank = 1;
        res.h1.degree = 1;
        res.h2.degree = 2;
        // The trivial group: H^0 = Z and nothing in positive degree.
        for (int p : options.primes) {
            res.h0.modp_dims[p] = 1;
            res.h1.modp_dims[p] = 0;
        }
        res.primes = options.primes;
        return res;
    }
    const auto pres = presentation_for(n);
    const auto k = static_cast<std::int64_t>(standard_tableau_count(lambda));
    const std::int64_t size = pres.relator_count() * k * pres.generator_count() * k;
    if (options.size_limit > 0 && size > options.size_limit) {
        CohomologyResult res;
        res.lambda = lambda;
        res.n = n;
        res.k = static_cast<int>(k);
        res.g = pres.generator_count();
        res.zmat_rows = pres.relator_count() * k;
        res.zmat_cols = pres.generator_count() * k;
        res.status = "skipped";
        res.strategy = "none";
        for (auto* rec : {&res.h0, &res.h1, &res.h2}) rec->lambda = lambda;
        res.h1.degree = 1;
        res.h2.degree = 2;
        return res;
    }
    const auto sys = build_system(generator_matrices(lambda));
    auto res = compute_cohomology(sys, options);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

CohomologyRecord h1_integral(const Partition& lambda, const CohomologyOptions& options) {
    return compute_cohomology(lambda, options).h1;
}

CohomologyRecord h2_integral(const Partition& lambda, const std::vector<int>& prime_hints, const CohomologyOptions& options) {
    auto opts = options;
    if (!prime_hints.empty()) opts.primes = prime_hints;
    return compute_cohomology(lambda, opts).h2;
}

std::pair<int, int> dims_mod_p(const Partition& lambda, int p) {
    CohomologyOptions opts;
    opts.primes = {p};
    const auto res = compute_cohomology(lambda, opts);
    return *res.dims(p);
}

}  // namespace specht

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "specht/zassenhaus.hpp"

using namespace specht;

namespace {

std::vector<mpz_class> mz(std::initializer_list<long> xs) {
    std::vector<mpz_class> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Random unimodular U together with its inverse, built from elementary operations.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, int k) {
    IntMatrix u = IntMatrix::identity(k), inv = IntMatrix::identity(k);
    if (k < 2) return {u, inv};
    std::uniform_int_distribution<int> pick(0, k - 1), mult(-1, 1);
    for (int step = 0; step < 3 * k; ++step) {
        const int i = pick(rng), j = pick(rng), f = mult(rng);
        if (i == j || f == 0) continue;
        // u <- E u with E = I + f e_ij; inv <- inv E^{-1}.
        for (int c = 0; c < k; ++c) u(i, c) += f * u(j, c);
        for (int r = 0; r < k; ++r) inv(r, j) -= f * inv(r, i);
    }
    return {u, inv};
}

}  // namespace

TEST_CASE("systems for n = 2") {
    auto triv = build_system(generator_matrices(Partition({2})));
    CHECK(triv.bmat == IntMatrix::from_rows({{0}}));
    CHECK(triv.zmat == IntMatrix::from_rows({{2}}));
    auto sign = build_system(generator_matrices(Partition({1, 1})));
    CHECK(sign.bmat == IntMatrix::from_rows({{-2}}));
    CHECK(sign.zmat == IntMatrix::from_rows({{0}}));
    CHECK(compute_cohomology(Partition({2})).h2.type_string() == "Z/2");
    CHECK(compute_cohomology(Partition({1, 1})).h2.type_string() == "0");
    CHECK(compute_cohomology(Partition({1, 1})).h1.type_string() == "Z/2");
    CHECK(dims_mod_p(Partition({1, 1}), 2) == std::pair{1, 1});
}

TEST_CASE("structural identities") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& l : partitions_of(n)) {
            auto sys = build_system(generator_matrices(l));
            CHECK(cocycle_identity_holds(sys));
            auto res = compute_cohomology(sys);
            CHECK(res.rank_b + res.rank_z == sys.g * sys.k);
            if (n >= 3 && !l.is_trivial_shape()) {
                CHECK(res.rank_b == sys.k);
                CHECK(res.rank_z == sys.k);
            }
            CHECK(bareiss_rank(sys.zmat) == res.rank_z);
        }
    }
}

TEST_CASE("dense and modular routes agree") {
    CohomologyOptions dense, modular;
    dense.snf.strategy = SnfStrategy::dense;
    modular.snf.strategy = SnfStrategy::modular;
    modular.threads = 3;
    for (int n = 2; n <= 7; ++n) {
        for (const auto& l : partitions_of(n)) {
            auto a = compute_cohomology(l, dense), b = compute_cohomology(l, modular);
            CHECK(a.strategy == "dense");
            CHECK(b.strategy == "modular");
            CHECK(b.complete);
            CHECK(a.h1.divisors == b.h1.divisors);
            CHECK(a.h2.divisors == b.h2.divisors);
            CHECK(a.h0.modp_dims == b.h0.modp_dims);
            CHECK(a.h1.modp_dims == b.h1.modp_dims);
        }
    }
}

TEST_CASE("tabulated values") {
    CHECK(compute_cohomology(parse_partition("3,1^2")).h2.divisors == mz({10}));
    CHECK(compute_cohomology(parse_partition("3^2,1^2")).h2.divisors == mz({2, 10}));
    CHECK(compute_cohomology(parse_partition("4,1^2")).h2.divisors == mz({3}));
    CHECK(compute_cohomology(parse_partition("1^4")).h2.divisors == mz({3}));
    CHECK(compute_cohomology(parse_partition("2,1")).h2.divisors == mz({}));
}

TEST_CASE("known first cohomology") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(h1_integral(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))).divisors == mz({2}));
        CHECK(h1_integral(Partition({n - 1, 1})).divisors == mz({n}));
        CHECK(h1_integral(Partition({n})).divisors == mz({}));
        CHECK(h2_integral(Partition({n})).divisors == mz({2}));
    }
}

TEST_CASE("basis change leaves cohomology unchanged") {
    std::mt19937_64 rng(31);
    for (const char* text : {"3,1^2", "3,2,1", "4,2", "3,3,1"}) {
        auto l = parse_partition(text);
        auto rep = generator_matrices(l);
        auto [u, inv] = random_unimodular(rng, rep.k);
        REQUIRE(u * inv == IntMatrix::identity(rep.k));
        std::map<Generator, IntMatrix> conj;
        for (const auto& [g, m] : rep.generators) conj.emplace(g, u * m * inv);
        auto a = compute_cohomology(build_system(rep));
        auto b = compute_cohomology(build_system(presentation_for(l.size()), conj, l));
        CHECK(a.h1.divisors == b.h1.divisors);
        CHECK(a.h2.divisors == b.h2.divisors);
    }
}

TEST_CASE("Bockstein bookkeeping on small cases") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& l : partitions_of(n)) {
            auto res = compute_cohomology(l);
            for (int p : res.primes) {
                auto [d0, d1] = *res.dims(p);
                const int x1 = res.h1.p_rank(p), x2 = res.h2.p_rank(p);
                if (!l.is_trivial_shape()) CHECK(d0 == x1);
                CHECK(d1 == x1 + x2);
            }
        }
    }
}

TEST_CASE("size limit and restricted primes") {
    CohomologyOptions opts;
    opts.size_limit = 10;
    auto res = compute_cohomology(parse_partition("3,1^2"), opts);
    CHECK(res.status == "skipped");
    CHECK_FALSE(res.h2.computed());
    CHECK(res.h2.type_string() == "not computed");

    CohomologyOptions only5;
    only5.primes = {5};
    only5.snf.strategy = SnfStrategy::modular;
    auto partial = compute_cohomology(parse_partition("3,1^2"), only5);
    CHECK_FALSE(partial.complete);
    CHECK(partial.h2.divisors == mz({5}));
    CHECK(factorial_valuation(10, 2) == 8);
    CHECK_THROWS_AS(compute_cohomology(parse_partition("2,1"), CohomologyOptions{.primes = {4}}), std::invalid_argument);
}

TEST_CASE("trivial group") {
    auto res = compute_cohomology(Partition({1}));
    CHECK(res.h0.type_string() == "Z");
    CHECK(res.h2.type_string() == "0");
}

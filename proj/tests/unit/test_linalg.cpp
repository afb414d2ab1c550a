#include <doctest.h>

#include <stdexcept>

#include <random>

#include "specht/linalg.hpp"
#include "specht/partition.hpp"

using namespace specht;

namespace {

mpz_class laplace_det(const std::vector<std::vector<mpz_class>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    mpz_class total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<mpz_class>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<mpz_class> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(a[i][c]);
            }
            minor.push_back(row);
        }
        mpz_class term = a[0][j] * laplace_det(minor);
        total += (j % 2) ? mpz_class(-term) : term;
    }
    return total;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Elementary divisors as quotients of successive determinantal divisors.
std::vector<mpz_class> determinantal_divisors(const IntMatrix& m) {
    std::vector<mpz_class> d{1};
    for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        mpz_class g = 0;
        for (const auto& r : rs) {
            for (const auto& c : cs) {
                std::vector<std::vector<mpz_class>> sub(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) {
                    for (int j = 0; j < k; ++j) sub[static_cast<std::size_t>(i)].push_back(mpz_class(static_cast<long>(m(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]))));
                }
                mpz_class det = laplace_det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            }
        }
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<mpz_class> out;
    for (std::size_t i = 1; i < d.size(); ++i) out.push_back(d[i] / d[i - 1]);
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int range, double density) {
    std::uniform_int_distribution<int> val(-range, range);
    std::bernoulli_distribution nz(density);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = nz(rng) ? val(rng) : 0;
    }
    return m;
}

// Low-rank matrix with prescribed divisors, scrambled by unimodular operations.
IntMatrix scrambled_diagonal(std::mt19937_64& rng, int rows, int cols, const std::vector<std::int64_t>& diag) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    std::uniform_int_distribution<int> pick_r(0, rows - 1), pick_c(0, cols - 1), mult(-2, 2);
    for (int step = 0; step < 4 * (rows + cols); ++step) {
        int a = pick_r(rng), b = pick_r(rng), f = mult(rng);
        if (a != b) {
            for (int j = 0; j < cols; ++j) m(a, j) += f * m(b, j);
        }
        a = pick_c(rng), b = pick_c(rng), f = mult(rng);
        if (a != b) {
            for (int i = 0; i < rows; ++i) m(i, a) += f * m(i, b);
        }
    }
    return m;
}

int valuation(mpz_class x, int p) {
    int v = 0;
    while (x != 0 && mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

TEST_CASE("dense Smith form agrees with determinantal divisors") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 150; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 5);
        auto m = random_matrix(rng, rows, cols, 6, 0.7);
        auto expected = determinantal_divisors(m);
        auto got = smith_elementary_divisors(m);
        CHECK(got.divisors == expected);
        CHECK(got.is_chain());
    }
}

TEST_CASE("Smith form of a known matrix") {
    auto m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(smith_elementary_divisors(m).divisors == std::vector<mpz_class>{2, 6, 12});
    CHECK(smith_elementary_divisors(IntMatrix(3, 2)).divisors.empty());
}

TEST_CASE("Smith form survives 64-bit overflow") {
    const std::int64_t big = std::int64_t{1} << 40;
    auto m = IntMatrix::from_rows({{big, big + 1, 3}, {big - 1, big, 5}, {7, big + 3, big}});
    auto expected = determinantal_divisors(m);
    CHECK(smith_elementary_divisors(m).divisors == expected);
}

TEST_CASE("scrambled diagonals recover their divisors") {
    std::mt19937_64 rng(99);
    const std::vector<std::int64_t> diag{1, 1, 2, 6, 12, 36, 0};
    for (int trial = 0; trial < 20; ++trial) {
        auto m = scrambled_diagonal(rng, 9, 8, diag);
        CHECK(smith_elementary_divisors(m).divisors == std::vector<mpz_class>{1, 1, 2, 6, 12, 36});
        CHECK(rational_rank(m).rank == 6);
        CHECK(bareiss_rank(m) == 6);
        CHECK(p_part_valuations(m, 2, 6, 1) == std::vector<int>{0, 0, 1, 1, 2, 2});
        CHECK(p_part_valuations(m, 3, 6, 1) == std::vector<int>{0, 0, 0, 1, 1, 2});
        CHECK(assemble_from_p_parts(6, {{2, {0, 0, 1, 1, 2, 2}}, {3, {0, 0, 0, 1, 1, 2}}}).divisors ==
              std::vector<mpz_class>{1, 1, 2, 6, 12, 36});
    }
}

TEST_CASE("local elimination matches the p-parts of the Smith form") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 12), cols = 1 + static_cast<int>(rng() % 12);
        auto m = random_matrix(rng, rows, cols, 4, 0.4);
        auto snf = smith_elementary_divisors(m);
        for (int p : {2, 3, 5}) {
            for (int e : {1, 2, 3, 5}) {
                auto loc = local_smith(m, static_cast<std::uint64_t>(p), e);
                std::vector<int> expected(static_cast<std::size_t>(e), 0);
                for (const auto& d : snf.divisors) {
                    int v = valuation(d, p);
                    if (v < e) ++expected[static_cast<std::size_t>(v)];
                }
                CHECK(loc.valuation_counts == expected);
            }
            CHECK(rank_mod_p(m, static_cast<std::uint64_t>(p)) == snf.rank() - snf.count_divisible(p));
        }
    }
}

TEST_CASE("local elimination with large moduli uses every arithmetic path") {
    std::mt19937_64 rng(3);
    auto m = scrambled_diagonal(rng, 12, 10, {1, 2, 4, 8, 16, 1024, 0});
    // 2^20 (lazy), 2^40 (single-word reduction), 2^61 (wide)
    for (int e : {20, 40, 61}) {
        auto loc = local_smith(m, 2, e);
        CHECK(loc.nonzero() == 6);
        CHECK(loc.valuation_counts[10] == 1);
    }
    CHECK_THROWS(local_smith(m, 2, 63));
}

TEST_CASE("rank certification") {
    std::mt19937_64 rng(5);
    auto m = scrambled_diagonal(rng, 10, 10, {1, 1, 3, 0});
    auto r = rational_rank(m, 3);
    CHECK(r.rank == 3);
    CHECK(r.certificate == "bound");
    CHECK(rational_rank(IntMatrix::identity(4)).certificate == "full");
    auto probe = probe_primes(3);
    CHECK(probe.size() == 3);
    for (auto p : probe) CHECK(is_prime(static_cast<std::int64_t>(p)));
}

TEST_CASE("divisor chains") {
    auto d = normalize_divisor_chain({6, 0, -4, 1});
    CHECK(d.divisors == std::vector<mpz_class>{1, 2, 12});
    CHECK(d.nontrivial().size() == 2);
    CHECK(parse_snf_strategy("modular") == SnfStrategy::modular);
    CHECK_THROWS(parse_snf_strategy("fast"));
}

TEST_CASE("bounded Smith form agrees with the integer engine") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 12), cols = 1 + static_cast<int>(rng() % 12);
        auto m = random_matrix(rng, rows, cols, 9, 0.5);
        auto exact = smith_elementary_divisors(m);
        mpz_class multiple = exact.divisors.empty() ? mpz_class(1) : exact.divisors.back();
        if (multiple.get_ui() % 2) multiple *= 2;  // the auxiliary prime is then odd
        CHECK(smith_elementary_divisors_bounded(m, multiple) == exact);
    }
    for (int trial = 0; trial < 20; ++trial) {
        auto m = scrambled_diagonal(rng, 14, 11, {1, 2, 6, 6, 24, 120, 720, 0, 0});
        CHECK(smith_elementary_divisors_bounded(m, 720).divisors == std::vector<mpz_class>{1, 2, 6, 6, 24, 120, 720});
    }
    // Non-unit pivots only.
    auto m = IntMatrix::from_rows({{4, 6, 0}, {6, 10, 2}, {0, 2, 8}});
    CHECK(smith_elementary_divisors_bounded(m, 1000) == smith_elementary_divisors(m));
}

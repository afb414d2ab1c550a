#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>

#include "specht/partition.hpp"

using namespace specht;

namespace {

// Branching rule: f^λ = Σ f^μ over μ obtained by removing a corner.
std::uint64_t branching_count(const Partition& lambda, std::map<Partition, std::uint64_t>& memo) {
    if (lambda.size() <= 1) return 1;
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const auto& mu : predecessors(lambda)) total += branching_count(mu, memo);
    return memo[lambda] = total;
}

bool contains(const Partition& big, const Partition& small) {
    for (int i = 0; i < small.length(); ++i) {
        if (small.part(i) > big.part(i)) return false;
    }
    return true;
}

// λ/μ is a rim hook: connected and without 2x2 squares.
bool is_rim_hook(const Partition& lambda, const Partition& mu) {
    std::set<std::pair<int, int>> cells;
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = mu.part(r); c < lambda.part(r); ++c) cells.insert({r, c});
    }
    for (auto [r, c] : cells) {
        if (cells.count({r + 1, c}) && cells.count({r, c + 1}) && cells.count({r + 1, c + 1})) return false;
    }
    std::set<std::pair<int, int>> seen{*cells.begin()};
    std::vector<std::pair<int, int>> stack{*cells.begin()};
    while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        for (auto nb : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}}) {
            if (cells.count(nb) && seen.insert(nb).second) stack.push_back(nb);
        }
    }
    return seen.size() == cells.size();
}

Partition core_by_hook_removal(Partition lambda, int p) {
    for (;;) {
        bool removed = false;
        if (lambda.size() >= p) {
            for (const auto& mu : partitions_of(lambda.size() - p)) {
                if (contains(lambda, mu) && is_rim_hook(lambda, mu)) {
                    lambda = mu;
                    removed = true;
                    break;
                }
            }
        }
        if (!removed) return lambda;
    }
}

}  // namespace

TEST_CASE("parse and print") {
    auto l = parse_partition("(3, 1^2)");
    CHECK(l.parts() == std::vector<int>{3, 1, 1});
    CHECK(l.to_string() == "3,1,1");
    CHECK(l.to_exponent_string() == "3,1^2");
    CHECK(parse_partition("4,2^2,1^3").size() == 11);
    CHECK(parse_partition("").empty());
    CHECK_THROWS_AS(parse_partition("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,0"), std::invalid_argument);
}

TEST_CASE("partition counts and ordering") {
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    for (int n = 0; n <= 20; ++n) {
        auto ps = partitions_of(n);
        CHECK(ps.size() == counts[static_cast<std::size_t>(n)]);
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].parts() < ps[i].parts());
    }
}

TEST_CASE("hook length formula matches branching rule") {
    std::map<Partition, std::uint64_t> memo;
    for (int n = 1; n <= 16; ++n) {
        for (const auto& l : partitions_of(n)) CHECK(standard_tableau_count(l) == branching_count(l, memo));
    }
    CHECK(standard_tableau_count(parse_partition("7,3,1")) == 550);
    CHECK(standard_tableau_count(parse_partition("5,3,3")) == 660);
}

TEST_CASE("conjugation is an involution") {
    for (int n = 0; n <= 12; ++n) {
        for (const auto& l : partitions_of(n)) {
            CHECK(l.conjugate().conjugate() == l);
            CHECK(l.conjugate().size() == n);
        }
    }
}

TEST_CASE("p-cores agree with rim hook removal") {
    for (int p : {2, 3, 5, 7}) {
        for (int n = 1; n <= 12; ++n) {
            for (const auto& l : partitions_of(n)) CHECK_MESSAGE(p_core(l, p) == core_by_hook_removal(l, p), l.to_string(), " p=", p);
        }
    }
}

TEST_CASE("successors and predecessors are inverse relations") {
    for (int n = 1; n <= 9; ++n) {
        for (const auto& l : partitions_of(n)) {
            for (const auto& s : successors(l)) {
                auto preds = predecessors(s);
                CHECK(std::find(preds.begin(), preds.end(), l) != preds.end());
            }
        }
    }
}

TEST_CASE("p-adic digits and containment") {
    auto d = PAdicDigits::of(23, 3);
    CHECK(d.digits == std::vector<int>{2, 1, 2});
    CHECK(d.value() == 23);
    CHECK(PAdicDigits::of(0, 5).top() == -1);
    CHECK(subset_p(0, 7, 2));
    CHECK(subset_p(1, 3, 2));
    CHECK(subset_p(1, 5, 2));
    CHECK(subset_p(2, 5, 3));
    CHECK_FALSE(subset_p(1, 5, 3));
    CHECK_FALSE(subset_p(3, 9, 3));
    CHECK_FALSE(subset_p(4, 5, 2));
    CHECK_FALSE(subset_p(2, 5, 2));
    CHECK(subset_p(3, 12, 3));  // 3 = (0,1), 12 = (0,1,1)
    CHECK_FALSE(subset_p(0, 0, 3));
}

TEST_CASE("primes") {
    CHECK(primes_up_to(20) == std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(is_prime(1'000'000'007));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("p-regularity") {
    CHECK(is_p_regular(parse_partition("3,1,1"), 3));
    CHECK_FALSE(is_p_regular(parse_partition("3,1,1"), 2));
}

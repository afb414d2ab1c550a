#include <doctest.h>

#include <stdexcept>

#include "specht/checks.hpp"
#include "specht/theory.hpp"

using namespace specht;

TEST_CASE("block membership") {
    for (int p : {3, 5, 7}) {
        for (int j = 0; j < p; ++j) {
            std::vector<int> hook{p - j};
            hook.insert(hook.end(), static_cast<std::size_t>(j), 1);
            CHECK(principal_block(Partition(hook), p));
        }
    }
    CHECK_FALSE(principal_block(parse_partition("3,2"), 5));
    CHECK_FALSE(principal_block(parse_partition("2,1"), 2));
    CHECK(principal_block(parse_partition("7"), 3));
    CHECK(candidate_primes(parse_partition("3,1^2")) == std::vector<int>{2, 5});
    CHECK(candidate_primes(parse_partition("5")) == std::vector<int>{2, 3, 5});
}

TEST_CASE("trivial submodule criterion") {
    for (int n = 2; n <= 12; ++n) {
        for (int p : primes_up_to(12)) {
            CHECK(trivial_submodule_criterion(Partition({n}), p));
            CHECK(trivial_submodule_criterion(Partition({n - 1, 1}), p) == (n % p == 0));
            CHECK(trivial_submodule_criterion(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), p) == (p == 2));
            CHECK_FALSE(cp1_membership(Partition({n}), p));
            CHECK(cp1_membership(Partition({n - 1, 1}), p) == (n % p == 0));
        }
    }
}

TEST_CASE("hook predictions") {
    auto a = hook_dims(5, 10, 2);
    CHECK(a.d0.value == 0);
    CHECK(a.d1.value == 1);
    CHECK(a.x2.bound == Bound::exact);
    CHECK(a.x2.value == 1);
    CHECK(hook_dims(3, 9, 5).d2.value == 1);
    CHECK(hook_dims(3, 9, 5).d2.bound == Bound::exact);
    CHECK(hook_dims(5, 10, 4).d2.value == 0);
    CHECK(hook_dims(3, 9, 3).d1.bound == Bound::at_most);
    CHECK_FALSE(hook_dims(3, 9, 3).d2.definite());
    CHECK_FALSE(hook_dims(3, 9, 4).d2.definite());
    CHECK(hook_dims(3, 9, 6).d2.bound == Bound::at_most);
    CHECK(hook_dims(3, 3, 1).d2.bound == Bound::at_most);
    CHECK_FALSE(hook_dims(5, 9, 2).d0.definite());  // p does not divide n
    CHECK_FALSE(hook_dims(2, 8, 2).d1.definite());
    CHECK_FALSE(hook_dims(5, 10, 9).d0.definite());
}

TEST_CASE("two-part composition series") {
    CHECK(two_part_comp_series(3, 9).label == 'c');
    CHECK(two_part_comp_series(3, 9).factors == std::vector<Partition>{Partition({8, 1}), Partition({6, 3})});
    CHECK(two_part_comp_series(3, 11).label == 'b');
    CHECK(two_part_comp_series(5, 14).label == 'a');
    CHECK(two_part_comp_series(3, 12).label == 'd');  // 13 = 1 + 1*3 + 1*9
    CHECK(two_part_comp_series(3, 12).factors.size() == 3);
    CHECK_THROWS_AS(two_part_comp_series(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(two_part_comp_series(2, 4), std::invalid_argument);
    auto d = two_part_dims(3, 9);
    CHECK(d.x2.value == 1);
    CHECK(d.d2.bound == Bound::at_least);
    auto b = two_part_dims(3, 11);
    CHECK(b.d0.value == 1);
    CHECK(b.d1.value == 1);
    CHECK(b.d2.value == 0);
    CHECK(two_part_dims(5, 14).x2.value == 0);
}

TEST_CASE("known groups and conjectures") {
    using G = std::vector<std::int64_t>;
    CHECK(known_integral(parse_partition("1^4")).h2.group == G{3});
    CHECK(known_integral(parse_partition("5,1")).h2.group == G{2});
    CHECK(known_integral(parse_partition("6,1")).h2.group.empty());
    CHECK(known_integral(parse_partition("6,1")).h1.group == G{7});
    CHECK(known_integral(parse_partition("7")).h1.group.empty());
    CHECK_FALSE(known_integral(parse_partition("3,2")).h2.definite());
    CHECK(conjecture_values(parse_partition("3,1^2")).group == G{10});
    CHECK(conjecture_values(parse_partition("4,1^2")).group == G{3});
    CHECK(conjecture_values(parse_partition("4,2,1")).group == G{2});
    CHECK(conjecture_values(parse_partition("4,2,1^3")).quantity == Quantity::membership);
    CHECK(conjecture_values(parse_partition("4,2,1^3")).conjecture);
    CHECK_FALSE(conjecture_values(parse_partition("3,3")).definite());
}

TEST_CASE("Bockstein bookkeeping") {
    auto ok = bockstein_report({}, {10}, {0, 1}, 5, parse_partition("3,1^2"));
    CHECK(ok.consistent);
    CHECK(ok.x2 == 1);
    auto bad = bockstein_report({}, {10}, {1, 1}, 5, parse_partition("3,1^2"));
    CHECK_FALSE(bad.consistent);
    auto triv = bockstein_report({}, {2}, {1, 1}, 2, parse_partition("4"), hook_dims(3, 9, 5).d2);
    CHECK(triv.consistent);
    REQUIRE(triv.x3.has_value());
    CHECK(*triv.x3 == 0);
}

TEST_CASE("prediction lists") {
    auto preds = predictions_for(parse_partition("6,3"), 3);
    bool saw_x2 = false;
    for (const auto& p : preds) {
        if (p.quantity == Quantity::x2 && p.source == "two-part-x2") saw_x2 = p.value == 1;
    }
    CHECK(saw_x2);
    Prediction p = hook_dims(3, 9, 6).d2;
    CHECK(p.admits(1));
    CHECK_FALSE(p.admits(2));
    CHECK(p.value_string() == "<= 1");
}

TEST_CASE("predictions agree with computation for n <= 8") {
    int agreed = 0;
    for (int n = 2; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto r = compute_cohomology(lambda);
            CHECK(structural_violations(r).empty());
            CHECK(bockstein_violations(r).empty());
            for (int p : primes_up_to(n)) {
                for (const auto& o : check_predictions(r, p)) {
                    INFO(lambda.to_string(), " p=", p, " ", to_string(o.prediction.quantity), " ", o.prediction.source, " predicted ",
                         o.prediction.value_string(), " actual ", o.actual);
                    CHECK(o.verdict != Verdict::violates);
                    if (o.verdict == Verdict::agrees) ++agreed;
                }
                CHECK(cp1_membership(lambda, p) == (r.h1.p_rank(p) > 0));
                if (!principal_block(lambda, p)) {
                    CHECK(r.h1.p_rank(p) == 0);
                    CHECK(r.h2.p_rank(p) == 0);
                }
            }
        }
    }
    CHECK(agreed > 500);
}

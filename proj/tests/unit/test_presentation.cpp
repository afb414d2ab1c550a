#include <doctest.h>

#include <stdexcept>

#include <set>

#include "specht/presentation.hpp"

using namespace specht;

namespace {

std::set<std::vector<int>> closure(const std::map<Generator, Permutation>& gens, int n) {
    std::set<std::vector<int>> seen{Permutation(n).images()};
    std::vector<Permutation> frontier{Permutation(n)};
    while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (const auto& [g, s] : gens) {
            auto y = s * x;
            if (seen.insert(y.images()).second) frontier.push_back(y);
        }
    }
    return seen;
}

IntMatrix permutation_matrix(const Permutation& s) {
    IntMatrix m(s.degree(), s.degree());
    for (int x = 1; x <= s.degree(); ++x) m(s(x) - 1, x - 1) = 1;
    return m;
}

}  // namespace

TEST_CASE("relator shapes") {
    CHECK(presentation_for(2).relator_count() == 1);
    CHECK(presentation_for(2).generator_count() == 1);
    for (int n = 3; n <= 12; ++n) {
        auto pres = presentation_for(n);
        CHECK(pres.generator_count() == 2);
        CHECK(pres.relator_count() == n / 2 + 2);
        CHECK(pres.relators[1].size() == static_cast<std::size_t>(n));
    }
    CHECK(to_string(presentation_for(4).relators[3]) == "abbabbabbabb");
    CHECK_THROWS_AS(presentation_for(1), std::invalid_argument);
}

TEST_CASE("relators evaluate to the identity") {
    for (int n = 2; n <= 12; ++n) CHECK(relator_check(n, kComposition));
}

TEST_CASE("relators hold under the opposite composition as well") {
    // Every relator is a power of a word whose evaluation under either order
    // has the required order, so the check does not distinguish them.
    for (int n = 3; n <= 8; ++n) CHECK(relator_check(n, Composition::left_to_right));
}

TEST_CASE("generators generate the full symmetric group") {
    std::size_t factorial = 1;
    for (int n = 2; n <= 7; ++n) {
        factorial *= static_cast<std::size_t>(n);
        CHECK(closure(standard_generators(n), n).size() == factorial);
    }
}

TEST_CASE("matrix evaluation follows the composition convention") {
    for (int n = 3; n <= 7; ++n) {
        auto gens = standard_generators(n);
        std::map<Generator, IntMatrix> mats;
        for (const auto& [g, s] : gens) mats.emplace(g, permutation_matrix(s));
        for (const auto& w : presentation_for(n).relators) {
            Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2 + 1));
            CHECK(evaluate_word(prefix, mats) == permutation_matrix(evaluate_word(prefix, gens, kComposition)));
        }
    }
}

TEST_CASE("permutations") {
    auto c = Permutation::cycle(4);
    CHECK(c(4) == 1);
    CHECK(c.sign() == -1);
    auto t = Permutation::transposition(4, 1, 2);
    CHECK((c * t)(1) == 3);
    CHECK((t * t).is_identity());
}

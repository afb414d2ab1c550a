#include "specht/theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

std::string to_string(Quantity q) {
    switch (q) {
        case Quantity::d0: return "d0";
        case Quantity::d1: return "d1";
        case Quantity::d2: return "d2";
        case Quantity::x1: return "x1";
        case Quantity::x2: return "x2";
        case Quantity::h1: return "H1";
        case Quantity::h2: return "H2";
        case Quantity::membership: return "membership";
    }
    return "?";
}

std::string to_string(Bound b) {
    switch (b) {
        case Bound::exact: return "exact";
        case Bound::at_most: return "at_most";
        case Bound::at_least: return "at_least";
        case Bound::unknown: return "unknown";
    }
    return "?";
}

bool Prediction::admits(std::int64_t actual) const {
    switch (bound) {
        case Bound::exact: return actual == value;
        case Bound::at_most: return actual <= value;
        case Bound::at_least: return actual >= value;
        case Bound::unknown: return true;
    }
    return true;
}

bool Prediction::admits(const std::vector<std::int64_t>& actual) const {
    return bound != Bound::exact || actual == group;
}

std::string Prediction::value_string() const {
    if (bound == Bound::unknown) return "unknown";
    std::string prefix = bound == Bound::at_most ? "<= " : bound == Bound::at_least ? ">= " : "";
    if (quantity == Quantity::h1 || quantity == Quantity::h2) {
        if (group.empty()) return prefix + "0";
        std::string out;
        for (auto d : group) out += (out.empty() ? "Z/" : " + Z/") + std::to_string(d);
        return prefix + out;
    }
    return prefix + std::to_string(value);
}

Prediction unknown_prediction(Quantity q, std::string source) {
    Prediction p;
    p.quantity = q;
    p.source = std::move(source);
    return p;
}

namespace {

Prediction exact(Quantity q, std::int64_t value, std::string source) {
    Prediction p;
    p.quantity = q;
    p.bound = Bound::exact;
    p.value = value;
    p.source = std::move(source);
    return p;
}

Prediction bounded(Quantity q, Bound b, std::int64_t value, std::string source) {
    auto p = exact(q, value, std::move(source));
    p.bound = b;
    return p;
}

Prediction group(Quantity q, std::vector<std::int64_t> divisors, std::string source) {
    auto p = exact(q, 0, std::move(source));
    p.group = std::move(divisors);
    return p;
}

std::int64_t ipow(std::int64_t p, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= p;
    return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

bool all_ones(const Partition& l) {
    return std::all_of(l.parts().begin(), l.parts().end(), [](int x) { return x == 1; });
}

}  // namespace

bool principal_block(const Partition& lambda, int p) { return p_core(lambda, p).length() <= 1; }

std::vector<int> candidate_primes(const Partition& lambda) {
    std::vector<int> out;
    for (int p : primes_up_to(lambda.size())) {
        if (principal_block(lambda, p)) out.push_back(p);
    }
    return out;
}

bool trivial_submodule_criterion(const Partition& lambda, int p) {
    for (int i = 0; i < lambda.length(); ++i) {
        const int next = lambda.part(i + 1);
        int z = 0;
        while (ipow(p, z) <= next) ++z;
        if (mod(lambda.part(i) + 1, ipow(p, z)) != 0) return false;
    }
    return true;
}

bool cp1_membership(const Partition& lambda, int p) { return !lambda.is_trivial_shape() && trivial_submodule_criterion(lambda, p); }

std::optional<int> hook_leg(const Partition& lambda) {
    for (int i = 1; i < lambda.length(); ++i) {
        if (lambda.part(i) != 1) return std::nullopt;
    }
    return lambda.length() - 1;
}

DimPredictions hook_dims(int p, int n, int j) {
    const std::string tag = "hook";
    DimPredictions out{unknown_prediction(Quantity::d0, tag), unknown_prediction(Quantity::d1, tag), unknown_prediction(Quantity::d2, tag),
                       unknown_prediction(Quantity::x2, tag)};
    if (p == 2 || !is_prime(p) || n % p != 0 || j < 1 || j > n - 2 || (p == 3 && n == 3 && j == 2)) return out;

    out.d0 = exact(Quantity::d0, j == 1 ? 1 : 0, "hook-d0");

    if (p == 3 && j == 3) {
        out.d1 = bounded(Quantity::d1, Bound::at_most, 1, "hook-d1");
    } else {
        out.d1 = exact(Quantity::d1, (j == 1 || j == 2 || (p == 3 && j == 4)) ? 1 : 0, "hook-d1");
    }

    if (p > 3) {
        out.d2 = exact(Quantity::d2, (j == 2 || j == 3) ? 1 : 0, "hook-d2");
    } else if (j >= 8 || (n > 3 && j == 1)) {
        out.d2 = exact(Quantity::d2, 0, "hook-d2");
    } else if (j == 6 || (n == 3 && j == 1)) {
        out.d2 = bounded(Quantity::d2, Bound::at_most, 1, "hook-d2");
    } else if (j == 2 || j == 5 || j == 7) {
        out.d2 = exact(Quantity::d2, 1, "hook-d2");
    }

    // x_2 = d_1 − d_0 for λ ≠ (n).
    if (out.d0.bound == Bound::exact && out.d1.bound == Bound::exact) {
        out.x2 = exact(Quantity::x2, out.d1.value - out.d0.value, "hook-x2");
    }
    return out;
}

TwoPartSeries two_part_comp_series(int p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("two_part_comp_series: p must be prime");
    if (n < 2 * p) throw std::invalid_argument("two_part_comp_series: needs n >= 2p");
    if (p == 2 && n <= 4) throw std::invalid_argument("two_part_comp_series: needs n > 4 for p = 2");
    const int j = static_cast<int>(mod(n + 1, p));
    const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
    const Partition top({n - p, p});
    const Partition trivial({n});
    TwoPartSeries s;
    if (j == 0) {
        if (mod(n + 1, p2) != p) {
            s.label = 'a';
            s.factors = {top};
        } else {
            s.label = 'b';
            s.factors = {trivial, top};
        }
    } else {
        const Partition low({n - j, j});
        if (mod(n + 1, p2) != p + j) {
            s.label = 'c';
            s.factors = {low, top};
        } else {
            s.label = 'd';
            s.factors = {low, trivial, top};
        }
    }
    return s;
}

DimPredictions two_part_dims(int p, int n) {
    const std::string tag = "two-part";
    DimPredictions out{unknown_prediction(Quantity::d0, tag), unknown_prediction(Quantity::d1, tag), unknown_prediction(Quantity::d2, tag),
                       unknown_prediction(Quantity::x2, tag)};
    if (p == 2 || !is_prime(p) || n < 2 * p) return out;
    const int j = static_cast<int>(mod(n + 1, p));
    const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
    if (j == 0) {
        const int v = mod(n + 1, p2) == p ? 1 : 0;
        out.d0 = exact(Quantity::d0, v, "two-part-d0");
        out.d1 = exact(Quantity::d1, v, "two-part-d1");
        out.d2 = exact(Quantity::d2, 0, "two-part-d2");
        out.x2 = exact(Quantity::x2, 0, "two-part-x2");
    } else {
        out.d0 = exact(Quantity::d0, 0, "two-part-d0");
        out.d1 = exact(Quantity::d1, 1, "two-part-d1");
        out.d2 = bounded(Quantity::d2, Bound::at_least, 1, "two-part-d2");
        out.x2 = exact(Quantity::x2, 1, "two-part-x2");
    }
    return out;
}

GroupPredictions known_integral(const Partition& lambda) {
    const int n = lambda.size();
    GroupPredictions out{unknown_prediction(Quantity::h1, "known"), unknown_prediction(Quantity::h2, "known")};
    if (n < 2) return out;
    if (lambda.is_trivial_shape()) {
        out.h1 = group(Quantity::h1, {}, "known-trivial");
        out.h2 = group(Quantity::h2, {2}, "known-trivial");
    } else if (all_ones(lambda)) {
        out.h1 = group(Quantity::h1, {2}, "known-sign");
        out.h2 = group(Quantity::h2, (n == 3 || n == 4) ? std::vector<std::int64_t>{3} : std::vector<std::int64_t>{}, "known-sign");
    } else if (lambda == Partition({n - 1, 1})) {
        out.h1 = group(Quantity::h1, {n}, "known-natural");
        out.h2 = group(Quantity::h2, n % 2 == 0 ? std::vector<std::int64_t>{2} : std::vector<std::int64_t>{}, "known-natural");
    }
    return out;
}

Prediction conjecture_values(const Partition& lambda) {
    const int n = lambda.size();
    auto cyclic = [](std::int64_t order, std::string source) {
        auto p = group(Quantity::h2, order > 1 ? std::vector<std::int64_t>{order} : std::vector<std::int64_t>{}, std::move(source));
        p.conjecture = true;
        return p;
    };
    if (n >= 4 && lambda == Partition({n - 2, 1, 1})) return cyclic(n % 2 ? 2 * n : n / 2, "conjecture-(n-2,1^2)");
    if (n >= 5 && lambda == Partition({n - 3, 2, 1})) return cyclic((n - 1) % 3 ? n - 1 : (n - 1) / 3, "conjecture-(n-3,2,1)");
    if (lambda.length() >= 2 && lambda.part(0) % 2 == 0 && lambda.part(1) == 2 &&
        std::all_of(lambda.parts().begin() + 2, lambda.parts().end(), [](int x) { return x == 1; })) {
        auto p = exact(Quantity::membership, 1, "conjecture-(2l,2,1^q)");
        p.conjecture = true;
        return p;
    }
    return unknown_prediction(Quantity::h2, "conjecture");
}

BocksteinReport bockstein_report(const std::vector<std::int64_t>& h1, const std::vector<std::int64_t>& h2, std::pair<int, int> dims, int p,
                                 const Partition& lambda, const std::optional<Prediction>& d2) {
    BocksteinReport r;
    auto count = [p](const std::vector<std::int64_t>& ds) {
        return static_cast<int>(std::count_if(ds.begin(), ds.end(), [p](std::int64_t d) { return d % p == 0; }));
    };
    r.x1 = count(h1);
    r.x2 = count(h2);
    const int free_rank = lambda.is_trivial_shape() ? 1 : 0;
    const auto [d0, d1] = dims;
    if (d0 != free_rank + r.x1) {
        r.consistent = false;
        r.violations.push_back("d0=" + std::to_string(d0) + " but x1=" + std::to_string(r.x1) + (free_rank ? " (+1 free)" : ""));
    }
    if (d1 != r.x1 + r.x2) {
        r.consistent = false;
        r.violations.push_back("d1=" + std::to_string(d1) + " but x1+x2=" + std::to_string(r.x1 + r.x2));
    }
    if (d2 && d2->bound == Bound::exact) r.x3 = static_cast<int>(d2->value) - d1 + d0 - free_rank;
    return r;
}

std::vector<Prediction> predictions_for(const Partition& lambda, int p) {
    std::vector<Prediction> out;
    const int n = lambda.size();
    const bool principal = principal_block(lambda, p);
    out.push_back(exact(Quantity::membership, principal ? 1 : 0, "principal-block"));
    if (!principal) {
        for (auto q : {Quantity::d0, Quantity::d1, Quantity::x1, Quantity::x2}) out.push_back(exact(q, 0, "non-principal-block"));
    }
    out.push_back(exact(Quantity::d0, trivial_submodule_criterion(lambda, p) ? 1 : 0, "trivial-submodule"));
    out.push_back(exact(Quantity::x1, cp1_membership(lambda, p) ? 1 : 0, "cp1-membership"));

    auto add_dims = [&](const DimPredictions& d) {
        for (const auto* q : {&d.d0, &d.d1, &d.d2, &d.x2}) {
            if (q->definite()) out.push_back(*q);
        }
    };
    if (auto j = hook_leg(lambda); j && p != 2 && n % p == 0) add_dims(hook_dims(p, n, *j));
    if (p != 2 && lambda.length() == 2 && lambda.part(1) == p && n >= 2 * p) add_dims(two_part_dims(p, n));

    const auto known = known_integral(lambda);
    if (known.h1.definite()) out.push_back(known.h1);
    if (known.h2.definite()) out.push_back(known.h2);
    if (auto c = conjecture_values(lambda); c.definite()) out.push_back(c);
    return out;
}

}  // namespace specht

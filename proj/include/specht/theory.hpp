#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specht/partition.hpp"

namespace specht {

enum class Quantity { d0, d1, d2, x1, x2, h1, h2, membership };
std::string to_string(Quantity q);

/// exact: value is the quantity; at_most / at_least: one-sided bound;
/// unknown: no statement.
enum class Bound { exact, at_most, at_least, unknown };
std::string to_string(Bound b);

struct Prediction {
    Quantity quantity = Quantity::d0;
    Bound bound = Bound::unknown;
    /// Numeric value (d_i, x_i, 0/1 for membership).
    std::int64_t value = 0;
    /// Nontrivial elementary divisors, for H1 and H2 predictions.
    std::vector<std::int64_t> group;
    /// Which rule produced the prediction, e.g. "hook-d2" or "known-sign".
    std::string source;
    bool conjecture = false;

    bool definite() const { return bound != Bound::unknown; }
    /// Numeric check; unknown predictions accept everything.
    bool admits(std::int64_t actual) const;
    /// Group check for H1/H2 predictions.
    bool admits(const std::vector<std::int64_t>& actual) const;
    std::string value_string() const;
};

Prediction unknown_prediction(Quantity q, std::string source);

/// p-core has at most one row.
bool principal_block(const Partition& lambda, int p);
/// Primes p <= n with λ in the principal p-block; only these can divide the
/// order of H¹ or H².
std::vector<int> candidate_primes(const Partition& lambda);

/// λ_i ≡ −1 mod p^{z_i} for every row i, where z_i is the least r with
/// p^r > λ_{i+1}. Holds iff S^λ over F_p has a trivial submodule, i.e. d_0 = 1.
bool trivial_submodule_criterion(const Partition& lambda, int p);
/// p divides |H¹(Σ_n, S^λ_Z)|: λ ≠ (n) and the trivial submodule criterion.
bool cp1_membership(const Partition& lambda, int p);

struct DimPredictions {
    Prediction d0, d1, d2, x2;
};

/// λ = (n−j, 1^j) with p odd, p | n, 1 <= j <= n−2 (and j != 2 when
/// p = 3 = n). Outside these hypotheses every entry is unknown.
DimPredictions hook_dims(int p, int n, int j);

struct TwoPartSeries {
    char label = '?';
    /// Composition factors D^μ from bottom to top, given by μ.
    std::vector<Partition> factors;
};

/// Composition series of S^(n−p,p) over F_p, n >= 2p, with j ≡ n+1 mod p;
/// p = 2 additionally needs n > 4. Throws std::invalid_argument otherwise.
TwoPartSeries two_part_comp_series(int p, int n);

/// d_0, d_1, d_2 (and x_2) for λ = (n−p,p) with p odd and n >= 2p; unknown
/// otherwise.
DimPredictions two_part_dims(int p, int n);

struct GroupPredictions {
    Prediction h1, h2;
};

/// Closed forms for (n), (1^n) and (n−1,1); unknown for other shapes.
GroupPredictions known_integral(const Partition& lambda);

/// Conjectured H² for (n−2,1²) (n >= 4) and (n−3,2,1) (n >= 5); for
/// (2l,2,1^q) the conjectured membership in C_2² (quantity membership,
/// value 1). Unknown for other shapes.
Prediction conjecture_values(const Partition& lambda);

struct BocksteinReport {
    bool consistent = true;
    std::vector<std::string> violations;
    int x1 = 0;
    int x2 = 0;
    /// d_2 − d_1 + d_0 − (free rank of H⁰) when d_2 is predicted exactly.
    std::optional<int> x3;
};

/// Checks d_0 = x_1 (plus the free rank of H⁰ for λ = (n)) and
/// d_1 = x_1 + x_2 at p, with x_i the number of divisors divisible by p.
BocksteinReport bockstein_report(const std::vector<std::int64_t>& h1, const std::vector<std::int64_t>& h2, std::pair<int, int> dims, int p,
                                 const Partition& lambda, const std::optional<Prediction>& d2 = std::nullopt);

/// Every applicable prediction for (λ, p): block, trivial submodule, C_p¹
/// membership, hook and two-part dimensions, known groups and conjectures.
std::vector<Prediction> predictions_for(const Partition& lambda, int p);

/// j when λ = (n−j, 1^j).
std::optional<int> hook_leg(const Partition& lambda);

}  // namespace specht

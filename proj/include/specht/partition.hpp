#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace specht {

/// A partition of a nonnegative integer: weakly decreasing positive parts.
/// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }              ///< n, the number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// λ_i with 0-based index; 0 past the last row.
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    /// True for the one-row partition (n), including the empty partition.
    bool is_trivial_shape() const { return parts_.size() <= 1; }
    /// Conjugate partition (column lengths).
    Partition conjugate() const;

    /// "3,1,1"; the empty partition prints as "".
    std::string to_string() const;
    /// "3,1^2", as used in the golden tables.
    std::string to_exponent_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Parses "3,1^2", "3,1,1", "(3, 1^2)" or "" (empty partition).
/// Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

/// All partitions of n in lexicographically increasing order of the part
/// sequence: (1^n), (2,1^(n-2)), ..., (n).
std::vector<Partition> partitions_of(int n);

/// Number of standard Young tableaux of shape λ (hook length formula);
/// equals the rank of the integral Specht module. Empty shape gives 1.
std::uint64_t standard_tableau_count(const Partition& lambda);

/// Hook length of box (row, col), 0-based.
int hook_length(const Partition& lambda, int row, int col);

/// p-core via the abacus on first-column hook lengths.
Partition p_core(const Partition& lambda, int p);

/// Partitions obtained by adding one box (λ+), sorted.
std::vector<Partition> successors(const Partition& lambda);
/// Partitions obtained by removing one box (λ-), sorted.
std::vector<Partition> predecessors(const Partition& lambda);

/// No part value occurs p or more times.
bool is_p_regular(const Partition& lambda, int p);

/// Base-p digits of a nonnegative integer, least significant first, no
/// trailing zeros (the value 0 has no digits).
struct PAdicDigits {
    int base = 2;
    std::vector<int> digits;

    static PAdicDigits of(std::int64_t value, int base);
    std::int64_t value() const;
    /// Index of the most significant digit; -1 for zero.
    int top() const { return static_cast<int>(digits.size()) - 1; }
    int digit(int i) const { return i < static_cast<int>(digits.size()) ? digits[static_cast<std::size_t>(i)] : 0; }
};

/// The digit containment relation a ⊂_p b used for two-part composition
/// factors: a has fewer p-adic digits than b and every digit of a is either 0
/// or the matching digit of b. a = 0 is contained in every b ≥ 1.
bool subset_p(std::int64_t a, std::int64_t b, int p);

bool is_prime(std::int64_t x);
std::vector<int> primes_up_to(int n);

}  // namespace specht

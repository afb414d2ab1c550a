#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specht/int_matrix.hpp"

namespace specht {

/// Smith normal form over the integers by dense elimination.
///
/// Pivot rule: smallest nonzero absolute value of the remaining block. The
/// elimination runs on 64-bit entries and continues in GMP integers from the
/// current state as soon as an operation would overflow. The diagonal is put
/// into divisibility-chain form at the end.
ElemDivisors smith_elementary_divisors(const IntMatrix& m);

/// Smith form of a matrix whose nonzero elementary divisors are known to
/// divide `multiple`. Works over Z/N with N = multiple·q, q the least prime
/// not dividing `multiple`, so entries stay bounded; a divisor d of the matrix
/// shows up as gcd(d, N), which is d for the nonzero ones and N for zeros.
/// Falls back to smith_elementary_divisors when N needs more than 62 bits.
ElemDivisors smith_elementary_divisors_bounded(const IntMatrix& m, const mpz_class& multiple);

/// Outcome of elimination over Z/p^e. Pivots are taken on entries of minimal
/// p-valuation, so `valuation_counts[v]` is the number of elementary divisors
/// of exact p-valuation v (v < e). Divisors of valuation >= e and zero
/// divisors are indistinguishable here and are not counted.
struct LocalSmith {
    std::uint64_t prime = 0;
    int exponent = 0;
    std::vector<int> valuation_counts;

    /// Number of divisors not divisible by p^e.
    int nonzero() const;
    /// Rank of the matrix over the field with p elements.
    int rank_mod_p() const { return valuation_counts.empty() ? 0 : valuation_counts.front(); }
};

/// Elimination over Z/p^e; requires p^e < 2^62.
LocalSmith local_smith(const IntMatrix& m, std::uint64_t p, int exponent);

/// Rank over F_p by Gaussian elimination mod p (p < 2^62 prime).
int rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Exact rank over Q by fraction-free (Bareiss) elimination in GMP integers.
int bareiss_rank(const IntMatrix& m);

struct RankResult {
    int rank = 0;
    /// How the value was certified: "full", "bound" (matches a supplied upper
    /// bound) or "bareiss".
    std::string certificate;
};

/// Rank over Q: the maximum of rank_mod_p over three pseudo-random 30-bit
/// primes, accepted when it reaches min(rows, cols) or the supplied upper
/// bound; otherwise recomputed exactly by Bareiss elimination.
RankResult rational_rank(const IntMatrix& m, std::optional<int> upper_bound = std::nullopt);

/// Deterministic sequence of 30-bit primes used for rank probing.
std::vector<std::uint64_t> probe_primes(int count);

/// The p-parts of the nonzero elementary divisors, as valuations sorted
/// ascending (exactly `rank` entries, zeros included).
///
/// Eliminates over Z/p^e starting at `start_exponent` and raises e until the
/// number of divisors not divisible by p^e equals `rank`, which certifies
/// that every valuation has been seen. Throws std::runtime_error if p^e would
/// exceed 62 bits first.
std::vector<int> p_part_valuations(const IntMatrix& m, int p, int rank, int start_exponent = 1);

/// Same, returned as the multiset of prime powers p^v.
std::vector<mpz_class> p_part_elementary_divisors(const IntMatrix& m, int p, int rank, int start_exponent = 1);

/// Assembles divisors from per-prime valuations: the i-th largest divisor is
/// the product over primes of the i-th largest prime power.
ElemDivisors assemble_from_p_parts(int rank, const std::map<int, std::vector<int>>& valuations);

enum class SnfStrategy { automatic, dense, modular };

SnfStrategy parse_snf_strategy(const std::string& name);
std::string to_string(SnfStrategy s);

struct SnfOptions {
    SnfStrategy strategy = SnfStrategy::automatic;
    /// rows*cols at or below which `automatic` picks dense elimination.
    std::int64_t dense_threshold = 4'000'000;
};

}  // namespace specht

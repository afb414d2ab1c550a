#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "specht/graph.hpp"
#include "specht/partition.hpp"

namespace specht {

/// One row of the H² reference table.
struct GoldenRow {
    enum class Kind { exact, primes, unknown };

    int n = 0;
    Partition lambda;
    std::int64_t k = 0;
    Kind kind = Kind::exact;
    /// exact: nontrivial elementary divisors (empty for "1"); primes: the
    /// prime divisors listed in brackets; unknown: empty.
    std::vector<std::int64_t> values;
    std::string raw;
    int line = 0;
};

/// TSV with columns n, lambda, k, divisors. Blank lines and lines starting
/// with '#' are ignored, as is a header line starting with "n\t". Divisors are
/// a comma list ("1" for the trivial group), "(p,q)" when only the prime
/// divisors are known, or "?".
class GoldenTable {
public:
    /// Throws std::runtime_error naming the line on malformed input.
    static GoldenTable parse(std::istream& in, const std::string& source = "<input>");
    static GoldenTable load(const std::string& path);

    const std::vector<GoldenRow>& rows() const { return rows_; }
    const GoldenRow* find(const Partition& lambda) const;

private:
    std::vector<GoldenRow> rows_;
};

struct GoldenMismatch {
    Partition lambda;
    std::string field;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    int rows = 0;
    int exact_matched = 0;
    int primes_matched = 0;
    int unknown_skipped = 0;
    int not_computed = 0;
    std::vector<GoldenMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Compares the rows with min_n <= n <= max_n against computed results. k is
/// compared whenever a result exists, including "?" rows. Exact rows compare
/// the nontrivial divisor list; bracketed rows require the computed prime set
/// to equal the bracketed primes. Results whose p-parts are known only at some
/// primes are compared at those primes.
VerifyReport verify_against(const GoldenTable& table, const ResultIndex& results, int min_n = 0, int max_n = 1 << 30);

/// "2,18", "1" for none.
std::string divisor_list(const std::vector<mpz_class>& ds);

}  // namespace specht

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specht/int_matrix.hpp"
#include "specht/linalg.hpp"
#include "specht/partition.hpp"
#include "specht/presentation.hpp"
#include "specht/specht_rep.hpp"

namespace specht {

/// Coboundary and cocycle matrices of a representation of a finitely
/// presented group.
///
/// Bmat stacks ρ(x) − I over the generators (g·k × k). Zmat has one k-row
/// block per relator w = x_1...x_m; its column block for generator y is the
/// sum of ρ(x_1...x_{i-1}) over the positions with x_i = y. A 1-cochain f
/// (the column vector of f(x) over generators) is a cocycle iff Zmat·f = 0,
/// and Zmat·Bmat = 0.
struct ZassenhausSystem {
    Partition lambda;
    int g = 0;
    int k = 0;
    IntMatrix bmat;
    IntMatrix zmat;
};

/// Throws std::invalid_argument on size mismatches and std::logic_error when
/// Zmat·Bmat is not zero.
ZassenhausSystem build_system(const Presentation& pres, const std::map<Generator, IntMatrix>& rho, const Partition& lambda = {});
ZassenhausSystem build_system(const SpechtRep& rep);

/// Z_λ·B_λ computed exactly.
bool cocycle_identity_holds(const ZassenhausSystem& sys);

enum class Provenance { computed, predicted, golden };
std::string to_string(Provenance p);

/// Isomorphism type of one cohomology group H^degree(Σ_n, S^λ_Z).
struct CohomologyRecord {
    Partition lambda;
    int degree = 0;
    /// Degree 0: free rank of the fixed points ("Z" when 1). Degrees 1 and 2:
    /// the nontrivial elementary divisors; nullopt when not computed.
    std::optional<std::vector<mpz_class>> divisors;
    int free_rank = 0;
    /// prime -> dim H^degree over F_p (degrees 0 and 1 only).
    std::map<int, int> modp_dims;
    Provenance provenance = Provenance::computed;

    bool computed() const { return divisors.has_value(); }
    /// "Z", "0", "Z/10", "Z/2 + Z/6" or "not computed".
    std::string type_string() const;
    /// Number of divisors divisible by p (x_degree at p).
    int p_rank(int p) const;
};

struct CohomologyOptions {
    SnfOptions snf;
    /// Primes used for p-parts and mod-p dimensions; empty means every prime <= n.
    std::vector<int> primes;
    /// Skip λ when rows·cols of Zmat exceeds this; 0 means no limit.
    std::int64_t size_limit = 0;
    /// Worker threads for per-prime eliminations.
    int threads = 1;
};

/// Everything computed for one λ.
struct CohomologyResult {
    Partition lambda;
    int n = 0;
    int k = 0;
    int g = 0;
    /// "ok" or "skipped" (size limit).
    std::string status = "ok";
    /// Route actually used: "trivial", "dense" or "modular".
    std::string strategy;
    std::int64_t zmat_rows = 0;
    std::int64_t zmat_cols = 0;
    int rank_b = 0;
    int rank_z = 0;
    /// How rank_z was certified.
    std::string rank_certificate;
    /// Primes at which mod-p dimensions (and, on the modular route, p-parts)
    /// were determined.
    std::vector<int> primes;
    /// False when the modular route only determined the p-parts at `primes`
    /// and these do not cover every prime <= n.
    bool complete = true;
    double seconds = 0;
    CohomologyRecord h0, h1, h2;

    const CohomologyRecord& degree(int i) const;
    /// (d_0, d_1) at p if computed.
    std::optional<std::pair<int, int>> dims(int p) const;
};

/// Full pipeline for one λ: representation, matrices, elementary divisors of
/// B_λ and Z_λ, and mod-p dimensions at the chosen primes.
///
/// H¹ is given by the elementary divisors of B_λ (trivial for λ = (n)), H² by
/// the nonzero elementary divisors of Z_λ. d_0 = k − rank_p(B_λ) and
/// d_1 = g·k − rank_p(Z_λ) − rank_p(B_λ). For n <= 1 all positive degrees are
/// trivial. On the modular route the p-part of a divisor is determined only
/// for the chosen primes; with the default (every prime <= n) this is exact
/// since the divisors divide n!.
CohomologyResult compute_cohomology(const Partition& lambda, const CohomologyOptions& options = {});

/// Same, from an already built system (used for basis-change checks).
CohomologyResult compute_cohomology(const ZassenhausSystem& sys, const CohomologyOptions& options = {});

CohomologyRecord h1_integral(const Partition& lambda, const CohomologyOptions& options = {});
/// `prime_hints` restricts the primes whose p-parts are determined on the
/// modular route; empty means every prime <= n.
CohomologyRecord h2_integral(const Partition& lambda, const std::vector<int>& prime_hints = {}, const CohomologyOptions& options = {});
std::pair<int, int> dims_mod_p(const Partition& lambda, int p);

/// p-adic valuation of n!.
int factorial_valuation(int n, int p);

}  // namespace specht

#pragma once

#include <string>
#include <vector>

#include "specht/theory.hpp"
#include "specht/zassenhaus.hpp"

namespace specht {

enum class Verdict { agrees, violates, not_checkable };
std::string to_string(Verdict v);

/// Compares one prediction for (λ, p) with a computed result. d_2 is never
/// computed; d_0 and d_1 need mod-p dimensions at p; group predictions need
/// the corresponding degree. The principal-block membership entry is a
/// filter whose consequences are separate predictions, so it is not checked
/// itself.
Verdict check_prediction(const Prediction& pred, const CohomologyResult& result, int p);

struct PredictionOutcome {
    Prediction prediction;
    int p = 0;
    Verdict verdict = Verdict::not_checkable;
    std::string actual;
};

/// All predictions_for(λ, p) with verdicts.
std::vector<PredictionOutcome> check_predictions(const CohomologyResult& result, int p);

/// Z·B = 0 (when the system is given), rank(Z) + rank(B) = g·k, rank(B) = k
/// and rank(Z) = (g−1)·k for λ ≠ (n) with n >= 3, every nontrivial divisor
/// divides n!. Returns the violations.
std::vector<std::string> structural_violations(const CohomologyResult& result);
std::vector<std::string> structural_violations(const CohomologyResult& result, const ZassenhausSystem& sys);

/// Bockstein bookkeeping at every prime with computed dimensions.
std::vector<std::string> bockstein_violations(const CohomologyResult& result);

/// Divisors as int64 (throws std::overflow_error if one does not fit).
std::vector<std::int64_t> small_divisors(const CohomologyRecord& rec);

}  // namespace specht

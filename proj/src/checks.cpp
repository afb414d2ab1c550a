#include "specht/checks.hpp"

#include <stdexcept>

namespace specht {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::agrees: return "agrees";
        case Verdict::violates: return "violates";
        case Verdict::not_checkable: return "not-checkable";
    }
    return "?";
}

std::vector<std::int64_t> small_divisors(const CohomologyRecord& rec) {
    std::vector<std::int64_t> out;
    if (!rec.divisors) return out;
    for (const auto& d : *rec.divisors) {
        if (!d.fits_slong_p()) throw std::overflow_error("small_divisors: divisor exceeds 64 bits");
        out.push_back(d.get_si());
    }
    return out;
}

namespace {

std::string actual_value(const Prediction& pred, const CohomologyResult& r, int p) {
    switch (pred.quantity) {
        case Quantity::d0:
        case Quantity::d1: {
            auto d = r.dims(p);
            if (!d) return "not computed";
            return std::to_string(pred.quantity == Quantity::d0 ? d->first : d->second);
        }
        case Quantity::d2: return "not computed";
        case Quantity::x1: return r.h1.computed() ? std::to_string(r.h1.p_rank(p)) : "not computed";
        case Quantity::x2: return r.h2.computed() ? std::to_string(r.h2.p_rank(p)) : "not computed";
        case Quantity::h1: return r.h1.type_string();
        case Quantity::h2: return r.h2.type_string();
        case Quantity::membership:
            if (pred.source == "principal-block") return pred.value ? "principal" : "non-principal";
            return r.h2.computed() ? std::to_string(r.h2.p_rank(2)) : "not computed";
    }
    return "?";
}

Verdict numeric(const Prediction& pred, std::optional<std::int64_t> actual) {
    if (!actual) return Verdict::not_checkable;
    return pred.admits(*actual) ? Verdict::agrees : Verdict::violates;
}

}  // namespace

Verdict check_prediction(const Prediction& pred, const CohomologyResult& r, int p) {
    if (!pred.definite() || r.status != "ok") return Verdict::not_checkable;
    auto rank_of = [&](const CohomologyRecord& rec, int q) -> std::optional<std::int64_t> {
        if (!rec.computed()) return std::nullopt;
        return rec.p_rank(q);
    };
    switch (pred.quantity) {
        case Quantity::d0:
        case Quantity::d1: {
            auto d = r.dims(p);
            if (!d) return Verdict::not_checkable;
            return numeric(pred, pred.quantity == Quantity::d0 ? d->first : d->second);
        }
        case Quantity::d2: return Verdict::not_checkable;
        case Quantity::x1: return numeric(pred, rank_of(r.h1, p));
        case Quantity::x2: return numeric(pred, rank_of(r.h2, p));
        case Quantity::h1:
        case Quantity::h2: {
            const auto& rec = pred.quantity == Quantity::h1 ? r.h1 : r.h2;
            if (!rec.computed() || !r.complete) return Verdict::not_checkable;
            return pred.admits(small_divisors(rec)) ? Verdict::agrees : Verdict::violates;
        }
        case Quantity::membership: {
            if (pred.source == "principal-block") return Verdict::not_checkable;
            auto x = rank_of(r.h2, 2);
            if (!x) return Verdict::not_checkable;
            return ((*x > 0) == (pred.value == 1)) ? Verdict::agrees : Verdict::violates;
        }
    }
    return Verdict::not_checkable;
}

std::vector<PredictionOutcome> check_predictions(const CohomologyResult& result, int p) {
    std::vector<PredictionOutcome> out;
    for (auto& pred : predictions_for(result.lambda, p)) {
        PredictionOutcome o;
        o.verdict = check_prediction(pred, result, p);
        o.actual = actual_value(pred, result, p);
        o.p = p;
        o.prediction = std::move(pred);
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<std::string> structural_violations(const CohomologyResult& r) {
    std::vector<std::string> out;
    if (r.status != "ok" || r.n <= 1) return out;
    const std::string tag = "(" + r.lambda.to_string() + "): ";
    if (r.rank_b + r.rank_z != r.g * r.k) {
        out.push_back(tag + "rank(Z)+rank(B)=" + std::to_string(r.rank_b + r.rank_z) + " != g*k=" + std::to_string(r.g * r.k));
    }
    if (!r.lambda.is_trivial_shape() && r.n >= 3) {
        if (r.rank_b != r.k) out.push_back(tag + "rank(B)=" + std::to_string(r.rank_b) + " != k=" + std::to_string(r.k));
        if (r.rank_z != (r.g - 1) * r.k) out.push_back(tag + "rank(Z)=" + std::to_string(r.rank_z) + " != (g-1)k");
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(r.n));
    for (const auto* rec : {&r.h1, &r.h2}) {
        if (!rec->divisors) continue;
        for (const auto& d : *rec->divisors) {
            if (!mpz_divisible_p(fact.get_mpz_t(), d.get_mpz_t())) {
                out.push_back(tag + "H" + std::to_string(rec->degree) + " divisor " + d.get_str() + " does not divide n!");
            }
        }
    }
    return out;
}

std::vector<std::string> structural_violations(const CohomologyResult& r, const ZassenhausSystem& sys) {
    auto out = structural_violations(r);
    if (!cocycle_identity_holds(sys)) out.insert(out.begin(), "(" + r.lambda.to_string() + "): Z*B != 0");
    return out;
}

std::vector<std::string> bockstein_violations(const CohomologyResult& r) {
    std::vector<std::string> out;
    if (r.status != "ok" || !r.h1.computed() || !r.h2.computed()) return out;
    for (int p : r.primes) {
        auto d = r.dims(p);
        if (!d) continue;
        auto rep = bockstein_report(small_divisors(r.h1), small_divisors(r.h2), *d, p, r.lambda);
        for (const auto& v : rep.violations) out.push_back("(" + r.lambda.to_string() + ") p=" + std::to_string(p) + ": " + v);
    }
    return out;
}

}  // namespace specht

#include "specht/store.hpp"

#include <fstream>
#include <stdexcept>

namespace specht {

namespace {

nlohmann::ordered_json divisor_json(const mpz_class& d) {
    if (d.fits_slong_p()) return d.get_si();
    return d.get_str();
}

mpz_class divisor_from(const nlohmann::json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(static_cast<long>(j.get<std::int64_t>()));
}

}  // namespace

std::vector<nlohmann::ordered_json> to_records(const CohomologyResult& r, const std::string& version) {
    std::vector<nlohmann::ordered_json> out;
    for (int deg = 0; deg <= 2; ++deg) {
        const auto& rec = r.degree(deg);
        nlohmann::ordered_json j;
        j["version"] = version;
        j["n"] = r.n;
        j["lambda"] = r.lambda.to_exponent_string();
        j["degree"] = deg;
        j["k"] = r.k;
        j["g"] = r.g;
        j["status"] = r.status;
        j["strategy"] = r.strategy;
        j["complete"] = r.complete;
        j["primes"] = r.primes;
        j["rank_b"] = r.rank_b;
        j["rank_z"] = r.rank_z;
        j["rank_certificate"] = r.rank_certificate;
        j["zmat_rows"] = r.zmat_rows;
        j["zmat_cols"] = r.zmat_cols;
        j["seconds"] = r.seconds;
        j["type"] = rec.type_string();
        if (rec.divisors) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& d : *rec.divisors) arr.push_back(divisor_json(d));
            j["divisors"] = arr;
        } else {
            j["divisors"] = nullptr;
        }
        j["free_rank"] = rec.free_rank;
        auto dims = nlohmann::ordered_json::object();
        for (const auto& [p, d] : rec.modp_dims) dims[std::to_string(p)] = d;
        j["modp_dims"] = dims;
        j["provenance"] = to_string(rec.provenance);
        out.push_back(std::move(j));
    }
    return out;
}

CohomologyResult from_records(const std::vector<nlohmann::json>& records) {
    CohomologyResult r;
    bool seen[3] = {false, false, false};
    for (const auto& j : records) {
        const int deg = j.at("degree").get<int>();
        if (deg < 0 || deg > 2) throw std::invalid_argument("from_records: degree out of range");
        const auto lambda = parse_partition(j.at("lambda").get<std::string>());
        if (seen[0] || seen[1] || seen[2]) {
            if (lambda != r.lambda) throw std::invalid_argument("from_records: records for different partitions");
        }
        seen[deg] = true;
        r.lambda = lambda;
        r.n = j.at("n").get<int>();
        r.k = j.at("k").get<int>();
        r.g = j.at("g").get<int>();
        r.status = j.at("status").get<std::string>();
        r.strategy = j.at("strategy").get<std::string>();
        r.complete = j.at("complete").get<bool>();
        r.primes = j.at("primes").get<std::vector<int>>();
        r.rank_b = j.at("rank_b").get<int>();
        r.rank_z = j.at("rank_z").get<int>();
        r.rank_certificate = j.at("rank_certificate").get<std::string>();
        r.zmat_rows = j.at("zmat_rows").get<std::int64_t>();
        r.zmat_cols = j.at("zmat_cols").get<std::int64_t>();
        r.seconds = j.at("seconds").get<double>();
        CohomologyRecord rec;
        rec.lambda = lambda;
        rec.degree = deg;
        if (!j.at("divisors").is_null()) {
            rec.divisors.emplace();
            for (const auto& d : j.at("divisors")) rec.divisors->push_back(divisor_from(d));
        }
        rec.free_rank = j.at("free_rank").get<int>();
        for (const auto& [p, d] : j.at("modp_dims").items()) rec.modp_dims[std::stoi(p)] = d.get<int>();
        const auto prov = j.at("provenance").get<std::string>();
        rec.provenance = prov == "golden" ? Provenance::golden : prov == "predicted" ? Provenance::predicted : Provenance::computed;
        (deg == 0 ? r.h0 : deg == 1 ? r.h1 : r.h2) = std::move(rec);
    }
    if (!(seen[0] && seen[1] && seen[2])) throw std::invalid_argument("from_records: missing degree");
    return r;
}

ResultStore::ResultStore(const std::filesystem::path& dir, std::string version) : version_(std::move(version)) {
    std::filesystem::create_directories(dir);
    file_ = dir / "records.jsonl";
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            auto j = nlohmann::json::parse(line);
            if (j.value("version", "") != version_) {
                ++other_version_;
                continue;
            }
            absorb(j);
        } catch (const std::exception&) {
            ++malformed_;
        }
    }
}

void ResultStore::absorb(const nlohmann::json& rec) {
    const auto lambda = parse_partition(rec.at("lambda").get<std::string>());
    auto& slots = records_[lambda];
    slots[rec.at("degree").get<int>()] = rec;
    if (slots.size() == 3) {
        std::vector<nlohmann::json> recs;
        for (const auto& [deg, j] : slots) recs.push_back(j);
        try {
            assembled_[lambda] = from_records(recs);
        } catch (const std::exception&) {
            ++malformed_;
        }
    }
}

std::optional<CohomologyResult> ResultStore::find(const Partition& lambda) const {
    std::lock_guard lock(mu_);
    auto it = assembled_.find(lambda);
    if (it == assembled_.end()) return std::nullopt;
    return it->second;
}

void ResultStore::put(const CohomologyResult& result) {
    const auto recs = to_records(result, version_);
    std::string text;
    for (const auto& j : recs) text += j.dump() + "\n";
    std::lock_guard lock(mu_);
    std::ofstream out(file_, std::ios::app | std::ios::binary);
    if (!out) throw std::runtime_error("cannot append to " + file_.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write to " + file_.string() + " failed");
    for (const auto& j : recs) absorb(nlohmann::json(j));
}

ResultIndex ResultStore::index() const {
    std::lock_guard lock(mu_);
    return assembled_;
}

std::size_t ResultStore::size() const {
    std::lock_guard lock(mu_);
    return assembled_.size();
}

}  // namespace specht

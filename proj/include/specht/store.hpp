#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "specht/graph.hpp"
#include "specht/zassenhaus.hpp"

namespace specht {

/// Bumped whenever a change could alter stored results.
inline constexpr const char* kAlgorithmVersion = "specht-coho/1";

/// One JSON object per degree of `result`, carrying the shared metadata.
std::vector<nlohmann::ordered_json> to_records(const CohomologyResult& result, const std::string& version = kAlgorithmVersion);
/// Reassembles a result from its degree 0, 1 and 2 records (any order).
/// Throws std::invalid_argument if a degree is missing or the records
/// disagree on λ.
CohomologyResult from_records(const std::vector<nlohmann::json>& records);

/// Append-only JSON-lines file records.jsonl in a directory. A later line for
/// the same (λ, degree, version) supersedes earlier ones; lines of other
/// versions are kept on disk but ignored.
class ResultStore {
public:
    /// Creates the directory if needed and loads existing records. Malformed
    /// lines are counted and skipped.
    explicit ResultStore(const std::filesystem::path& dir, std::string version = kAlgorithmVersion);

    std::optional<CohomologyResult> find(const Partition& lambda) const;
    /// Appends and flushes; safe to call from several threads.
    void put(const CohomologyResult& result);
    ResultIndex index() const;
    std::size_t size() const;
    std::filesystem::path file() const { return file_; }
    int malformed_lines() const { return malformed_; }
    int other_version_lines() const { return other_version_; }

private:
    std::filesystem::path file_;
    std::string version_;
    mutable std::mutex mu_;
    std::map<Partition, std::map<int, nlohmann::json>> records_;
    ResultIndex assembled_;
    int malformed_ = 0;
    int other_version_ = 0;

    void absorb(const nlohmann::json& rec);
};

}  // namespace specht

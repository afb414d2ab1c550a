#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "specht/partition.hpp"
#include "specht/zassenhaus.hpp"

namespace specht {

/// integral: p divides |H^degree(Σ_n, S^λ_Z)| (C_p^i). modular: H^degree over
/// F_p is nonzero (C^i(F_p)).
enum class GraphKind { integral, modular };
std::string to_string(GraphKind k);

using ResultIndex = std::map<Partition, CohomologyResult>;

/// Induced subgraph of the add-a-box graph on the members, over 2 <= n <= max_n.
struct CohomologyGraph {
    int p = 2;
    int degree = 2;
    GraphKind kind = GraphKind::integral;
    int max_n = 0;
    std::set<Partition> vertices;
    std::set<std::pair<Partition, Partition>> edges;
    /// Members with n = max_n.
    std::set<Partition> frontier;
    /// Principal-block partitions whose membership could not be decided.
    std::set<Partition> unknown;

    bool contains(const Partition& l) const { return vertices.count(l) > 0; }
    bool has_edge(const Partition& a, const Partition& b) const { return edges.count({a, b}) > 0; }
    /// Members among the successors of λ.
    std::vector<Partition> successors_of(const Partition& l) const;
    std::vector<Partition> predecessors_of(const Partition& l) const;
};

/// Membership of λ, or nullopt when the data do not decide it. Degree 1
/// integral membership uses the closed form; partitions outside the principal
/// p-block are never members.
std::optional<bool> graph_membership(const ResultIndex& results, const Partition& lambda, int p, int degree, GraphKind kind);

/// Throws std::invalid_argument for degrees other than 1, 2 (integral) or
/// 0, 1 (modular).
CohomologyGraph build_graph(const ResultIndex& results, int p, int degree, int max_n, GraphKind kind = GraphKind::integral);

struct StructureReport {
    std::vector<std::string> violations;
    /// Checks that depend on unknown vertices.
    std::vector<std::string> undetermined;
    int checked = 0;
    bool ok() const { return violations.empty(); }
};

/// Every member with n < max_n has a successor in the graph; every member
/// with p ∤ n has a predecessor.
StructureReport check_structure(const CohomologyGraph& g);

struct PathCheck {
    std::string name;
    /// "pass", "fail", "partial" (segment truncated at max_n, prefix checked)
    /// or "skipped" (nothing in range or data missing).
    std::string status;
    std::string detail;
};

/// Initial path segments in C_p² for the graph's p:
///  p > 3: (mp−2,1²) → (mp−2,2,1) → … → (mp−2,p−2,1), each step the only
///         successor; for m = 1 continued by ((p−2)²,1²) → (p−1,p−2,1²).
///  p = 3: (3m−2,1²) → (3m−2,1³) → (3m−1,1³) → (3m−1,1⁴) → (3m−1,2,1³).
///  p odd: (mp,p) → (mp+1,p) → … → (mp+p−2,p) → (mp+p−2,p,1), each step the
///         only successor, and neither (mp,p) nor (mp−2,1²) has a predecessor.
///  p = 2: (11,4) and (11,5) are not members when their data are present.
/// Only meaningful for integral degree-2 graphs; other graphs give no checks.
std::vector<PathCheck> verify_path_lemmas(const CohomologyGraph& g);

std::string export_dot(const CohomologyGraph& g);
/// {p, degree, kind, max_n, vertices, edges, frontier, unknown}.
std::string export_json(const CohomologyGraph& g);
/// Throws std::runtime_error on I/O failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace specht

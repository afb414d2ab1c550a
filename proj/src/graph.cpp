#include "specht/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "specht/theory.hpp"

namespace specht {

std::string to_string(GraphKind k) { return k == GraphKind::integral ? "integral" : "modular"; }

std::vector<Partition> CohomologyGraph::successors_of(const Partition& l) const {
    std::vector<Partition> out;
    for (const auto& s : successors(l)) {
        if (contains(s)) out.push_back(s);
    }
    return out;
}

std::vector<Partition> CohomologyGraph::predecessors_of(const Partition& l) const {
    std::vector<Partition> out;
    for (const auto& s : predecessors(l)) {
        if (contains(s)) out.push_back(s);
    }
    return out;
}

std::optional<bool> graph_membership(const ResultIndex& results, const Partition& lambda, int p, int degree, GraphKind kind) {
    if (!principal_block(lambda, p)) return false;
    if (kind == GraphKind::integral && degree == 1) return cp1_membership(lambda, p);
    const auto it = results.find(lambda);
    if (it == results.end() || it->second.status != "ok") return std::nullopt;
    const auto& r = it->second;
    if (kind == GraphKind::integral) {
        if (!r.h2.computed()) return std::nullopt;
        if (!r.complete && std::find(r.primes.begin(), r.primes.end(), p) == r.primes.end()) return std::nullopt;
        return r.h2.p_rank(p) > 0;
    }
    const auto d = r.dims(p);
    if (!d) return std::nullopt;
    return (degree == 0 ? d->first : d->second) > 0;
}

CohomologyGraph build_graph(const ResultIndex& results, int p, int degree, int max_n, GraphKind kind) {
    const bool valid = kind == GraphKind::integral ? (degree == 1 || degree == 2) : (degree == 0 || degree == 1);
    if (!valid) throw std::invalid_argument("build_graph: unsupported degree " + std::to_string(degree) + " for " + to_string(kind));
    if (!is_prime(p)) throw std::invalid_argument("build_graph: p must be prime");
    CohomologyGraph g;
    g.p = p;
    g.degree = degree;
    g.kind = kind;
    g.max_n = max_n;
    for (int n = 2; n <= max_n; ++n) {
        for (const auto& l : partitions_of(n)) {
            const auto m = graph_membership(results, l, p, degree, kind);
            if (!m) {
                g.unknown.insert(l);
            } else if (*m) {
                g.vertices.insert(l);
                if (n == max_n) g.frontier.insert(l);
            }
        }
    }
    for (const auto& v : g.vertices) {
        for (const auto& s : successors(v)) {
            if (g.contains(s)) g.edges.insert({v, s});
        }
    }
    return g;
}

namespace {

std::string label(const Partition& l) { return "(" + l.to_exponent_string() + ")"; }

bool any_unknown(const CohomologyGraph& g, const std::vector<Partition>& ls) {
    return std::any_of(ls.begin(), ls.end(), [&](const Partition& l) { return g.unknown.count(l) > 0; });
}

std::vector<Partition> sorted(const std::set<Partition>& s) {
    std::vector<Partition> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a > b;
    });
    return v;
}

}  // namespace

StructureReport check_structure(const CohomologyGraph& g) {
    StructureReport r;
    for (const auto& v : sorted(g.vertices)) {
        if (v.size() < g.max_n) {
            ++r.checked;
            if (g.successors_of(v).empty()) {
                (any_unknown(g, successors(v)) ? r.undetermined : r.violations).push_back(label(v) + " has no successor");
            }
        }
        if (v.size() % g.p != 0 && v.size() > 2) {
            ++r.checked;
            if (g.predecessors_of(v).empty()) {
                (any_unknown(g, predecessors(v)) ? r.undetermined : r.violations).push_back(label(v) + " has no predecessor");
            }
        }
    }
    return r;
}

namespace {

struct Step {
    Partition to;
    bool only = false;
};

PathCheck check_path(const CohomologyGraph& g, std::string name, const Partition& start, const std::vector<Step>& steps) {
    PathCheck c{std::move(name), "pass", ""};
    if (start.size() > g.max_n) return {c.name, "skipped", "starts beyond n=" + std::to_string(g.max_n)};
    auto missing = [&](const Partition& l) -> std::optional<PathCheck> {
        if (g.unknown.count(l)) return PathCheck{c.name, "skipped", label(l) + " not computed"};
        if (!g.contains(l)) return PathCheck{c.name, "fail", label(l) + " is not a member"};
        return std::nullopt;
    };
    if (auto m = missing(start)) return *m;
    Partition cur = start;
    for (const auto& s : steps) {
        if (s.to.size() > g.max_n) return {c.name, "partial", "checked up to " + label(cur)};
        if (auto m = missing(s.to)) return *m;
        if (!g.has_edge(cur, s.to)) return {c.name, "fail", "missing edge " + label(cur) + " -> " + label(s.to)};
        if (s.only) {
            const auto succ = g.successors_of(cur);
            if (any_unknown(g, successors(cur))) return {c.name, "skipped", "successors of " + label(cur) + " not all computed"};
            if (succ.size() != 1) {
                std::string list;
                for (const auto& x : succ) list += " " + label(x);
                return {c.name, "fail", label(s.to) + " is not the only successor of " + label(cur) + ":" + list};
            }
        }
        cur = s.to;
    }
    return c;
}

PathCheck check_no_predecessor(const CohomologyGraph& g, const std::string& name, const Partition& l) {
    if (l.size() > g.max_n) return {name, "skipped", "beyond n=" + std::to_string(g.max_n)};
    if (g.unknown.count(l)) return {name, "skipped", label(l) + " not computed"};
    if (!g.contains(l)) return {name, "fail", label(l) + " is not a member"};
    if (any_unknown(g, predecessors(l))) return {name, "skipped", "predecessors of " + label(l) + " not all computed"};
    auto preds = g.predecessors_of(l);
    if (!preds.empty()) return {name, "fail", label(l) + " has predecessor " + label(preds.front())};
    return {name, "pass", ""};
}

Partition hook_with_tail(int first, std::vector<int> middle, int ones) {
    std::vector<int> parts{first};
    parts.insert(parts.end(), middle.begin(), middle.end());
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition(parts);
}

}  // namespace

std::vector<PathCheck> verify_path_lemmas(const CohomologyGraph& g) {
    std::vector<PathCheck> out;
    if (g.kind != GraphKind::integral || g.degree != 2) return out;
    const int p = g.p;
    if (p == 2) {
        for (const auto& l : {Partition({11, 4}), Partition({11, 5})}) {
            const std::string name = "p=2 " + label(l) + " absent";
            if (l.size() > g.max_n || g.unknown.count(l)) {
                out.push_back({name, "skipped", "no data"});
            } else {
                out.push_back({name, g.contains(l) ? "fail" : "pass", g.contains(l) ? label(l) + " is a member" : ""});
            }
        }
        return out;
    }

    for (int m = 1; m * p <= g.max_n; ++m) {
        const std::string ms = "m=" + std::to_string(m);
        const Partition start = hook_with_tail(m * p - 2, {}, 2);
        out.push_back(check_no_predecessor(g, "p=" + std::to_string(p) + " " + ms + " " + label(start) + " has no predecessor", start));
        if (m * p >= 2 * p) {
            const Partition two({m * p - p, p});
            out.push_back(check_no_predecessor(g, "p=" + std::to_string(p) + " " + label(two) + " has no predecessor", two));
        }
    }
    for (int m = 1; m * p <= g.max_n; ++m) {
        const std::string name = "p=" + std::to_string(p) + " m=" + std::to_string(m) + " ";
        if (p > 3) {
            std::vector<Step> steps;
            for (int j = 0; j <= p - 4; ++j) steps.push_back({Partition({m * p - 2, 2 + j, 1}), true});
            if (m == 1) {
                steps.push_back({Partition({p - 2, p - 2, 1, 1}), true});
                steps.push_back({Partition({p - 1, p - 2, 1, 1}), true});
            }
            out.push_back(check_path(g, name + "(mp-2,1^2) segment", hook_with_tail(m * p - 2, {}, 2), steps));
        } else {
            const int a = 3 * m - 2;
            std::vector<Step> steps{{hook_with_tail(a, {}, 3), false},
                                    {hook_with_tail(a + 1, {}, 3), false},
                                    {hook_with_tail(a + 1, {}, 4), false},
                                    {hook_with_tail(a + 1, {2}, 3), false}};
            out.push_back(check_path(g, name + "(3m-2,1^2) segment", hook_with_tail(a, {}, 2), steps));
        }
        std::vector<Step> steps;
        for (int i = 1; i <= p - 2; ++i) steps.push_back({Partition({m * p + i, p}), true});
        steps.push_back({Partition({m * p + p - 2, p, 1}), true});
        out.push_back(check_path(g, name + "(mp,p) segment", Partition({m * p, p}), steps));
    }
    return out;
}

std::string export_dot(const CohomologyGraph& g) {
    std::ostringstream os;
    os << "digraph \"" << (g.kind == GraphKind::integral ? "C_" + std::to_string(g.p) + "^" + std::to_string(g.degree)
                                                          : "C^" + std::to_string(g.degree) + "(F_" + std::to_string(g.p) + ")")
       << "\" {\n";
    os << "  rankdir=TB;\n  node [shape=plaintext];\n";
    const auto vs = sorted(g.vertices);
    int current = -1;
    for (const auto& v : vs) {
        if (v.size() != current) {
            if (current != -1) os << "  }\n";
            current = v.size();
            os << "  { rank=same; // n=" << current << "\n";
        }
        os << "    \"" << v.to_string() << "\" [label=\"" << label(v) << "\"" << (g.frontier.count(v) ? ", fontcolor=gray40" : "") << "];\n";
    }
    if (current != -1) os << "  }\n";
    for (const auto& v : vs) {
        const auto succ = g.successors_of(v);
        for (const auto& s : sorted(std::set<Partition>(succ.begin(), succ.end()))) {
            os << "  \"" << v.to_string() << "\" -> \"" << s.to_string() << "\";\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string export_json(const CohomologyGraph& g) {
    nlohmann::ordered_json j;
    j["p"] = g.p;
    j["degree"] = g.degree;
    j["kind"] = to_string(g.kind);
    j["max_n"] = g.max_n;
    auto names = [](const std::set<Partition>& s) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : sorted(s)) arr.push_back(v.to_exponent_string());
        return arr;
    };
    j["vertices"] = names(g.vertices);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& v : sorted(g.vertices)) {
        const auto succ = g.successors_of(v);
        for (const auto& s : sorted(std::set<Partition>(succ.begin(), succ.end()))) edges.push_back({v.to_exponent_string(), s.to_exponent_string()});
    }
    j["edges"] = edges;
    j["frontier"] = names(g.frontier);
    j["unknown"] = names(g.unknown);
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f.flush()) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace specht

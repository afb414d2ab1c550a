#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "specht/graph.hpp"
#include "specht/theory.hpp"

using namespace specht;

namespace {

const ResultIndex& sweep9() {
    static const ResultIndex results = [] {
        ResultIndex r;
        for (int n = 2; n <= 9; ++n) {
            for (const auto& l : partitions_of(n)) r.emplace(l, compute_cohomology(l));
        }
        return r;
    }();
    return results;
}

Partition P(const char* s) { return parse_partition(s); }

}  // namespace

TEST_CASE("small graphs") {
    auto c5 = build_graph(sweep9(), 5, 2, 8);
    CHECK(c5.contains(P("3,1^2")));
    CHECK(c5.contains(P("3,2,1")));
    CHECK(c5.predecessors_of(P("3,1^2")).empty());
    auto c3 = build_graph(sweep9(), 3, 2, 4);
    CHECK(c3.contains(P("1^3")));
    CHECK(c3.contains(P("1^4")));
    CHECK(c3.has_edge(P("1^3"), P("1^4")));
    auto c2 = build_graph(sweep9(), 2, 2, 3);
    CHECK(c2.contains(P("2")));
    CHECK(c2.contains(P("3")));
    CHECK(c2.has_edge(P("2"), P("3")));
    CHECK(c2.frontier.count(P("3")) == 1);
    CHECK(c2.unknown.empty());
}

TEST_CASE("edge set is the induced add-a-box graph") {
    for (int p : {2, 3, 5, 7}) {
        auto g = build_graph(sweep9(), p, 2, 9);
        std::set<std::pair<Partition, Partition>> brute;
        for (const auto& a : g.vertices) {
            for (const auto& b : g.vertices) {
                if (b.size() != a.size() + 1) continue;
                bool contained = true;
                for (int i = 0; i < std::max(a.length(), b.length()); ++i) contained = contained && a.part(i) <= b.part(i);
                if (contained) brute.insert({a, b});
            }
        }
        CHECK(brute == g.edges);
        for (const auto& v : g.vertices) CHECK(principal_block(v, p));
    }
}

TEST_CASE("structure theorem and path segments for n <= 9") {
    for (int p : {2, 3, 5, 7}) {
        auto g = build_graph(sweep9(), p, 2, 9);
        auto rep = check_structure(g);
        INFO("p=", p);
        CHECK(rep.ok());
        CHECK(rep.undetermined.empty());
        CHECK(rep.checked > 0);
        for (const auto& c : verify_path_lemmas(g)) {
            INFO(c.name, ": ", c.detail);
            CHECK(c.status != "fail");
        }
    }
    auto c5 = build_graph(sweep9(), 5, 2, 9);
    auto checks = verify_path_lemmas(c5);
    int passed = 0;
    for (const auto& c : checks) passed += c.status == "pass";
    CHECK(passed >= 2);
}

TEST_CASE("path checks detect a broken segment") {
    auto g = build_graph(sweep9(), 5, 2, 9);
    g.vertices.erase(P("3,2,1"));
    std::erase_if(g.edges, [](const auto& e) { return e.first == P("3,2,1") || e.second == P("3,2,1"); });
    bool failed = false;
    for (const auto& c : verify_path_lemmas(g)) failed = failed || c.status == "fail";
    CHECK(failed);
    CHECK_FALSE(check_structure(g).ok());
}

TEST_CASE("mod-p graph is the union of the integral graphs") {
    for (int p : {2, 3, 5, 7}) {
        auto mod1 = build_graph(sweep9(), p, 1, 9, GraphKind::modular);
        auto int1 = build_graph(sweep9(), p, 1, 9);
        auto int2 = build_graph(sweep9(), p, 2, 9);
        std::set<Partition> both = int1.vertices;
        both.insert(int2.vertices.begin(), int2.vertices.end());
        CHECK(mod1.vertices == both);
    }
}

TEST_CASE("missing data is unknown, not a violation") {
    ResultIndex partial = sweep9();
    partial.erase(P("3,2,1"));
    auto g = build_graph(partial, 5, 2, 9);
    CHECK(g.unknown.count(P("3,2,1")) == 1);
    CHECK_FALSE(g.contains(P("3,2,1")));
    auto rep = check_structure(g);
    CHECK(rep.ok());
    CHECK_FALSE(rep.undetermined.empty());
    CHECK(g.unknown.count(P("3,3")) == 0);  // outside the principal block
}

TEST_CASE("exports are deterministic") {
    CohomologyGraph empty;
    empty.p = 3;
    CHECK(export_dot(empty) == "digraph \"C_3^2\" {\n  rankdir=TB;\n  node [shape=plaintext];\n}\n");
    auto a = build_graph(sweep9(), 3, 2, 9);
    auto b = build_graph(sweep9(), 3, 2, 9);
    CHECK(export_dot(a) == export_dot(b));
    CHECK(export_json(a) == export_json(b));
    CHECK(export_dot(a).find("\"1,1,1\" -> \"1,1,1,1\"") != std::string::npos);
    CHECK(export_json(a).find("\"1^3\"") != std::string::npos);
    CHECK_THROWS_AS(build_graph(sweep9(), 3, 0, 9), std::invalid_argument);
    CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x.dot", "x"), std::runtime_error);
}

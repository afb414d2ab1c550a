#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specht/checks.hpp"
#include "specht/commands.hpp"
#include "specht/golden.hpp"
#include "specht/graph.hpp"
#include "specht/linalg.hpp"
#include "specht/specht_rep.hpp"
#include "specht/store.hpp"
#include "specht/theory.hpp"

namespace py = pybind11;
using namespace specht;

namespace {

Partition to_partition(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_partition(obj.cast<std::string>());
    return Partition(obj.cast<std::vector<int>>());
}

py::object big(const mpz_class& d) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(d.get_str().c_str(), nullptr, 10));
}

py::object divisors(const CohomologyRecord& rec) {
    if (!rec.divisors) return py::none();
    py::list out;
    for (const auto& d : *rec.divisors) out.append(big(d));
    return out;
}

py::dict result_dict(const CohomologyResult& r) {
    py::dict d;
    d["lambda"] = r.lambda.parts();
    d["n"] = r.n;
    d["k"] = r.k;
    d["status"] = r.status;
    d["strategy"] = r.strategy;
    d["complete"] = r.complete;
    d["primes"] = r.primes;
    d["rank_b"] = r.rank_b;
    d["rank_z"] = r.rank_z;
    d["seconds"] = r.seconds;
    d["h0_free_rank"] = r.h0.free_rank;
    d["h1"] = divisors(r.h1);
    d["h2"] = divisors(r.h2);
    d["h1_type"] = r.h1.type_string();
    d["h2_type"] = r.h2.type_string();
    py::dict dims;
    for (int p : r.primes) {
        if (auto x = r.dims(p)) dims[py::int_(p)] = py::make_tuple(x->first, x->second);
    }
    d["dims"] = dims;
    return d;
}

py::list matrix_rows(const IntMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        rows.append(std::vector<std::int64_t>(r.begin(), r.end()));
    }
    return rows;
}

py::dict prediction_dict(const Prediction& p) {
    py::dict d;
    d["quantity"] = to_string(p.quantity);
    d["bound"] = to_string(p.bound);
    d["value"] = p.value;
    d["group"] = p.group;
    d["text"] = p.value_string();
    d["source"] = p.source;
    d["conjecture"] = p.conjecture;
    return d;
}

CohomologyOptions make_options(const std::string& snf, const std::vector<int>& primes, std::int64_t size_limit, int threads) {
    CommonOptions c;
    c.snf = snf;
    c.primes = primes;
    c.size_limit = size_limit;
    auto o = cohomology_options(c);
    o.threads = threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cohomology of symmetric groups with Specht module coefficients";
    m.attr("ALGORITHM_VERSION") = kAlgorithmVersion;

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    m.def("partitions", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& l : partitions_of(n)) out.push_back(l.parts());
        return out;
    }, py::arg("n"));
    m.def("rank", [](const py::object& l) { return standard_tableau_count(to_partition(l)); }, py::arg("lam"),
          "Rank of the integral Specht module (number of standard tableaux).");
    m.def("p_core", [](const py::object& l, int p) { return p_core(to_partition(l), p).parts(); }, py::arg("lam"), py::arg("p"));

    m.def("generator_matrices", [](const py::object& l) {
        const auto rep = generator_matrices(to_partition(l));
        py::dict out;
        for (const auto& [g, mat] : rep.generators) out[py::str(std::string(1, generator_symbol(g)))] = matrix_rows(mat);
        return out;
    }, py::arg("lam"), "Matrices of a = (1,2) and b = (1,...,n) on the standard polytabloid basis.");

    m.def("elementary_divisors", [](const std::vector<std::vector<std::int64_t>>& rows) {
        py::list out;
        for (const auto& d : smith_elementary_divisors(IntMatrix::from_rows(rows)).divisors) out.append(big(d));
        return out;
    }, py::arg("rows"), "Nonzero elementary divisors of an integer matrix.");

    m.def("compute", [](const py::object& l, const std::string& snf, const std::vector<int>& primes, std::int64_t size_limit, int threads) {
        const auto lambda = to_partition(l);
        const auto opts = make_options(snf, primes, size_limit, threads);
        CohomologyResult r;
        {
            py::gil_scoped_release release;
            r = compute_cohomology(lambda, opts);
        }
        return result_dict(r);
    }, py::arg("lam"), py::arg("snf") = "auto", py::arg("primes") = std::vector<int>{}, py::arg("size_limit") = 0, py::arg("threads") = 1,
       "H^0, H^1, H^2 of the symmetric group with coefficients in S^lambda.");

    m.def("predictions", [](const py::object& l, int p) {
        py::list out;
        for (const auto& pred : predictions_for(to_partition(l), p)) out.append(prediction_dict(pred));
        return out;
    }, py::arg("lam"), py::arg("p"));

    m.def("check_predictions", [](const py::object& l, int p) {
        const auto lambda = to_partition(l);
        CohomologyOptions o;
        o.primes = {p};
        const auto r = compute_cohomology(lambda, o);
        py::list out;
        for (const auto& oc : check_predictions(r, p)) {
            auto d = prediction_dict(oc.prediction);
            d["verdict"] = to_string(oc.verdict);
            d["actual"] = oc.actual;
            out.append(d);
        }
        return out;
    }, py::arg("lam"), py::arg("p"));

    m.def("trivial_submodule_criterion", [](const py::object& l, int p) { return trivial_submodule_criterion(to_partition(l), p); });
    m.def("principal_block", [](const py::object& l, int p) { return principal_block(to_partition(l), p); });

    m.def("golden_rows", [](const std::string& path) {
        py::list out;
        for (const auto& r : GoldenTable::load(path).rows()) {
            py::dict d;
            d["n"] = r.n;
            d["lambda"] = r.lambda.parts();
            d["k"] = r.k;
            d["kind"] = r.kind == GoldenRow::Kind::exact ? "exact" : r.kind == GoldenRow::Kind::primes ? "primes" : "unknown";
            d["values"] = r.values;
            out.append(d);
        }
        return out;
    }, py::arg("path"));

    m.def("sweep", [](const std::string& store, int min_n, int max_n, std::int64_t size_limit) {
        CommonOptions c;
        c.store = store;
        c.size_limit = size_limit;
        ResultStore st(store);
        ResultIndex results;
        SweepSummary s;
        {
            py::gil_scoped_release release;
            s = run_sweep(partitions_between(min_n, max_n), c, &st, results);
        }
        py::dict d;
        d["computed"] = s.computed;
        d["cached"] = s.cached;
        d["skipped"] = s.skipped;
        d["failures"] = s.failures;
        return d;
    }, py::arg("store"), py::arg("min_n"), py::arg("max_n"), py::arg("size_limit") = 0, "Fill a result store with every partition of min_n..max_n.");

    m.def("verify", [](const std::string& store, const std::string& golden, int min_n, int max_n) {
        ResultStore st(store);
        const auto rep = verify_against(GoldenTable::load(golden), st.index(), min_n, max_n);
        py::dict d;
        d["rows"] = rep.rows;
        d["exact_matched"] = rep.exact_matched;
        d["primes_matched"] = rep.primes_matched;
        d["not_computed"] = rep.not_computed;
        py::list mism;
        for (const auto& x : rep.mismatches) mism.append(py::make_tuple(x.lambda.parts(), x.field, x.expected, x.actual));
        d["mismatches"] = mism;
        return d;
    }, py::arg("store"), py::arg("golden"), py::arg("min_n") = 0, py::arg("max_n") = 1 << 30);

    m.def("graph_json", [](const std::string& store, int p, int degree, int max_n, const std::string& kind) {
        ResultStore st(store);
        return export_json(build_graph(st.index(), p, degree, max_n, kind == "modular" ? GraphKind::modular : GraphKind::integral));
    }, py::arg("store"), py::arg("p"), py::arg("degree"), py::arg("max_n"), py::arg("kind") = "integral");
}

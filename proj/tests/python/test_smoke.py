import json
import os
import pathlib

import pytest

import specht_coho as sc

ROOT = pathlib.Path(os.environ.get("SPECHT_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


def test_small_groups():
    r = sc.compute("3,1^2")
    assert r["k"] == 6
    assert r["h2"] == [10]
    assert r["h2_type"] == "Z/10"
    assert sc.compute([2])["h2"] == [2]
    assert sc.compute([6, 1])["h1"] == [7]


def test_modular_route_matches_dense():
    for lam in sc.partitions(6):
        a = sc.compute(lam, snf="dense")
        b = sc.compute(lam, snf="modular")
        assert a["h1"] == b["h1"] and a["h2"] == b["h2"] and a["dims"] == b["dims"]


def test_partitions_and_rank():
    assert len(sc.partitions(7)) == 15
    assert sc.rank("7,3,1") == 550
    assert sc.p_core([3, 2], 5) == [3, 2]


def test_matrices_and_divisors():
    mats = sc.generator_matrices([2, 1])
    assert set(mats) == {"a", "b"}
    assert len(mats["a"]) == 2
    assert sc.elementary_divisors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


def test_predictions():
    preds = sc.check_predictions("6,3", 3)
    x2 = [p for p in preds if p["source"] == "two-part-x2"]
    assert x2 and x2[0]["value"] == 1 and x2[0]["verdict"] == "agrees"
    assert all(p["verdict"] != "violates" for p in preds)
    assert sc.trivial_submodule_criterion([4, 1], 5)


def test_bad_input():
    with pytest.raises(ValueError):
        sc.compute("3,1", snf="fastest")
    with pytest.raises(ValueError):
        sc.compute("1,3")


def test_store_verify_graph(tmp_path):
    store = str(tmp_path / "store")
    s = sc.sweep(store, 2, 6)
    assert s["computed"] == 2 + 3 + 5 + 7 + 11 and not s["failures"]
    assert sc.sweep(store, 2, 6)["cached"] == 28
    rep = sc.verify(store, str(ROOT / "data" / "h2_reference.tsv"), 2, 6)
    assert rep["exact_matched"] == 28 and rep["mismatches"] == []
    g = json.loads(sc.graph_json(store, 5, 2, 6))
    assert "3,1^2" in g["vertices"] and ["3,1^2", "3,2,1"] in g["edges"]


def test_imports_build_tree_under_ctest():
    if os.environ.get("SPECHT_BUILD_PYTHON"):
        assert sc._core.__file__.startswith(os.environ["PYTHONPATH"].split(os.pathsep)[0])

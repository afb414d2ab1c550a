"""Cohomology of symmetric groups with Specht module coefficients."""

from ._core import (
    ALGORITHM_VERSION,
    UsageError,
    check_predictions,
    compute,
    elementary_divisors,
    generator_matrices,
    golden_rows,
    graph_json,
    p_core,
    partitions,
    predictions,
    principal_block,
    rank,
    sweep,
    trivial_submodule_criterion,
    verify,
)

__all__ = [
    "ALGORITHM_VERSION",
    "UsageError",
    "check_predictions",
    "compute",
    "elementary_divisors",
    "generator_matrices",
    "golden_rows",
    "graph_json",
    "p_core",
    "partitions",
    "predictions",
    "principal_block",
    "rank",
    "sweep",
    "trivial_submodule_criterion",
    "verify",
]

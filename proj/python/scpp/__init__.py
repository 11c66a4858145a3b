"""Simple commutators in symmetric and braid groups."""

from ._core import (
    CompletionDiverged,
    Error,
    InvariantBreach,
    MachineStuck,
    MalformedInput,
    PromiseViolation,
    braid_equal,
    canonical,
    complete_sn,
    decompose,
    evaluate,
    format_rgnf,
    operation_count,
    pure_braid_factorization,
    rgnf,
    run_adder,
    run_machine,
    scpp_permutation_braids,
    search,
    solve,
    two_ncycle_product,
)

__all__ = [
    "CompletionDiverged",
    "Error",
    "InvariantBreach",
    "MachineStuck",
    "MalformedInput",
    "PromiseViolation",
    "braid_equal",
    "canonical",
    "complete_sn",
    "decompose",
    "evaluate",
    "format_rgnf",
    "operation_count",
    "pure_braid_factorization",
    "rgnf",
    "run_adder",
    "run_machine",
    "scpp_permutation_braids",
    "search",
    "solve",
    "two_ncycle_product",
]

"""Exact type-A Macdonald polynomials by the Ram-Yip and compressed filling formulas."""

from ._core import (
    InternalError,
    InvalidInput,
    PoleError,
    ResourceCapExceeded,
    chain,
    chain_entries,
    check_oracle,
    classify_folds,
    compute,
    compute_json,
    count,
    filling_map,
    run_cli,
    table,
    verify_classes,
)

__all__ = [
    "InternalError",
    "InvalidInput",
    "PoleError",
    "ResourceCapExceeded",
    "chain",
    "chain_entries",
    "check_oracle",
    "classify_folds",
    "compute",
    "compute_json",
    "count",
    "filling_map",
    "run_cli",
    "table",
    "verify_classes",
]

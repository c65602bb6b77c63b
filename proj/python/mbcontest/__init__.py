"""Optimal budget ratios for two-player budget-constrained multi-battle contests."""

import json as _json

from ._core import (  # noqa: F401
    DomainError,
    ResourceError,
    build_matrix,
    closed_form,
    exhaustive_adversary_check,
    matrix_dump,
    min_winning_budget,
    obr,
    optimal_bid_fraction,
    p1_can_win,
    verify_matrix,
)
from ._core import run_game as _run_game


def run_game(variant, turns, ratio, adversary, seed=0, alpha=None, b2=1):
    """Play one contest; returns the trace as a dict."""
    return _json.loads(_run_game(variant, turns, ratio, adversary, seed, alpha, b2))


__all__ = [
    "DomainError",
    "ResourceError",
    "build_matrix",
    "closed_form",
    "exhaustive_adversary_check",
    "matrix_dump",
    "min_winning_budget",
    "obr",
    "optimal_bid_fraction",
    "p1_can_win",
    "run_game",
    "verify_matrix",
]

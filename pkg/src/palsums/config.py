"""Desk-scale budgets for the brute-force operations.

The budgets are configuration, not constants: every exhaustive operation
accepts a ``Budget`` so callers can raise the limits when they are willing
to wait.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Budget:
    """Caps on the bulk searches.

    ``table_limit`` bounds the largest value a membership table or range
    scan may cover; ``twin_k_max`` bounds the exponent accepted by the
    exhaustive twin verification.
    """

    table_limit: int = 10**8
    twin_k_max: int = 8


DEFAULT_BUDGET = Budget()

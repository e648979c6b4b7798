"""
Size guards and defaults.

Everything in this package is exact, so the practical limits are time and
memory, not precision.  The guards below stop accidental n=9 blowups; all
of them can be raised deliberately, either per call, via the
HECKE_LAB_MAX_N environment variable, or with the command line flag.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

__all__ = ["Budgets", "BudgetError", "max_n", "set_max_n", "check_n", "DEFAULTS"]


class BudgetError(ValueError):
    """A requested computation exceeds the configured size guard."""


@dataclass(frozen=True)
class Budgets:
    # symmetric-group rank guard for tables, Hecke products and KL elements
    hecke_max_n: int = 8
    # symmetric-function degree guard for basis conversions
    symfunc_max_degree: int = 12
    # immanants cost n! products
    immanant_max_n: int = 7
    # proper-coloring enumeration (backtracking, palette n)
    csf_max_n: int = 8
    # all-colorings enumeration costs n^n
    llt_direct_max_n: int = 6


DEFAULTS = Budgets()

_override: int | None = None


def set_max_n(value: int | None) -> None:
    """Set the global rank guard, overriding the environment variable."""
    global _override
    _override = value


def max_n() -> int:
    if _override is not None:
        return _override
    env = os.environ.get("HECKE_LAB_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULTS.hecke_max_n


def check_n(n: int, limit: int | None = None, what: str = "n") -> None:
    cap = limit if limit is not None else max_n()
    if n > cap:
        raise BudgetError(
            f"{what}={n} exceeds the size guard {cap}; raise it explicitly "
            "(HECKE_LAB_MAX_N or --max-n) if this is intentional")

"""Enumeration budget shared by every exhaustive path.

The budget is the log2 of the largest number of vectors any single
enumeration may touch.  It defaults to 24 and can be overridden with the
``BSYMCOV_BUDGET`` environment variable, :func:`set_budget`, or the
:func:`budget` context manager.
"""

from __future__ import annotations

import contextlib
import os

DEFAULT_LOG2_BUDGET = 24
ENV_VAR = "BSYMCOV_BUDGET"


class BudgetExceeded(RuntimeError):
    """An exhaustive computation would exceed the enumeration budget."""


def _initial() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_LOG2_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None


_log2_budget = _initial()


def get_budget() -> int:
    return _log2_budget


def set_budget(log2_cap: int) -> None:
    global _log2_budget
    if log2_cap < 0:
        raise ValueError("budget must be non-negative")
    _log2_budget = int(log2_cap)


@contextlib.contextmanager
def budget(log2_cap: int):
    old = get_budget()
    set_budget(log2_cap)
    try:
        yield
    finally:
        set_budget(old)


def within_budget(count: int) -> bool:
    return count <= (1 << _log2_budget)


def require(count: int, what: str) -> None:
    if not within_budget(count):
        raise BudgetExceeded(
            f"{what} needs {count} enumerations, over the budget 2^{_log2_budget}"
        )

"""Backend selection for the compiled kernels.

Two interchangeable kernel sets exist: a numba-jitted one operating on packed
uint64 bitsets, and a pure python/numpy fallback. NONCYC_BACKEND picks one:
"numba", "numpy", or "auto" (the default: numba when importable).
"""

from __future__ import annotations

import os

ENV_BACKEND = "NONCYC_BACKEND"
ENV_NODE_BUDGET = "NONCYC_NODE_BUDGET"

DEFAULT_NODE_BUDGET = 10_000_000


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def resolve_backend(choice: str | None = None) -> str:
    """Map an explicit choice or the NONCYC_BACKEND variable to a backend name."""
    if choice is None:
        choice = os.environ.get(ENV_BACKEND, "auto")
    choice = choice.strip().lower()
    if choice in ("auto", ""):
        return "numba" if numba_available() else "numpy"
    if choice == "numba":
        if not numba_available():
            raise RuntimeError("NONCYC_BACKEND=numba but numba is not importable")
        return "numba"
    if choice in ("numpy", "python"):
        return "numpy"
    raise ValueError(f"unknown backend {choice!r}")


def node_budget() -> int:
    """Default node budget for the backtracking searches.

    NONCYC_NODE_BUDGET overrides it; the value is read at call time so tests
    and long sweeps can tighten or relax it without reimporting.
    """
    raw = os.environ.get(ENV_NODE_BUDGET)
    if raw is None:
        return DEFAULT_NODE_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError("NONCYC_NODE_BUDGET must be positive")
    return value

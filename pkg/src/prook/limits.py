"""Desk-scale bounds for the expensive verifications.

Exact arithmetic makes every suite cost grow combinatorially, so each solver
carries a default cap chosen to keep the full default run in the minutes
range.  Setting the environment variable PROOK_MAX_K to an integer raises all
of these caps at once (at your own runtime risk).
"""

from __future__ import annotations

import os

ENV_BOUND = "PROOK_MAX_K"

# Exhaustive commutant solves over 4**k unknowns.
DEFAULT_COMMUTANT_K = 5
# Exhaustive diagram sweeps for the commuting/faithful action checks.
DEFAULT_DIAGRAM_K = 5
# Symbolic Laurent identity checks.
DEFAULT_QUANTUM_K = 8
# Highest-weight/basis checks over the full 2**k tensor space.
DEFAULT_TENSOR_K = 10
# Rook module rank certificates (Burnside spans, regular representation).
DEFAULT_ROOK_N = 5
# Matrix-unit product rule: exhaustive up to this n, sampled above.
EXHAUSTIVE_PAIRS_N = 3
DEFAULT_PAIR_SAMPLE = 1000
# Diagram sample size for the commuting-action check above the diagram bound.
DEFAULT_DIAGRAM_SAMPLE = 500
# CLI enumeration cap.
ENUMERATE_MAX_N = 10


class BoundExceededError(RuntimeError):
    """A verification was asked to run beyond its configured resource bound."""


def bound(default: int) -> int:
    """The configured cap: PROOK_MAX_K if set, otherwise the default."""
    override = os.environ.get(ENV_BOUND)
    if override is not None:
        try:
            return int(override)
        except ValueError:
            raise BoundExceededError(
                "%s must be an integer, got %r" % (ENV_BOUND, override)) from None
    return default


def check_bound(name: str, value: int, default: int, cost_hint: str) -> None:
    """Raise BoundExceededError when value exceeds the configured cap."""
    cap = bound(default)
    if value > cap:
        raise BoundExceededError(
            "%s=%d exceeds the configured bound %d (%s); "
            "set %s to override" % (name, value, cap, cost_hint, ENV_BOUND))

"""Bracketed bisection for monotone scalar functions."""

from __future__ import annotations

import math
from typing import Callable


class BracketError(ValueError):
    def __init__(self, message, value_lo, value_hi):
        super().__init__(message)
        self.value_lo = value_lo
        self.value_hi = value_hi


def bisect_increasing(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    rtol: float = 1e-12,
    max_iterations: int = 200,
    geometric: bool = False,
) -> float:
    """Root of an increasing function on ``[lo, hi]``.

    With ``geometric=True`` the bracket is split at its geometric mean, which
    suits brackets spanning several orders of magnitude (requires ``lo > 0``).
    Stops once ``hi - lo <= rtol * hi``.
    """
    f_lo, f_hi = fn(lo), fn(hi)
    if f_lo > 0.0 or f_hi < 0.0:
        raise BracketError(
            f"no sign change on [{lo}, {hi}]: f(lo)={f_lo}, f(hi)={f_hi}", f_lo, f_hi
        )
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    for _ in range(max_iterations):
        mid = math.sqrt(lo * hi) if geometric else 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid
        if f_mid < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= rtol * abs(hi):
            break
    return math.sqrt(lo * hi) if geometric else 0.5 * (lo + hi)

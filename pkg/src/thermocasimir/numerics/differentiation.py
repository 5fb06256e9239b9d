"""Central differences with one level of Richardson extrapolation."""
from __future__ import annotations

import math
from typing import Callable

__all__ = ["differentiate"]


def differentiate(
    f: Callable[[float], float], x0: float, h0: float
) -> tuple[float, float]:
    """
    Derivative of ``f`` at ``x0``.

    Central differences with steps ``h0`` and ``h0/2`` are combined as
    ``(4·D(h0/2) − D(h0))/3``; the error estimate is the disagreement
    between the extrapolated value and ``D(h0/2)``.
    """
    if h0 <= 0:
        raise ValueError("step h0 must be positive")

    def central(h: float) -> float:
        upper, lower = f(x0 + h), f(x0 - h)
        if not (math.isfinite(upper) and math.isfinite(lower)):
            raise ValueError(f"non-finite sample at x0 ± {h:g}")
        return (upper - lower) / (2.0 * h)

    coarse = central(h0)
    fine = central(0.5 * h0)
    extrapolated = (4.0 * fine - coarse) / 3.0
    return extrapolated, abs(extrapolated - fine)

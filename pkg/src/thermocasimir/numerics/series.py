"""
series.py
=========

Truncated series with error control, series acceleration and Richardson
extrapolation.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "SeriesResult",
    "sum_until",
    "euler_transform",
    "richardson_extrapolate",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesResult:
    """Partial sum of a series and how it was obtained."""

    value: float
    last_term: float
    terms_used: int
    converged: bool
    terms: tuple[float, ...] = ()


def sum_until(
    term: Callable[[int], float],
    start: int,
    rel_tol: float,
    budget: int,
    *,
    initial: float = 0.0,
    patience: int = 3,
) -> SeriesResult:
    """
    Sum ``term(n)`` for ``n = start, start+1, ...``.

    Stops once ``|term(n)| < rel_tol·|partial|`` held for ``patience``
    consecutive indices, or after ``budget`` terms.  ``initial`` seeds the
    partial sum (it takes part in the relative test but is not a term).
    Terms are added strictly in index order, so identical inputs give
    bit-identical sums.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")

    partial = float(initial)
    terms: list[float] = []
    quiet = 0
    last = 0.0
    converged = False
    for n in range(start, start + budget):
        last = float(term(n))
        if not math.isfinite(last):
            raise ValueError(f"series term {n} is not finite ({last})")
        terms.append(last)
        partial += last
        if abs(last) < rel_tol * abs(partial):
            quiet += 1
            if quiet >= patience:
                converged = True
                break
        else:
            quiet = 0

    if not converged:
        logger.debug("series budget of %d terms exhausted (last term %.3e)", budget, last)
    return SeriesResult(partial, abs(last), len(terms), converged, tuple(terms))


def euler_transform(terms: Sequence[float], rel_tol: float = 1e-15) -> float:
    """
    Sum an alternating series from its leading signed terms.

    ``terms[j] = (-1)^j a_j`` with slowly varying ``a_j``; the Euler
    transformation ``Σ (-1)^n Δⁿa_0 / 2^{n+1}`` is accumulated until its
    terms fall below ``rel_tol`` of the running sum or the available
    differences run out.
    """
    a = np.asarray(terms, dtype=float) * (-1.0) ** np.arange(len(terms))
    total = 0.0
    for n in range(len(a)):
        contribution = (-1.0) ** n * a[0] / 2.0 ** (n + 1)
        total += contribution
        if abs(contribution) <= rel_tol * abs(total):
            break
        a = np.diff(a)
    return total


def richardson_extrapolate(
    steps: Sequence[float], values: Sequence[float]
) -> tuple[float, float]:
    """
    Extrapolate ``values(step)`` to ``step → 0``.

    A polynomial of degree ``len(steps) - 1`` in the step is passed through
    all points.  The error estimate is the change relative to the
    extrapolation that drops the coarsest point.
    """
    h = np.asarray(steps, dtype=float)
    v = np.asarray(values, dtype=float)
    if h.size != v.size or h.size < 2:
        raise ValueError("need at least two (step, value) pairs of equal length")
    order = np.argsort(h)[::-1]
    h, v = h[order], v[order]
    full = np.polynomial.polynomial.polyfit(h, v, h.size - 1)[0]
    reduced = np.polynomial.polynomial.polyfit(h[1:], v[1:], h.size - 2)[0]
    return float(full), float(abs(full - reduced))

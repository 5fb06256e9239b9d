"""
quadrature.py
=============

Adaptive quadrature shared by every physics module.

The engine is :func:`scipy.integrate.quad_vec` with the ``gk15`` embedded
rule (15-point Kronrod / 7-point Gauss pair per panel, adaptive bisection,
error estimate from the rule difference).  This module only adds the result
record, convergence bookkeeping and the truncation of semi-infinite ranges.

Fixed-order Gauss–Legendre panels (:func:`integrate_panels`) are used where
thousands of short, smooth panels must be integrated at once, e.g. the
lobes of oscillatory Fourier integrals.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.integrate import quad_vec

from thermocasimir.errors import ConvergenceError

__all__ = [
    "QuadratureResult",
    "integrate_adaptive",
    "integrate_adaptive_batch",
    "integrate_semi_infinite",
    "integrate_panels",
    "DEFAULT_REL_TOL",
]

logger = logging.getLogger(__name__)

DEFAULT_REL_TOL = 1e-9
_SUBDIVISION_LIMIT = 2000
_ABS_FLOOR = 1e-18          # envelope level treated as "zero"
_DOUBLING_BUDGET = 64          # doublings allowed while looking for decay


# --------------------------------------------------------------------------- #
# Result record
# --------------------------------------------------------------------------- #
@dataclass(frozen=True)
class QuadratureResult:
    """Value of one integral together with its bookkeeping."""

    value: float
    abs_error: float
    subdivisions: int
    converged: bool

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            value=self.value + other.value,
            abs_error=self.abs_error + other.abs_error,
            subdivisions=self.subdivisions + other.subdivisions,
            converged=self.converged and other.converged,
        )

    def scaled(self, factor: float) -> "QuadratureResult":
        """Return the result multiplied by a constant *factor*."""
        return QuadratureResult(
            value=self.value * factor,
            abs_error=self.abs_error * abs(factor),
            subdivisions=self.subdivisions,
            converged=self.converged,
        )

    def require_converged(self, what: str = "integral") -> "QuadratureResult":
        """Raise :class:`ConvergenceError` unless the result converged."""
        if not self.converged:
            raise ConvergenceError(f"{what} did not converge", self.abs_error)
        return self


# --------------------------------------------------------------------------- #
# Adaptive integration
# --------------------------------------------------------------------------- #
def integrate_adaptive(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = 0.0,
    *,
    scale: float = 1.0,
    limit: int = _SUBDIVISION_LIMIT,
) -> QuadratureResult:
    """
    Integrate ``f`` over ``[lo, hi]`` by adaptive 15/7 Gauss–Kronrod bisection.

    Parameters
    ----------
    f
        Scalar integrand, finite on the open interval.
    lo, hi
        Finite limits with ``lo < hi``.
    rel_tol, abs_tol
        Stop once the error estimate is below
        ``max(abs_tol, rel_tol·max(scale, |I|))``.
    scale
        Typical magnitude of the integral.  Integrals much smaller than
        ``scale`` are resolved to ``rel_tol·scale`` absolutely.
    limit
        Maximum number of panels.

    Returns
    -------
    QuadratureResult
        ``converged`` is False when the error estimate misses the target
        above or the integrand produced non-finite values; the best estimate
        is kept.
    """
    if not lo < hi:
        raise ValueError(f"integration limits must satisfy lo < hi (got {lo}, {hi})")
    if rel_tol <= 0 or abs_tol < 0 or scale <= 0:
        raise ValueError("tolerances must be positive")

    value, error, info = quad_vec(
        f,
        lo,
        hi,
        epsabs=max(abs_tol, rel_tol * scale),
        epsrel=rel_tol,
        limit=limit,
        quadrature="gk15",
        full_output=True,
    )
    value = float(value)
    error = float(error)
    subdivisions = len(info.intervals)
    converged = _within_target(value, error, rel_tol, abs_tol, scale)

    if not converged:
        logger.warning(
            "quadrature on [%g, %g] stopped after %d panels: %s (error %.3e)",
            lo, hi, subdivisions, getattr(info, "message", "not converged"), error,
        )
    return QuadratureResult(value, error, subdivisions, converged)


def integrate_adaptive_batch(
    f: Callable[[float], np.ndarray],
    lo: float,
    hi: float,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = 0.0,
    *,
    scale: float = 1.0,
    limit: int = _SUBDIVISION_LIMIT,
) -> tuple[np.ndarray, float, bool]:
    """
    Integrate a vector-valued ``f`` over ``[lo, hi]`` on one shared panel set.

    The error target applies to the largest component (``norm="max"``), so
    small components are resolved to the same absolute level as the largest.

    Returns
    -------
    values, abs_error, converged
    """
    if not lo < hi:
        raise ValueError(f"integration limits must satisfy lo < hi (got {lo}, {hi})")
    values, error, info = quad_vec(
        f,
        lo,
        hi,
        epsabs=max(abs_tol, rel_tol * scale),
        epsrel=rel_tol,
        norm="max",
        limit=limit,
        quadrature="gk15",
        full_output=True,
    )
    values = np.asarray(values, dtype=float)
    error = float(error)
    largest = float(np.max(np.abs(values))) if values.size else 0.0
    converged = _within_target(largest, error, rel_tol, abs_tol, scale)
    if not converged:
        logger.warning(
            "batched quadrature on [%g, %g] stopped after %d panels (error %.3e)",
            lo, hi, len(info.intervals), error,
        )
    return values, error, converged


def _within_target(value: float, error: float, rel_tol: float, abs_tol: float, scale: float) -> bool:
    # decided from the error estimate alone, not quad_vec's status flag
    if not (math.isfinite(value) and math.isfinite(error)):
        return False
    return error <= max(abs_tol, rel_tol * max(scale, abs(value)))


def integrate_semi_infinite(
    f: Callable[[float], float],
    lo: float,
    rel_tol: float = DEFAULT_REL_TOL,
    *,
    abs_tol: float = 0.0,
    envelope: Callable[[float], float] | None = None,
    window: float | None = None,
    abs_floor: float = _ABS_FLOOR,
) -> QuadratureResult:
    """
    Integrate an exponentially decaying ``f`` over ``[lo, ∞)``.

    The range is cut at ``lo + window`` when a window is given; otherwise at
    the first sample point where the envelope (or ``|f|`` itself, weighted by
    the distance from ``lo``) drops below ``abs_floor``.  Sample points are
    ``lo + 2^k``.
    """
    if window is not None:
        hi = lo + window
    else:
        bound = envelope or (lambda x: abs(f(x)) * (1.0 + x - lo))
        hi = None
        for k in range(_DOUBLING_BUDGET):
            x = lo + 2.0 ** k
            level = bound(x)
            if math.isfinite(level) and level < abs_floor:
                hi = x
                break
        if hi is None:
            raise ConvergenceError(
                f"no decay of the integrand found beyond x={lo} within "
                f"{_DOUBLING_BUDGET} doublings"
            )
        logger.debug("semi-infinite range from %g truncated at %g", lo, hi)
    return integrate_adaptive(f, lo, hi, rel_tol, abs_tol)


# --------------------------------------------------------------------------- #
# Fixed-order panels
# --------------------------------------------------------------------------- #
@lru_cache(maxsize=8)
def _gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes, weights


def integrate_panels(
    f: Callable[[np.ndarray], np.ndarray],
    edges: np.ndarray,
    order: int = 16,
) -> np.ndarray:
    """
    Integrate a vectorized ``f`` over every panel ``[edges[i], edges[i+1]]``.

    Returns one value per panel.  ``f`` is called once with a 2-D array of
    shape ``(n_panels, order)``.
    """
    edges = np.asarray(edges, dtype=float)
    nodes, weights = _gauss_legendre(order)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = mid[:, None] + half[:, None] * nodes[None, :]
    return half * (np.asarray(f(x), dtype=float) @ weights)

"""
reflection.py
=============

Reflection factors of the two polarizations and the logarithmic mode
integrand built from them.

With s = √(x² + κ²), where κ² = x_n²(ε−1):

    G1 = ((x − s)/(x + s))²        (transverse electric)
    G2 = ((εx − s)/(εx + s))²      (transverse magnetic)

The integrand ``x·ln[(1 − G1e⁻ˣ)(1 − G2e⁻ˣ)]`` is formed from
``1 − G`` and ``1 − e⁻ˣ`` separately so that nothing cancels when G → 1
and x → 0 at the same time.  ``math.inf`` stands for an ideal reflector
in both ε and κ².
"""
from __future__ import annotations

import math

import numpy as np

from thermocasimir.errors import ModelDomainError

__all__ = [
    "reflection_factors",
    "log_factor",
    "log_factor_array",
    "mode_integrand",
]


# --------------------------------------------------------------------------- #
# Public API
# --------------------------------------------------------------------------- #
def reflection_factors(eps: float, x: float, x_n: float) -> tuple[float, float]:
    """
    Return ``(G1, G2)`` for permittivity *eps* at ``x ≥ x_n ≥ 0``.

    Raises
    ------
    ModelDomainError
        If ``x < x_n``, ``x_n < 0`` or ``eps < 1``.
    """
    if x_n < 0 or x < x_n:
        raise ModelDomainError(f"reflection factors need x >= x_n >= 0 (got x={x}, x_n={x_n})")
    if not eps >= 1:
        raise ModelDomainError(f"permittivity must be >= 1 (got {eps})")
    if math.isinf(eps):
        return 1.0, 1.0
    s = math.sqrt(x * x + x_n * x_n * (eps - 1.0))
    if x == 0.0 and s == 0.0:
        # x = x_n = 0: only the static limit is meaningful
        return 0.0, ((eps - 1.0) / (eps + 1.0)) ** 2
    return ((x - s) / (x + s)) ** 2, ((eps * x - s) / (eps * x + s)) ** 2


def log_factor(x: float, eps: float, kappa_sq: float) -> float:
    """
    ``ln[(1 − G1e⁻ˣ)(1 − G2e⁻ˣ)]`` for a scalar ``x > 0``.

    *kappa_sq* is x_n²(ε−1) (or its static limit), *eps* the permittivity
    entering G2.  Returns 0 for ``x <= 0``.
    """
    if x <= 0.0:
        return 0.0
    absorbed = -math.expm1(-x)          # 1 − e⁻ˣ
    if math.isinf(kappa_sq):
        if not math.isinf(eps):
            raise ModelDomainError("an infinite kappa_sq requires an infinite permittivity")
        return 2.0 * math.log(absorbed)

    s = math.sqrt(x * x + kappa_sq)
    d = s + x
    g1 = (kappa_sq / (d * d)) ** 2      # (s − x) = κ²/(s + x)
    te = math.log(4.0 * x * s / (d * d) + g1 * absorbed)

    if math.isinf(eps):
        return te + math.log(absorbed)
    ex = eps * x
    d2 = ex + s
    r = (ex - s) / d2
    tm = math.log(4.0 * ex * s / (d2 * d2) + r * r * absorbed)
    return te + tm


def log_factor_array(x, eps, kappa_sq) -> np.ndarray:
    """Vectorized :func:`log_factor`; all arguments broadcast together."""
    x, eps, kappa_sq = np.broadcast_arrays(
        np.asarray(x, dtype=float), np.asarray(eps, dtype=float), np.asarray(kappa_sq, dtype=float)
    )
    positive = x > 0
    absorbed = -np.expm1(-np.where(positive, x, 1.0))
    log_absorbed = np.log(absorbed)
    ideal_te = np.isinf(kappa_sq)
    ideal_tm = np.isinf(eps)

    with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
        k2 = np.where(ideal_te, 0.0, kappa_sq)
        s = np.sqrt(x * x + k2)
        d = s + x
        g1 = (k2 / (d * d)) ** 2
        te = np.log(4.0 * x * s / (d * d) + g1 * absorbed)

        e = np.where(ideal_tm, 1.0, eps)
        ex = e * x
        d2 = ex + s
        r = (ex - s) / d2
        tm = np.log(4.0 * ex * s / (d2 * d2) + r * r * absorbed)

    te = np.where(ideal_te, log_absorbed, te)
    tm = np.where(ideal_tm, log_absorbed, tm)
    return np.where(positive, te + tm, 0.0)


def mode_integrand(x: float, eps: float, kappa_sq: float) -> float:
    """``x·ln[(1 − G1e⁻ˣ)(1 − G2e⁻ˣ)]``, the integrand of every Matsubara term."""
    return x * log_factor(x, eps, kappa_sq)

"""
profile.py
==========

The mode profile

    φ(z) = ∫_z^∞ x ln[(1 − G1e⁻ˣ)(1 − G2e⁻ˣ)] dx,

with the reflection factors evaluated at the continuous frequency
ζ = cz/2a, so that the Matsubara sum reads Σ'ₙ φ(nτ).  At z = 0 the
model's own static limit is used, which makes φ continuous there.

:class:`PhiProfile` samples φ on an adaptive grid once and serves spline
values afterwards; it is read-only after construction.
"""
from __future__ import annotations

import logging
import math

import numpy as np
from scipy.interpolate import CubicSpline

from thermocasimir.dielectric import DielectricModel
from thermocasimir.errors import ModelDomainError
from thermocasimir.lifshitz import (
    X_WINDOW,
    Prescription,
    log_factor_array,
    mode_integral,
    permittivity_at,
    static_reflection,
)
from thermocasimir.numerics import integrate_adaptive_batch
from thermocasimir.util.constants import SPEED_OF_LIGHT, ZETA_3

__all__ = ["PhiProfile", "phi", "DEFAULT_PROFILE_TOL"]

logger = logging.getLogger(__name__)

DEFAULT_PROFILE_TOL = 1e-9


def phi(model: DielectricModel, separation: float, z: float, tol: float = 1e-9) -> float:
    """φ(z) by direct quadrature (negative, ≥ −2ζ(3))."""
    if not z >= 0:
        raise ModelDomainError(f"profile argument must be >= 0 (got {z})")
    if z == 0:
        static = static_reflection(model, separation, Prescription.DIRECT)
        eps, kappa_sq = static.eps_static, static.kappa_sq
    else:
        eps, kappa_sq = permittivity_at(model, separation, z)
    return mode_integral(eps, kappa_sq, z, tol).value


class PhiProfile:
    """
    Spline of φ(z) on ``[0, Z_MAX]`` for one model at one separation.

    The starting grid is geometric on ``[1e-8, 1]`` and linear beyond;
    interval midpoints are added until the spline reproduces the exact
    values to ``tol·2ζ(3)``.  φ is taken as zero above ``Z_MAX``.
    """

    Z_MAX = X_WINDOW
    _GEOMETRIC_START = 1e-8
    _PER_DECADE = 6
    _LINEAR_STEP = 0.25
    _MAX_ROUNDS = 14

    def __init__(
        self,
        model: DielectricModel,
        separation: float,
        tol: float = DEFAULT_PROFILE_TOL,
    ):
        if not separation > 0:
            raise ModelDomainError(f"separation must be positive (got {separation})")
        if not tol > 0:
            raise ValueError("tol must be positive")
        self._model = model
        self._separation = float(separation)
        self._tol = float(tol)
        self._abs_tol = tol * 2.0 * ZETA_3
        self.converged = True
        self._build()

    # ------------------------------------------------------------------ #
    # Public API
    # ------------------------------------------------------------------ #
    @property
    def model(self) -> DielectricModel:
        return self._model

    @property
    def separation(self) -> float:
        return self._separation

    @property
    def nodes(self) -> np.ndarray:
        return self._nodes

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def at_zero(self) -> float:
        """φ(0), fixed by the static limit of the model."""
        return float(self._values[0])

    def __call__(self, z):
        z = np.asarray(z, dtype=float)
        if np.any(z < 0):
            raise ModelDomainError("profile argument must be >= 0")
        inside = z <= self.Z_MAX
        out = np.where(inside, self._spline(np.where(inside, z, 0.0)), 0.0)
        return float(out) if out.ndim == 0 else out

    def exact(self, z) -> np.ndarray:
        """φ at every point of *z* by one batched quadrature."""
        z = np.atleast_1d(np.asarray(z, dtype=float))
        eps = np.empty_like(z)
        kappa_sq = np.empty_like(z)
        at_origin = z == 0
        if np.any(at_origin):
            static = static_reflection(self._model, self._separation, Prescription.DIRECT)
            eps[at_origin] = static.eps_static
            kappa_sq[at_origin] = static.kappa_sq
        moving = ~at_origin
        if np.any(moving):
            zm = z[moving]
            e = np.asarray(
                self._model.epsilon(SPEED_OF_LIGHT * zm / (2.0 * self._separation)), dtype=float
            ) * np.ones_like(zm)
            eps[moving] = e
            with np.errstate(invalid="ignore"):
                kappa_sq[moving] = np.where(np.isinf(e), math.inf, zm * zm * (e - 1.0))

        values, _, converged = integrate_adaptive_batch(
            lambda u: (z + u) * log_factor_array(z + u, eps, kappa_sq),
            0.0,
            X_WINDOW,
            0.01 * self._tol,
            0.01 * self._abs_tol,
        )
        if not converged:
            self.converged = False
        return values

    # ------------------------------------------------------------------ #
    # Private helpers
    # ------------------------------------------------------------------ #
    def _initial_grid(self) -> np.ndarray:
        decades = int(round(-math.log10(self._GEOMETRIC_START)))
        geometric = np.geomspace(self._GEOMETRIC_START, 1.0, decades * self._PER_DECADE + 1)
        linear = np.arange(1.0 + self._LINEAR_STEP, self.Z_MAX + 0.5 * self._LINEAR_STEP, self._LINEAR_STEP)
        return np.concatenate(([0.0], geometric, linear))

    def _build(self) -> None:
        z = self._initial_grid()
        v = self.exact(z)
        lo, hi = z[:-1], z[1:]
        for _ in range(self._MAX_ROUNDS):
            if lo.size == 0:
                break
            spline = CubicSpline(z, v)
            mids = 0.5 * (lo + hi)
            exact = self.exact(mids)
            bad = np.abs(spline(mids) - exact) > self._abs_tol
            z = np.concatenate((z, mids))
            v = np.concatenate((v, exact))
            order = np.argsort(z)
            z, v = z[order], v[order]
            lo = np.concatenate((lo[bad], mids[bad]))
            hi = np.concatenate((mids[bad], hi[bad]))
        else:
            if lo.size:
                self.converged = False
                logger.warning(
                    "profile grid for %s at a=%.4g m still refining after %d rounds",
                    self._model.kind, self._separation, self._MAX_ROUNDS,
                )
        self._nodes = z
        self._values = v
        self._spline = CubicSpline(z, v)
        logger.debug("profile for %s at a=%.4g m cached on %d nodes", self._model.kind, self._separation, z.size)

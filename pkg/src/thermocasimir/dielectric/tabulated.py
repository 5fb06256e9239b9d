"""
tabulated.py
============

ε(iζ) reconstructed from tabulated absorption data ε″(ω) with the
dispersion relation

    ε(iζ) = 1 + (2/π) ∫₀^∞ dω ω ε″(ω) / (ω² + ζ²).

CSV format (header row required):
    ┌───────────────┬────────────┐
    │ omega_rad_s   │ eps_imag   │
    └───────────────┴────────────┘

* ``omega_rad_s`` – angular frequency in rad/s, strictly increasing.
* ``eps_imag``    – imaginary part ε″(ω) ≥ 0.

ε″ is extended outside the table as follows:

* below the first point by the Drude form ω_p²ω_τ / (ω(ω² + ω_τ²)); with
  ω_τ = 0 the Drude weight collapses to ω = 0 and contributes ω_p²/ζ²,
* inside the table by log-log linear interpolation (linear on segments
  that touch a zero),
* above the last point by an ω⁻³ decay matched at the endpoint.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import ClassVar

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
from scipy.interpolate import interp1d

from thermocasimir.dielectric.models import DielectricModel, StaticLimit, _check_frequency
from thermocasimir.errors import ModelDomainError, TableFormatError
from thermocasimir.numerics.quadrature import integrate_panels
from thermocasimir.util.constants import SPEED_OF_LIGHT

__all__ = ["TabulatedAbsorption", "eval_tabulated", "synthesize_drude_table"]

logger = logging.getLogger(__name__)

_COLUMNS = ("omega_rad_s", "eps_imag")
_GL_ORDER = 8
_ZETA_CHUNK = 256


@dataclass(frozen=True, eq=False)
class TabulatedAbsorption(DielectricModel):
    """
    Dielectric model built from absorption samples {(ω_k, ε″_k)}.

    Parameters
    ----------
    omega
        Sample frequencies [rad/s], strictly increasing and positive.
    eps_imag
        ε″ at each sample, non-negative.
    omega_p, omega_tau
        Drude parameters [rad/s] of the low-frequency extension
        (``omega_p = 0`` disables it).
    """

    omega: np.ndarray
    eps_imag: np.ndarray
    omega_p: float = 0.0
    omega_tau: float = 0.0
    _linear_segment: np.ndarray = field(init=False, repr=False)
    _log_interp: interp1d | None = field(init=False, repr=False)
    _lin_interp: interp1d | None = field(init=False, repr=False)

    kind: ClassVar[str] = "tabulated"
    closed_form: ClassVar[bool] = False

    # ------------------------------------------------------------------ #
    # Construction
    # ------------------------------------------------------------------ #
    def __post_init__(self) -> None:
        omega = np.array(self.omega, dtype=float)
        eps = np.array(self.eps_imag, dtype=float)
        _validate_samples(omega, eps)
        if self.omega_p < 0 or self.omega_tau < 0:
            raise ModelDomainError("extrapolation parameters must be non-negative")

        # segments touching a zero are interpolated linearly, the rest log-log
        linear_segment = (eps[:-1] <= 0) | (eps[1:] <= 0)
        for name, value in (("omega", omega), ("eps_imag", eps), ("_linear_segment", linear_segment)):
            value.setflags(write=False)
            object.__setattr__(self, name, value)

        log_interp = lin_interp = None
        if omega.size > 1:
            log_eps = np.log(np.where(eps > 0, eps, 1.0))
            log_interp = _linear_interpolator(np.log(omega), log_eps)
            lin_interp = _linear_interpolator(omega, eps)
        object.__setattr__(self, "_log_interp", log_interp)
        object.__setattr__(self, "_lin_interp", lin_interp)

    @classmethod
    def from_csv(
        cls, csv_path: str | Path, omega_p: float = 0.0, omega_tau: float = 0.0
    ) -> "TabulatedAbsorption":
        """
        Load a table written as ``omega_rad_s,eps_imag``.

        Errors name the offending line of the file (the header is line 1).
        """
        csv_path = Path(csv_path)
        try:
            df = pd.read_csv(csv_path, dtype=str, skip_blank_lines=False)
        except FileNotFoundError:
            raise
        except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as err:
            raise TableFormatError(f"{csv_path}: {err}") from err

        columns = tuple(str(c).strip() for c in df.columns)
        if columns[:2] != _COLUMNS:
            raise TableFormatError(
                f"{csv_path}: expected header {','.join(_COLUMNS)}, got {','.join(columns)}",
                line=1,
            )
        df.columns = list(columns)
        if df.empty:
            raise TableFormatError(f"{csv_path}: table has no data rows", line=2)

        omega = df["omega_rad_s"].str.strip().map(_parse_float)
        eps = df["eps_imag"].str.strip().map(_parse_float)
        bad = omega.isnull() | eps.isnull()
        if bad.any():
            row = int(np.flatnonzero(bad.to_numpy())[0])
            raise TableFormatError(
                f"{csv_path}: value could not be parsed as a number", line=row + 2
            )
        omega_arr = omega.to_numpy(dtype=float)
        eps_arr = eps.to_numpy(dtype=float)
        _validate_samples(omega_arr, eps_arr, first_line=2, source=str(csv_path))
        logger.debug("loaded %d absorption samples from %s", omega_arr.size, csv_path)
        return cls(omega_arr, eps_arr, omega_p=omega_p, omega_tau=omega_tau)

    def to_frame(self) -> pd.DataFrame:
        """Samples as a two-column DataFrame in CSV column order."""
        return pd.DataFrame({"omega_rad_s": self.omega, "eps_imag": self.eps_imag})

    def to_csv(self, csv_path: str | Path) -> None:
        self.to_frame().to_csv(csv_path, index=False, float_format="%.17g")

    # ------------------------------------------------------------------ #
    # Public API
    # ------------------------------------------------------------------ #
    def absorption(self, omega) -> np.ndarray:
        """ε″(ω) of the extended table at real frequencies ω > 0."""
        w = np.asarray(omega, dtype=float)
        out = np.empty_like(w)
        below = w < self.omega[0]
        above = w > self.omega[-1]
        inside = ~(below | above)

        if self.omega_p > 0 and self.omega_tau > 0:
            wb = w[below]
            out[below] = self.omega_p ** 2 * self.omega_tau / (wb * (wb ** 2 + self.omega_tau ** 2))
        else:
            out[below] = 0.0
        out[above] = self.eps_imag[-1] * (self.omega[-1] / w[above]) ** 3

        out[inside] = self._interpolate(w[inside]) if self.omega.size > 1 else self.eps_imag[0]
        return out

    def epsilon(self, zeta):
        zeta = _check_frequency(zeta)
        flat = zeta.reshape(-1)
        if flat.size and (flat.min() < self.omega[0] or flat.max() > self.omega[-1]):
            logger.debug("ε(iζ) requested outside the tabulated span; extensions dominate")
        values = np.concatenate(
            [self._dispersion(flat[i:i + _ZETA_CHUNK]) for i in range(0, flat.size, _ZETA_CHUNK)]
        ) if flat.size else flat.copy()
        values = values.reshape(zeta.shape)
        return float(values) if values.ndim == 0 else values

    def static_limit(self, separation: float) -> StaticLimit:
        if self.omega_p > 0 and self.omega_tau > 0:
            return StaticLimit(0.0, math.inf)
        if self.omega_p > 0:
            return StaticLimit((2.0 * separation * self.omega_p / SPEED_OF_LIGHT) ** 2, math.inf)
        # dielectric: ε(0) = 1 + (2/π)∫ε″/ω dω stays finite
        eps_static = 1.0 + (2.0 / math.pi) * (
            self._table_integral(np.zeros(1))[0] + self.eps_imag[-1] / 3.0
        )
        return StaticLimit(0.0, float(eps_static))

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "samples": int(self.omega.size),
            "omega_p_rad_s": self.omega_p,
            "omega_tau_rad_s": self.omega_tau,
        }

    def plot_curve(self, xlim: tuple[float, float] | None = None, ax=None, **plot_kwargs):
        """
        Plot the tabulated ε″(ω) on log-log axes.

        Parameters
        ----------
        xlim : (xmin, xmax), optional
            Frequency limits in rad/s.
        ax : matplotlib.axes.Axes, optional
            Existing axis to draw on.
        **plot_kwargs :
            Forwarded to matplotlib's ``plot``.

        Returns
        -------
        ax : matplotlib.axes.Axes
        """
        if ax is None:
            fig, ax = plt.subplots()

        positive = self.eps_imag > 0
        ax.plot(self.omega[positive], self.eps_imag[positive], **plot_kwargs)
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("ω (rad/s)")
        ax.set_ylabel("ε″(ω)")
        ax.set_title("Tabulated absorption")
        if xlim is not None:
            ax.set_xlim(*xlim)
        ax.grid(True, which="both", alpha=0.3)
        return ax

    # ------------------------------------------------------------------ #
    # Private helpers
    # ------------------------------------------------------------------ #
    def _interpolate(self, w: np.ndarray) -> np.ndarray:
        """ε″ at frequencies *w* inside the tabulated span."""
        k = np.clip(np.searchsorted(self.omega, w, side="right") - 1, 0, self.omega.size - 2)
        loglog = np.exp(self._log_interp(np.log(w)))
        return np.where(self._linear_segment[k], self._lin_interp(w), loglog)

    def _table_integral(self, zeta: np.ndarray) -> np.ndarray:
        """∫ over the tabulated span of ω ε″/(ω²+ζ²), one value per ζ."""
        if self.omega.size < 2:
            return np.zeros(zeta.shape)
        u_edges = np.log(self.omega)

        def integrand(u: np.ndarray) -> np.ndarray:
            w = np.exp(u)
            eps = self._interpolate(w)
            # dω = ω du
            return w[None] ** 2 * eps[None] / (w[None] ** 2 + zeta[:, None, None] ** 2)

        return integrate_panels(integrand, u_edges, order=_GL_ORDER).sum(axis=-1)

    def _low_extension(self, zeta: np.ndarray) -> np.ndarray:
        if self.omega_p <= 0:
            return np.zeros(zeta.shape)
        if self.omega_tau == 0:
            # (2/π)·(π/2)·ω_p²/ζ², pre-divided by the 2/π applied by the caller
            return (math.pi / 2.0) * (self.omega_p / zeta) ** 2
        w1, a = self.omega[0], self.omega_tau
        b = zeta
        with np.errstate(divide="ignore", invalid="ignore"):
            general = (np.arctan(w1 / a) / a - np.arctan(w1 / b) / b) / (b ** 2 - a ** 2)
        m = 0.5 * (a + b)
        equal = w1 / (2 * m ** 2 * (w1 ** 2 + m ** 2)) + np.arctan(w1 / m) / (2 * m ** 3)
        near = np.abs(b - a) <= 1e-6 * np.maximum(a, b)
        return self.omega_p ** 2 * a * np.where(near, equal, general)

    def _high_extension(self, zeta: np.ndarray) -> np.ndarray:
        r = zeta / self.omega[-1]
        with np.errstate(divide="ignore", invalid="ignore"):
            exact = (1.0 - np.arctan(r) / r) / r ** 2
        series = 1.0 / 3.0 - r ** 2 / 5.0 + r ** 4 / 7.0 - r ** 6 / 9.0
        return self.eps_imag[-1] * np.where(r < 1e-2, series, exact)

    def _dispersion(self, zeta: np.ndarray) -> np.ndarray:
        total = self._low_extension(zeta) + self._table_integral(zeta) + self._high_extension(zeta)
        return 1.0 + (2.0 / math.pi) * total


# --------------------------------------------------------------------------- #
# Helper functions
# --------------------------------------------------------------------------- #
def _linear_interpolator(x: np.ndarray, y: np.ndarray) -> interp1d:
    return interp1d(
        x,
        y,
        kind="linear",
        assume_sorted=True,
        bounds_error=False,
        fill_value="extrapolate",
    )


def _parse_float(text) -> float:
    """Exact decimal-to-double conversion; unparseable cells become NaN."""
    try:
        return float(text)
    except (TypeError, ValueError):
        return math.nan


def _validate_samples(
    omega: np.ndarray,
    eps: np.ndarray,
    first_line: int | None = None,
    source: str = "table",
) -> None:
    def where(i: int) -> int | None:
        return None if first_line is None else first_line + i

    def label(i: int) -> str:
        return f"{source}, sample {i}" if first_line is None else source

    if omega.size == 0:
        raise TableFormatError(f"{source}: absorption table is empty")
    if omega.shape != eps.shape or omega.ndim != 1:
        raise TableFormatError(f"{source}: ω and ε″ must be 1-D arrays of equal length")
    bad = np.flatnonzero(~np.isfinite(omega) | ~np.isfinite(eps))
    if bad.size:
        raise TableFormatError(f"{label(bad[0])}: non-finite value", line=where(bad[0]))
    bad = np.flatnonzero(omega <= 0)
    if bad.size:
        raise TableFormatError(f"{label(bad[0])}: frequency must be positive", line=where(bad[0]))
    bad = np.flatnonzero(np.diff(omega) <= 0)
    if bad.size:
        i = int(bad[0]) + 1
        raise TableFormatError(
            f"{label(i)}: frequencies must be strictly increasing", line=where(i)
        )
    bad = np.flatnonzero(eps < 0)
    if bad.size:
        raise TableFormatError(f"{label(bad[0])}: ε″ must be non-negative", line=where(bad[0]))


def eval_tabulated(
    samples: TabulatedAbsorption | tuple[np.ndarray, np.ndarray],
    extrapolation: tuple[float, float],
    zeta,
):
    """
    ε(iζ) from absorption samples via the dispersion relation.

    *samples* is either a :class:`TabulatedAbsorption` (its own extension
    parameters are replaced by *extrapolation*) or an ``(ω, ε″)`` pair.
    """
    omega_p, omega_tau = extrapolation
    if isinstance(samples, TabulatedAbsorption):
        omega, eps = samples.omega, samples.eps_imag
    else:
        omega, eps = samples
    return TabulatedAbsorption(omega, eps, omega_p=omega_p, omega_tau=omega_tau).epsilon(zeta)


def synthesize_drude_table(
    omega_p: float,
    omega_tau: float,
    omega_min: float,
    omega_max: float,
    points_per_decade: int = 50,
) -> TabulatedAbsorption:
    """
    Absorption table sampled from the exact Drude ε″ on a log grid.

    The Drude parameters are also used for the low-frequency extension, so
    the dispersion relation should reproduce :func:`eval_drude`.
    """
    decades = math.log10(omega_max / omega_min)
    n = max(2, int(math.ceil(decades * points_per_decade)) + 1)
    omega = np.geomspace(omega_min, omega_max, n)
    eps = omega_p ** 2 * omega_tau / (omega * (omega ** 2 + omega_tau ** 2))
    return TabulatedAbsorption(omega, eps, omega_p=omega_p, omega_tau=omega_tau)

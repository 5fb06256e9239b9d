"""
scenario_controller.py
======================

Loads scenario files, expands parameter sweeps and dispatches every sweep
point to the requested computation.

A scenario is a TOML document::

    [scenario]   name, description, kind, prescription, tolerance
    [model]      kind plus model parameters (see ``model_from_spec``)
    [geometry]   separation_m, radius_m, configuration
    [thermal]    temperature_k
    [sweep]      parameter, start, stop, points, spacing   (optional)

Sweep points are computed on a thread pool and reported in input order.
"""
from __future__ import annotations

import logging
import math
import os
import time
import tomllib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from thermocasimir.corrections import (
    extract_alpha,
    linear_correction_expansion,
    linear_correction_plasma,
    temperature_correction,
)
from thermocasimir.dielectric import DielectricModel, model_from_spec
from thermocasimir.errors import CasimirError, ScenarioError
from thermocasimir.lifshitz import (
    Configuration,
    Geometry,
    Prescription,
    ThermalState,
    matsubara_force,
    plate_plate_pressure,
    zero_temperature_force,
)
from thermocasimir.numerics import DEFAULT_REL_TOL
from thermocasimir.poisson import poisson_force
from thermocasimir.util.constants import CONSTANTS_VERSION
from thermocasimir.util.resources import preset_path

__all__ = [
    "ComputationKind",
    "SweepSpec",
    "Scenario",
    "PointRecord",
    "RunReport",
    "parse_scenario",
    "load_scenario",
    "load_preset",
    "evaluate_point",
    "run",
    "worker_count",
]

logger = logging.getLogger(__name__)

THREADS_ENV = "CASIMIR_THREADS"
_DEFAULT_WORKERS = 4

_MODEL_PARAMETERS = ("omega_p_rad_s", "omega_tau_rad_s", "resistivity_ohm_m")
_SWEEPABLE = ("separation_m", "radius_m", "temperature_k") + _MODEL_PARAMETERS


class ComputationKind(str, Enum):
    FORCE = "force"
    ZERO_T_FORCE = "zero_T_force"
    CORRECTION = "correction"
    LINEAR_PLASMA = "linear_plasma"
    EXPANSION = "expansion"
    POISSON_CHECK = "poisson_check"
    ALPHA_EXTRACT = "alpha_extract"


@dataclass(frozen=True)
class SweepSpec:
    """``points`` values of ``parameter`` from ``start`` to ``stop``, linear or log spaced."""

    parameter: str
    start: float
    stop: float
    points: int
    spacing: str = "lin"

    def __post_init__(self) -> None:
        if self.parameter not in _SWEEPABLE:
            raise ScenarioError(
                f"cannot sweep {self.parameter!r}; choose one of {', '.join(_SWEEPABLE)}"
            )
        if self.spacing not in ("lin", "log"):
            raise ScenarioError(f"sweep spacing must be 'lin' or 'log' (got {self.spacing!r})")
        if self.points < 0:
            raise ScenarioError("sweep points must be >= 0")
        if not (self.start > 0 and self.stop > 0):
            raise ScenarioError("sweep range must be positive")
        if self.stop < self.start or (self.points > 1 and self.stop == self.start):
            raise ScenarioError("sweep range must be ordered: start < stop")

    def values(self) -> np.ndarray:
        if self.points == 0:
            return np.empty(0)
        if self.spacing == "log":
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)


@dataclass(frozen=True)
class Scenario:
    """A validated computation request."""

    name: str
    kind: ComputationKind
    model_spec: Mapping[str, Any]
    model: DielectricModel
    geometry: Geometry
    thermal: ThermalState
    prescription: Prescription = Prescription.SCHWINGER
    tolerance: float = DEFAULT_REL_TOL
    sweep: SweepSpec | None = None
    description: str = ""
    base_dir: Path | None = None

    @property
    def parameter(self) -> str:
        return self.sweep.parameter if self.sweep else "separation_m"

    def points(self) -> np.ndarray:
        if self.sweep is None:
            return np.array([self.geometry.separation])
        return self.sweep.values()

    @property
    def unit(self) -> str:
        if self.kind is ComputationKind.ALPHA_EXTRACT:
            return "1"
        if self.kind is ComputationKind.FORCE and self.geometry.configuration is Configuration.PLATE_PLATE:
            return "N/m^2"
        return "N"

    def with_overrides(
        self, *, tolerance: float | None = None, prescription: Prescription | str | None = None
    ) -> "Scenario":
        """Copy with command-line overrides applied."""
        changes: dict[str, Any] = {}
        if tolerance is not None:
            if not tolerance > 0:
                raise ScenarioError("tolerance must be positive")
            changes["tolerance"] = float(tolerance)
        if prescription is not None:
            changes["prescription"] = _prescription(prescription)
        return replace(self, **changes)


@dataclass(frozen=True)
class PointRecord:
    """Outcome of one sweep point."""

    param: float
    value: float
    abs_error: float
    n_zero: float = math.nan
    n_terms: int = 0
    converged: bool = True
    breakdown: Mapping[str, float] = field(default_factory=dict)
    error: str | None = None

    @property
    def failed(self) -> bool:
        return self.error is not None


@dataclass(frozen=True)
class RunReport:
    """All sweep points of one scenario run plus run metadata."""

    scenario: str
    kind: str
    parameter: str
    unit: str
    records: tuple[PointRecord, ...]
    metadata: Mapping[str, Any]

    @property
    def all_failed(self) -> bool:
        return bool(self.records) and all(r.failed for r in self.records)


# --------------------------------------------------------------------------- #
# Loading
# --------------------------------------------------------------------------- #
def _section(document: Mapping[str, Any], name: str, required: bool = True) -> Mapping[str, Any]:
    table = document.get(name)
    if table is None:
        if required:
            raise ScenarioError(f"scenario is missing the [{name}] table")
        return {}
    if not isinstance(table, Mapping):
        raise ScenarioError(f"[{name}] must be a table")
    return table


def _number(table: Mapping[str, Any], key: str, where: str) -> float:
    try:
        value = table[key]
    except KeyError:
        raise ScenarioError(f"[{where}] needs {key!r}") from None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"[{where}] {key!r} must be a number (got {value!r})")
    return float(value)


def _integer(table: Mapping[str, Any], key: str, where: str) -> int:
    value = _number(table, key, where)
    if not value.is_integer():
        raise ScenarioError(f"[{where}] {key!r} must be a whole number (got {table[key]!r})")
    return int(value)


def _prescription(value: Any) -> Prescription:
    try:
        return Prescription(str(value).lower())
    except ValueError:
        raise ScenarioError(f"unknown prescription {value!r}; use 'schwinger' or 'direct'") from None


def parse_scenario(document: Mapping[str, Any], base_dir: Path | None = None) -> Scenario:
    """Validate a parsed TOML document and build the :class:`Scenario`."""
    meta = _section(document, "scenario")
    model_table = dict(_section(document, "model"))
    geometry_table = _section(document, "geometry")
    thermal_table = _section(document, "thermal")
    sweep_table = _section(document, "sweep", required=False)

    try:
        kind = ComputationKind(meta.get("kind", ComputationKind.FORCE.value))
    except ValueError:
        choices = ", ".join(k.value for k in ComputationKind)
        raise ScenarioError(f"unknown computation kind {meta.get('kind')!r}; choose one of {choices}") from None

    tolerance = _number(meta, "tolerance", "scenario") if "tolerance" in meta else DEFAULT_REL_TOL
    if not tolerance > 0:
        raise ScenarioError("tolerance must be positive")

    sweep = None
    if sweep_table:
        sweep = SweepSpec(
            parameter=str(sweep_table.get("parameter", "")),
            start=_number(sweep_table, "start", "sweep"),
            stop=_number(sweep_table, "stop", "sweep"),
            points=_integer(sweep_table, "points", "sweep"),
            spacing=str(sweep_table.get("spacing", "lin")),
        )

    try:
        model = model_from_spec(model_table, base_dir)
        geometry = Geometry(
            _number(geometry_table, "separation_m", "geometry"),
            _number(geometry_table, "radius_m", "geometry"),
            Configuration(geometry_table.get("configuration", Configuration.SPHERE_PLATE.value)),
        )
        thermal = ThermalState(_number(thermal_table, "temperature_k", "thermal"))
    except ScenarioError:
        raise
    except (CasimirError, ValueError, TypeError, FileNotFoundError) as exc:
        raise ScenarioError(str(exc)) from exc

    return Scenario(
        name=str(meta.get("name", "scenario")),
        kind=kind,
        model_spec=model_table,
        model=model,
        geometry=geometry,
        thermal=thermal,
        prescription=_prescription(meta.get("prescription", Prescription.SCHWINGER.value)),
        tolerance=tolerance,
        sweep=sweep,
        description=str(meta.get("description", "")),
        base_dir=base_dir,
    )


def load_scenario(path: str | Path) -> Scenario:
    """Read and validate a scenario TOML file."""
    path = Path(path)
    try:
        with path.open("rb") as fh:
            document = tomllib.load(fh)
    except FileNotFoundError:
        raise ScenarioError(f"scenario file {path} does not exist") from None
    except OSError as exc:
        raise ScenarioError(f"{path}: {exc.strerror or exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc
    return parse_scenario(document, path.parent)


def load_preset(name: str) -> Scenario:
    """Scenario shipped with the package under *name*."""
    try:
        text = preset_path(name).read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise ScenarioError(str(exc)) from exc
    return parse_scenario(tomllib.loads(text))


# --------------------------------------------------------------------------- #
# Evaluation
# --------------------------------------------------------------------------- #
def _point_inputs(scenario: Scenario, value: float) -> tuple[DielectricModel, Geometry, ThermalState]:
    parameter = scenario.parameter
    model, geometry, thermal = scenario.model, scenario.geometry, scenario.thermal
    if parameter == "separation_m":
        geometry = geometry.with_separation(value)
    elif parameter == "radius_m":
        geometry = replace(geometry, radius=value)
    elif parameter == "temperature_k":
        thermal = ThermalState(value)
    else:
        spec = dict(scenario.model_spec)
        spec[parameter] = value
        model = model_from_spec(spec, scenario.base_dir)
    return model, geometry, thermal


def _omega_p(model: DielectricModel, kind: ComputationKind) -> float:
    omega_p = getattr(model, "omega_p", None)
    if model.kind != "plasma" or omega_p is None:
        raise ScenarioError(f"computation {kind.value!r} is defined for the plasma model only")
    return float(omega_p)


def evaluate_point(scenario: Scenario, value: float) -> PointRecord:
    """Compute one sweep point; failures are recorded, not raised."""
    try:
        return _evaluate(scenario, float(value))
    except CasimirError as exc:
        logger.error("%s at %s=%.6g failed: %s", scenario.name, scenario.parameter, value, exc)
        return PointRecord(float(value), math.nan, math.nan, converged=False, error=str(exc))


def _evaluate(scenario: Scenario, value: float) -> PointRecord:
    model, geom, thermal = _point_inputs(scenario, value)
    kind, tol, prescription = scenario.kind, scenario.tolerance, scenario.prescription

    if kind is ComputationKind.FORCE:
        if geom.configuration is Configuration.PLATE_PLATE:
            pressure = plate_plate_pressure(model, geom.separation, thermal, prescription, tol)
            return PointRecord(
                value, pressure.value, pressure.abs_error,
                converged=pressure.converged, breakdown={"step_m": pressure.step},
            )
        result = matsubara_force(model, geom, thermal, prescription, tol)
        return PointRecord(
            value, result.total, result.abs_error, result.n_zero, result.n_max, result.converged,
            {"positive_sum_N": result.positive_sum},
        )
    if kind is ComputationKind.ZERO_T_FORCE:
        estimate = zero_temperature_force(model, geom, tol)
        return PointRecord(value, estimate.value, estimate.abs_error, converged=estimate.converged)
    if kind is ComputationKind.CORRECTION:
        estimate = temperature_correction(model, geom, thermal, prescription, tol)
        return PointRecord(value, estimate.value, estimate.abs_error, converged=estimate.converged)
    if kind is ComputationKind.LINEAR_PLASMA:
        estimate = linear_correction_plasma(_omega_p(model, kind), geom, thermal, tol)
        return PointRecord(value, estimate.value, estimate.abs_error, converged=estimate.converged)
    if kind is ComputationKind.EXPANSION:
        return PointRecord(value, linear_correction_expansion(_omega_p(model, kind), geom, thermal), 0.0)
    if kind is ComputationKind.POISSON_CHECK:
        reference = matsubara_force(model, geom, thermal, prescription, tol)
        resummed = poisson_force(model, geom, thermal, tol=tol, prescription=prescription)
        return PointRecord(
            value, resummed.value, resummed.abs_error, reference.n_zero, resummed.m_max,
            resummed.converged and reference.converged,
            {
                "matsubara_N": reference.total,
                "relative_difference": abs(resummed.value - reference.total) / abs(reference.total),
            },
        )
    alpha = extract_alpha(model, geom, thermal, prescription, tol)
    return PointRecord(value, alpha, tol * abs(alpha))


def worker_count() -> int:
    """Worker threads for sweeps, capped by ``CASIMIR_THREADS`` and the CPU count."""
    default = min(_DEFAULT_WORKERS, os.cpu_count() or 1)
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return default
    try:
        cap = int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer", THREADS_ENV, raw)
        return default
    if cap < 1:
        logger.warning("ignoring %s=%r: must be positive", THREADS_ENV, raw)
        return default
    cpus = os.cpu_count() or 1
    if cap > cpus:
        logger.warning("%s=%d exceeds the %d available CPUs; using %d", THREADS_ENV, cap, cpus, cpus)
    return min(cap, cpus)


def run(scenario: Scenario, *, workers: int | None = None) -> RunReport:
    """Evaluate every sweep point of *scenario*; records keep the input order."""
    points = scenario.points()
    started = time.perf_counter()
    workers = workers or worker_count()
    if len(points) <= 1 or workers == 1:
        records = [evaluate_point(scenario, p) for p in points]
    else:
        with ThreadPoolExecutor(max_workers=min(workers, len(points))) as pool:
            records = list(pool.map(lambda p: evaluate_point(scenario, p), points))
    wall_time = time.perf_counter() - started
    logger.info("%s: %d point(s) in %.2f s", scenario.name, len(records), wall_time)

    return RunReport(
        scenario=scenario.name,
        kind=scenario.kind.value,
        parameter=scenario.parameter,
        unit=scenario.unit,
        records=tuple(records),
        metadata={
            "constants_version": CONSTANTS_VERSION,
            "tolerance": scenario.tolerance,
            "prescription": scenario.prescription.value,
            "model": scenario.model.describe(),
            "description": scenario.description,
            "wall_time_s": wall_time,
        },
    )

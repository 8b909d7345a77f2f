"""Detuning sweeps: grid evaluation, zero-absorption windows, extrema."""

from dataclasses import dataclass, field

import numpy as np

from .dynamics import build_liouvillian, steady_state
from .errors import (
    AllPointsFailed,
    ClausiusMossottiPole,
    NoIntervals,
    SingularSystem,
    ZeroProbe,
)
from .optics import OpticalResponse, response_from_state
from .params import SystemParams

SWEEPABLE_AXES = ("delta_p", "delta_s", "delta_c", "omega_p", "omega_s", "omega_c")


@dataclass(frozen=True)
class SweepSpec:
    base: SystemParams
    start: float
    stop: float
    points: int
    axis: str = "delta_p"
    abs_threshold: float = 1e-2

    def __post_init__(self):
        if self.axis not in SWEEPABLE_AXES:
            raise ValueError(f"axis must be one of {SWEEPABLE_AXES}")
        if not self.start < self.stop:
            raise ValueError("start must be < stop")
        if self.points < 2:
            raise ValueError("points must be >= 2")
        if not self.abs_threshold > 0:
            raise ValueError("abs_threshold must be positive")

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)


@dataclass(frozen=True)
class SweepRow:
    axis_value: float
    status: str  # "ok" or the error class name
    response: OpticalResponse | None = None
    populations: tuple[float, float, float, float] | None = None


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: list[SweepRow]
    zero_absorption_intervals: list[tuple[float, float]] = field(default_factory=list)
    left_handed_intervals: list[tuple[float, float]] = field(default_factory=list)
    re_n_extremum: tuple[float, float] | None = None


def _evaluate_point(base: SystemParams, axis: str, value: float) -> SweepRow:
    params = base.replace(**{axis: float(value)})
    try:
        rho = steady_state(build_liouvillian(params))
        resp = response_from_state(rho, params)
    except (SingularSystem, ClausiusMossottiPole, ZeroProbe) as exc:
        return SweepRow(axis_value=float(value), status=type(exc).__name__)
    pops = tuple(float(rho[i, i].real) for i in range(4))
    return SweepRow(axis_value=float(value), status="ok",
                    response=resp, populations=pops)


def extract_intervals(rows: list[SweepRow], abs_threshold: float,
                      predicate=None) -> list[tuple[float, float]]:
    """Maximal runs of consecutive valid rows satisfying the predicate.

    Default predicate is |Im n| < abs_threshold (zero absorption).
    Endpoints are grid values; single-point runs give degenerate
    intervals [x, x]. Failed rows break runs and are never included.
    """
    if not rows:
        raise ValueError("rows must be nonempty")
    if predicate is None:
        predicate = lambda r: abs(r.response.n.imag) < abs_threshold

    intervals: list[tuple[float, float]] = []
    run_start = None
    prev = None
    for row in rows:
        ok = row.status == "ok" and predicate(row)
        if ok and run_start is None:
            run_start = row.axis_value
        if not ok and run_start is not None:
            intervals.append((run_start, prev.axis_value))
            run_start = None
        if ok:
            prev = row
    if run_start is not None:
        intervals.append((run_start, prev.axis_value))
    return intervals


def locate_extremum(rows: list[SweepRow],
                    intervals: list[tuple[float, float]]) -> tuple[float, float]:
    """Grid point with the most negative Re n inside the given intervals.

    Ties break toward the smaller axis value.
    """
    if not intervals:
        raise NoIntervals("no intervals to search")
    best = None
    for row in rows:
        if row.status != "ok":
            continue
        if not any(lo <= row.axis_value <= hi for lo, hi in intervals):
            continue
        re_n = float(row.response.n.real)
        if best is None or re_n < best[1]:
            best = (row.axis_value, re_n)
    if best is None:
        raise NoIntervals("intervals contain no valid grid points")
    return best


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate the response on the grid and derive interval diagnostics."""
    rows = [_evaluate_point(spec.base, spec.axis, v) for v in spec.grid()]
    if all(r.status != "ok" for r in rows):
        raise AllPointsFailed("every grid point of the sweep errored")

    zero_abs = extract_intervals(rows, spec.abs_threshold)
    lh = extract_intervals(rows, spec.abs_threshold,
                           predicate=lambda r: r.response.left_handed)
    extremum = None
    if zero_abs:
        extremum = locate_extremum(rows, zero_abs)
    return SweepResult(
        spec=spec,
        rows=rows,
        zero_absorption_intervals=zero_abs,
        left_handed_intervals=lh,
        re_n_extremum=extremum,
    )

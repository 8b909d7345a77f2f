"""Command-line entry point: configuration, presets, CSV/JSON emission."""

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass

from .errors import NrivaporError
from .params import PARAM_FIELDS, SystemParams
from .presets import PRESETS, preset_params, preset_sweep
from .sweep import SweepResult, SweepSpec, run_sweep


class UnknownKey(NrivaporError):
    pass


class BadValue(NrivaporError):
    pass


class MissingPresetAndParams(NrivaporError):
    pass


class IoFailure(NrivaporError):
    pass


_SWEEP_KEYS = ("start", "stop", "points", "axis", "abs_threshold")
_INT_KEYS = ("points",)
_STR_KEYS = ("axis",)

CSV_COLUMNS = [
    "delta_p_over_gamma",
    "re_eps", "im_eps",
    "re_mu", "im_mu",
    "re_n", "im_n",
    "re_gamma_e_m3", "im_gamma_e_m3",
    "re_gamma_m_m3", "im_gamma_m_m3",
    "left_handed", "gain_flag", "status",
]
POP_COLUMNS = ["rho11", "rho22", "rho33", "rho44"]


@dataclass(frozen=True)
class RunConfig:
    spec: SweepSpec
    out: str
    format: str = "csv"
    emit_populations: bool = False


def _fmt(x: float) -> str:
    # 17 significant digits: lossless text round-trip for doubles
    return f"{x:.16e}"


def _parse_value(key: str, raw: str):
    if key in _STR_KEYS:
        return raw
    try:
        return int(raw) if key in _INT_KEYS else float(raw)
    except ValueError:
        raise BadValue(f"value for {key!r} is not numeric: {raw!r}") from None


def _read_config_file(path: str) -> dict:
    values = {}
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise IoFailure(f"cannot read config file {path}: {exc}") from None
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BadValue(f"{path}:{lineno}: expected 'key = value'")
        key, raw = (s.strip() for s in line.split("=", 1))
        values[key] = raw
    return values


def parse_config(argv: list[str] | None = None) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog="nrivapor",
        description="Sweep the optical response of the four-level vapor "
                    "over probe detuning and emit plot-ready tables.",
    )
    parser.add_argument("--preset", choices=sorted(PRESETS), default=None,
                        help="figure preset parameter set")
    parser.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                        help="override a system or sweep parameter")
    parser.add_argument("--sweep", default=None, metavar="START,STOP,POINTS",
                        help="probe-detuning grid in units of gamma")
    parser.add_argument("--config", default=None, metavar="FILE",
                        help="flat key = value config file (flags override)")
    parser.add_argument("--out", default="sweep.csv", help="output path")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--emit-populations", action="store_true")
    args = parser.parse_args(argv)

    raw: dict[str, str] = {}
    if args.config:
        raw.update(_read_config_file(args.config))
    for item in args.param:
        if "=" not in item:
            raise BadValue(f"--param expects KEY=VALUE, got {item!r}")
        key, val = item.split("=", 1)
        raw[key.strip()] = val.strip()

    known = set(PARAM_FIELDS) | set(_SWEEP_KEYS)
    for key in raw:
        if key not in known:
            raise UnknownKey(f"unknown parameter key {key!r}")
    values = {k: _parse_value(k, v) for k, v in raw.items()}

    param_overrides = {k: v for k, v in values.items() if k in PARAM_FIELDS}
    sweep_overrides = {k: v for k, v in values.items() if k in _SWEEP_KEYS}

    if args.sweep:
        parts = args.sweep.split(",")
        if len(parts) != 3:
            raise BadValue(f"--sweep expects START,STOP,POINTS, got {args.sweep!r}")
        sweep_overrides["start"] = _parse_value("start", parts[0])
        sweep_overrides["stop"] = _parse_value("stop", parts[1])
        sweep_overrides["points"] = _parse_value("points", parts[2])

    if args.preset:
        base = preset_params(args.preset)
        start, stop, points = preset_sweep(args.preset)
    else:
        if not param_overrides or not {"start", "stop", "points"} <= set(sweep_overrides):
            raise MissingPresetAndParams(
                "need --preset, or explicit parameters plus a sweep grid"
            )
        base = SystemParams()
        start = stop = points = None  # filled from overrides below

    if param_overrides:
        try:
            base = base.replace(**param_overrides)
        except ValueError as exc:
            raise BadValue(str(exc)) from None

    spec_kw = dict(start=start, stop=stop, points=points)
    spec_kw.update(sweep_overrides)
    try:
        spec = SweepSpec(base=base, **spec_kw)
    except ValueError as exc:
        raise BadValue(str(exc)) from None

    return RunConfig(spec=spec, out=args.out, format=args.format,
                     emit_populations=args.emit_populations)


def _row_cells(row, emit_populations: bool) -> list[str]:
    cells = [_fmt(row.axis_value)]
    n_numeric = 10
    if row.status == "ok":
        r = row.response
        for z in (r.eps_r, r.mu_r, r.n, r.gamma_e, r.gamma_m):
            cells.append(_fmt(z.real))
            cells.append(_fmt(z.imag))
        cells += [str(int(r.left_handed)), str(int(r.gain_flag)), "ok"]
    else:
        cells += [""] * n_numeric + ["", "", row.status]
    if emit_populations:
        if row.status == "ok":
            cells += [_fmt(p) for p in row.populations]
        else:
            cells += [""] * 4
    return cells


def _summary_dict(result: SweepResult) -> dict:
    return {
        "zero_absorption_intervals": [list(iv) for iv in result.zero_absorption_intervals],
        "left_handed_intervals": [list(iv) for iv in result.left_handed_intervals],
        "re_n_extremum": list(result.re_n_extremum) if result.re_n_extremum else None,
        "abs_threshold": result.spec.abs_threshold,
        "axis": result.spec.axis,
        "points": result.spec.points,
    }


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from None


def emit(result: SweepResult, config: RunConfig) -> list[str]:
    """Write the data table and summary; returns the paths written."""
    columns = CSV_COLUMNS + (POP_COLUMNS if config.emit_populations else [])
    if config.format == "csv":
        lines = [",".join(columns)]
        for row in result.rows:
            lines.append(",".join(_row_cells(row, config.emit_populations)))
        _atomic_write(config.out, "\n".join(lines) + "\n")
        summary_path = config.out + ".summary.json"
        _atomic_write(summary_path, json.dumps(_summary_dict(result), indent=2) + "\n")
        return [config.out, summary_path]

    doc = {
        "columns": columns,
        "rows": [_row_cells(row, config.emit_populations) for row in result.rows],
        "summary": _summary_dict(result),
    }
    _atomic_write(config.out, json.dumps(doc, indent=2) + "\n")
    return [config.out]


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_config(argv)
        result = run_sweep(config.spec)
        paths = emit(result, config)
    except NrivaporError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    for p in paths:
        print(p)
    summary = _summary_dict(result)
    print(f"zero-absorption intervals: {summary['zero_absorption_intervals']}")
    print(f"Re n extremum: {summary['re_n_extremum']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Figure presets: the ten published parameter sets and their grids."""

from .params import SystemParams

_FIG2_BASE = dict(
    delta_c=0.0, delta_s=0.0,
    gamma1=0.05, gamma2=0.01, gamma3=0.01, gamma4=0.1,
    omega_p=0.1, omega_s=0.1,
    number_density=5.0e24,
)
_FIG3_BASE = dict(_FIG2_BASE, delta_c=-1.5, delta_s=1.5, omega_p=0.8, omega_s=0.8)
# the off-resonant signal-field variant keeps delta_c = 0
_FIG4_BASE = dict(_FIG2_BASE, delta_s=1.5, omega_c=3.5)

PRESETS: dict[str, dict] = {
    "fig2-oc1.0": dict(_FIG2_BASE, omega_c=1.0),
    "fig2-oc1.5": dict(_FIG2_BASE, omega_c=1.5),
    "fig2-oc3.5": dict(_FIG2_BASE, omega_c=3.5),
    "fig2-oc4.0": dict(_FIG2_BASE, omega_c=4.0),
    "fig3-oc1.0": dict(_FIG3_BASE, omega_c=1.0),
    "fig3-oc1.5": dict(_FIG3_BASE, omega_c=1.5),
    "fig3-oc3.5": dict(_FIG3_BASE, omega_c=3.5),
    "fig4-op0.1": dict(_FIG4_BASE, omega_p=0.1, omega_s=0.1),
    "fig4-op1.0": dict(_FIG4_BASE, omega_p=1.0, omega_s=1.0),
    "fig4-op2.8": dict(_FIG4_BASE, omega_p=2.8, omega_s=2.8),
}

# default probe-detuning grids (start, stop, points), multiples of gamma
_FIG2_GRID = (-6.0, 6.0, 1201)
_WIDE_GRID = (-12.0, 14.0, 1201)


def preset_params(name: str) -> SystemParams:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; known: {sorted(PRESETS)}")
    return SystemParams(**PRESETS[name])


def preset_sweep(name: str) -> tuple[float, float, int]:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; known: {sorted(PRESETS)}")
    return _FIG2_GRID if name.startswith("fig2") else _WIDE_GRID

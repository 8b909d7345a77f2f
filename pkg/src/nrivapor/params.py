"""Physical input parameters and fixed constants.

All rates and detunings are stored as multiples of the scale unit
``gamma`` (default 1e8 s^-1); SI units enter only in the optics layer.
"""

from dataclasses import dataclass, fields

# CODATA constants (SI)
EPS0 = 8.8541878128e-12  # F/m
MU0 = 1.25663706212e-6   # H/m
C = 2.99792458e8         # m/s
HBAR = 1.054571817e-34   # J*s


@dataclass(frozen=True)
class SystemParams:
    """All physical inputs for one parameter point.

    Rabi frequencies, detunings and decay constants are dimensionless
    multiples of ``gamma``; ``number_density`` is atoms/m^3, ``d23`` is
    the electric dipole moment (C*m), ``mu12`` the magnetic dipole
    moment (J/T).
    """

    omega_p: float = 0.1
    omega_s: float = 0.1
    omega_c: float = 1.0
    delta_p: float = 0.0
    delta_s: float = 0.0
    delta_c: float = 0.0
    gamma1: float = 0.05
    gamma2: float = 0.01
    gamma3: float = 0.01
    gamma4: float = 0.1
    number_density: float = 5.0e24
    # calibrated so the published window structure appears; see README
    d23: float = 1.0e-28
    mu12: float = 2.7822e-20
    gamma: float = 1.0e8

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError("gamma must be positive")
        for name in ("omega_p", "omega_s", "omega_c",
                     "gamma1", "gamma2", "gamma3", "gamma4"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if not self.number_density > 0:
            raise ValueError("number_density must be positive")
        if not self.d23 > 0:
            raise ValueError("d23 must be positive")
        if not self.mu12 > 0:
            raise ValueError("mu12 must be positive")

    def replace(self, **kw) -> "SystemParams":
        vals = {f.name: getattr(self, f.name) for f in fields(self)}
        vals.update(kw)
        return SystemParams(**vals)


PARAM_FIELDS = tuple(f.name for f in fields(SystemParams))

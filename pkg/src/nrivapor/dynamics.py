"""Equations of motion for the four-level system and their solvers.

The density matrix is a 4x4 complex array; it is vectorized row-major,
vec index of rho_ij (1-based i, j) = 4*(i-1) + (j-1). The generator L
is 16x16 in units of gamma, so d(vec rho)/dt = L @ vec rho with time
measured in 1/gamma.
"""

import numpy as np

from .errors import SingularSystem, StepTooLarge
from .kernels import rk4_evolve
from .params import SystemParams

TRACE_INDICES = (0, 5, 10, 15)


def idx(i: int, j: int) -> int:
    """Vectorization index of rho_ij, i, j in 1..4."""
    return 4 * (i - 1) + (j - 1)


def vectorize(rho: np.ndarray) -> np.ndarray:
    return np.asarray(rho, dtype=np.complex128).reshape(16)


def unvectorize(v: np.ndarray) -> np.ndarray:
    return np.asarray(v, dtype=np.complex128).reshape(4, 4)


def hermiticity_defect(rho: np.ndarray) -> float:
    return float(np.max(np.abs(rho - rho.conj().T)))


def build_liouvillian(params: SystemParams) -> np.ndarray:
    """16x16 generator of the density-matrix equations of motion.

    Upper-triangle coherence equations are entered explicitly; the
    lower triangle is closed by complex conjugation (Hermiticity).
    """
    op, os_, oc = params.omega_p, params.omega_s, params.omega_c
    dp, ds, dc = params.delta_p, params.delta_s, params.delta_c
    g1, g2, g3, g4 = params.gamma1, params.gamma2, params.gamma3, params.gamma4

    L = np.zeros((16, 16), dtype=np.complex128)

    def add(row_ij, col_ij, coeff):
        L[idx(*row_ij), idx(*col_ij)] += coeff

    # populations
    add((1, 1), (3, 3), 2 * g3)
    add((1, 1), (2, 2), 2 * g1)
    add((1, 1), (1, 3), 1j * os_)
    add((1, 1), (3, 1), -1j * os_)

    add((2, 2), (3, 3), 2 * g2)
    add((2, 2), (2, 2), -2 * g1)
    add((2, 2), (2, 3), 1j * op)
    add((2, 2), (3, 2), -1j * op)

    add((3, 3), (3, 3), -2 * (g2 + g3))
    add((3, 3), (4, 4), 2 * g4)
    add((3, 3), (1, 3), -1j * os_)
    add((3, 3), (3, 1), 1j * os_)
    add((3, 3), (2, 3), -1j * op)
    add((3, 3), (3, 2), 1j * op)
    add((3, 3), (3, 4), 1j * oc)
    add((3, 3), (4, 3), -1j * oc)

    add((4, 4), (4, 4), -2 * g4)
    add((4, 4), (3, 4), -1j * oc)
    add((4, 4), (4, 3), 1j * oc)

    # upper-triangle coherences
    add((1, 2), (1, 2), -(g1 - 1j * (ds - dp)))
    add((1, 2), (1, 3), 1j * op)
    add((1, 2), (3, 2), -1j * os_)

    add((1, 3), (1, 3), -(g2 + g3 - 1j * ds))
    add((1, 3), (1, 2), 1j * op)
    add((1, 3), (1, 4), 1j * oc)
    add((1, 3), (1, 1), 1j * os_)
    add((1, 3), (3, 3), -1j * os_)

    add((1, 4), (1, 4), -(g4 - 1j * (ds + dc)))
    add((1, 4), (1, 3), 1j * oc)
    add((1, 4), (3, 4), -1j * os_)

    add((2, 3), (2, 3), -(g2 + g3 - 1j * dp))
    add((2, 3), (2, 1), 1j * os_)
    add((2, 3), (2, 4), 1j * oc)
    add((2, 3), (2, 2), 1j * op)
    add((2, 3), (3, 3), -1j * op)

    add((2, 4), (2, 4), -(g1 + g4 - 1j * (dp + dc)))
    add((2, 4), (2, 3), 1j * oc)
    add((2, 4), (3, 4), -1j * op)

    add((3, 4), (3, 4), -(g2 + g3 + g4 - 1j * dc))
    add((3, 4), (1, 4), -1j * os_)
    add((3, 4), (2, 4), -1j * op)
    add((3, 4), (3, 3), 1j * oc)
    add((3, 4), (4, 4), -1j * oc)

    # lower triangle: d(rho_ji)/dt = conj(d(rho_ij)/dt), rho_ab -> rho_ba
    for i in range(1, 5):
        for j in range(i + 1, 5):
            row = idx(i, j)
            for a in range(1, 5):
                for b in range(1, 5):
                    c = L[row, idx(a, b)]
                    if c != 0:
                        L[idx(j, i), idx(b, a)] = np.conj(c)
    return L


def steady_state(L: np.ndarray) -> np.ndarray:
    """Unit-trace null vector of L via trace-row replacement.

    The rho_11 row is replaced by the trace constraint and the dense
    16x16 complex system solved; the residual is then checked against
    all 16 original rows.
    """
    A = L.copy()
    b = np.zeros(16, dtype=np.complex128)
    A[0, :] = 0.0
    A[0, list(TRACE_INDICES)] = 1.0
    b[0] = 1.0

    cond = np.linalg.cond(A)
    if not np.isfinite(cond) or cond > 1e14:
        raise SingularSystem(
            f"trace-constrained system is numerically singular (cond ~ {cond:.3e})"
        )
    v = np.linalg.solve(A, b)

    residual = float(np.max(np.abs(L @ v)))
    if residual > 1e-10:
        raise SingularSystem(
            f"steady-state residual {residual:.3e} exceeds 1e-10"
        )
    rho = unvectorize(v)
    # symmetrize away roundoff, keeping the residual guarantee intact
    rho = 0.5 * (rho + rho.conj().T)
    return rho


def max_stable_dt(params: SystemParams) -> float:
    scale = max(1.0, params.omega_c, params.omega_p, params.omega_s,
                params.gamma1 + params.gamma2 + params.gamma3 + params.gamma4)
    return 0.01 / scale


def time_evolve(
    L: np.ndarray,
    rho0: np.ndarray,
    t_end: float,
    dt: float = 1e-3,
    params: SystemParams | None = None,
) -> np.ndarray:
    """Propagate rho0 to t_end (units 1/gamma) with fixed-step RK4.

    When ``params`` is given the step size is validated against the
    stiffness bound 0.01 / max(1, Rabi frequencies, total decay).
    """
    if dt <= 0:
        raise StepTooLarge("dt must be positive")
    if params is not None and dt > max_stable_dt(params) * (1 + 1e-12):
        raise StepTooLarge(
            f"dt = {dt} exceeds stability bound {max_stable_dt(params):.3e}"
        )
    if t_end < 0:
        raise ValueError("t_end must be >= 0")

    y = vectorize(rho0)
    n_full = int(np.floor(t_end / dt + 1e-12))
    rem = t_end - n_full * dt
    y = rk4_evolve(L, y, dt, n_full)
    if rem > 1e-12 * max(1.0, t_end):
        y = rk4_evolve(L, y, rem, 1)
    return unvectorize(y)

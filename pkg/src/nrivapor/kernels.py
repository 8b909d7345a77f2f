"""Hot numeric kernels: fixed-step RK4 propagation of the 16-vector.

The numba path JIT-compiles the classic four-stage step loop. The pure
numpy fallback exploits that one RK4 step of a constant linear system
is multiplication by M = I + hL + (hL)^2/2 + (hL)^3/6 + (hL)^4/24, so
n steps compose as M^n (binary exponentiation). Select the fallback by
setting the environment variable NRIVAPOR_NO_NUMBA=1 before import.
"""

import os

import numpy as np

_DISABLE = os.environ.get("NRIVAPOR_NO_NUMBA", "") not in ("", "0")

try:
    if _DISABLE:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def _rk4_loop(L, y, dt, n_steps):
    for _ in range(n_steps):
        k1 = L @ y
        k2 = L @ (y + 0.5 * dt * k1)
        k3 = L @ (y + 0.5 * dt * k2)
        k4 = L @ (y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return y


if HAVE_NUMBA:
    _rk4_loop_jit = njit(cache=True)(_rk4_loop)


def rk4_step_matrix(L: np.ndarray, dt: float) -> np.ndarray:
    """One-step RK4 update matrix for y' = L y."""
    eye = np.eye(L.shape[0], dtype=np.complex128)
    hL = dt * L
    return eye + hL @ (eye + hL @ (eye / 2.0 + hL @ (eye / 6.0 + hL / 24.0)))


def _rk4_matrix_power(L, y, dt, n_steps):
    # Same map as n sequential RK4 steps, composed by squaring.
    step = rk4_step_matrix(L, dt)
    acc = np.eye(L.shape[0], dtype=np.complex128)
    n = n_steps
    while n > 0:
        if n & 1:
            acc = step @ acc
        step = step @ step
        n >>= 1
    return acc @ y


def rk4_evolve(L: np.ndarray, y0: np.ndarray, dt: float, n_steps: int) -> np.ndarray:
    """Propagate y' = L y over n_steps fixed RK4 steps of size dt."""
    y = np.ascontiguousarray(y0, dtype=np.complex128)
    Lc = np.ascontiguousarray(L, dtype=np.complex128)
    if n_steps == 0:
        return y.copy()
    if HAVE_NUMBA:
        return _rk4_loop_jit(Lc, y, dt, n_steps)
    return _rk4_matrix_power(Lc, y, dt, n_steps)

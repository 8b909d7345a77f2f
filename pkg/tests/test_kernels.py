"""The two RK4 kernel paths must agree."""

import numpy as np

from nrivapor import build_liouvillian, preset_params
from nrivapor.kernels import HAVE_NUMBA, _rk4_loop, _rk4_matrix_power, rk4_step_matrix


def test_step_matrix_matches_one_loop_step():
    L = build_liouvillian(preset_params("fig2-oc3.5"))
    y = np.zeros(16, dtype=np.complex128)
    y[0] = 0.5
    y[5] = 0.5
    dt = 1e-3
    assert np.allclose(rk4_step_matrix(L, dt) @ y, _rk4_loop(L, y, dt, 1),
                       rtol=0, atol=1e-15)


def test_loop_and_matrix_power_paths_agree():
    L = build_liouvillian(preset_params("fig3-oc3.5"))
    y = np.zeros(16, dtype=np.complex128)
    y[0] = 0.5
    y[5] = 0.5
    dt = 1e-3
    for n in (1, 7, 1000):
        a = _rk4_loop(L, y, dt, n)
        b = _rk4_matrix_power(L, y, dt, n)
        assert np.max(np.abs(a - b)) < 1e-12


def test_jit_path_matches_python_loop():
    if not HAVE_NUMBA:
        return  # running under NRIVAPOR_NO_NUMBA
    from nrivapor.kernels import _rk4_loop_jit

    L = build_liouvillian(preset_params("fig2-oc1.0"))
    y = np.zeros(16, dtype=np.complex128)
    y[0] = 1.0
    a = _rk4_loop(L, y, 1e-3, 500)
    b = _rk4_loop_jit(np.ascontiguousarray(L), y, 1e-3, 500)
    assert np.max(np.abs(a - b)) < 1e-13

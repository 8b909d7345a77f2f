"""Compare the numba RK4 loop against the pure-numpy matrix-power path.

Usage: python benchmarks/bench_rk4.py [n_steps]

Both paths propagate the same 16-dimensional system; timings exclude
JIT compilation (one warm-up call).
"""

import sys
import time

import numpy as np

from nrivapor import build_liouvillian, preset_params
from nrivapor.kernels import HAVE_NUMBA, _rk4_loop, _rk4_matrix_power


def bench(fn, L, y, dt, n, repeats=3):
    fn(L, y, dt, min(n, 10))  # warm up / compile
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(L, y, dt, n)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    n_steps = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    L = np.ascontiguousarray(build_liouvillian(preset_params("fig2-oc3.5")))
    y = np.zeros(16, dtype=np.complex128)
    y[0] = y[5] = 0.5
    dt = 1e-3

    results = {}
    t_py, out_py = bench(_rk4_loop, L, y, dt, n_steps) if n_steps <= 100_000 else (None, None)
    if t_py is not None:
        results["python loop"] = (t_py, out_py)
    t_np, out_np = bench(_rk4_matrix_power, L, y, dt, n_steps)
    results["numpy matrix power"] = (t_np, out_np)
    if HAVE_NUMBA:
        from nrivapor.kernels import _rk4_loop_jit
        t_nb, out_nb = bench(_rk4_loop_jit, L, y, dt, n_steps)
        results["numba loop"] = (t_nb, out_nb)

    print(f"n_steps = {n_steps}, dt = {dt}")
    ref = results["numpy matrix power"][1]
    for name, (t, out) in results.items():
        dev = np.max(np.abs(out - ref))
        rate = n_steps / t
        print(f"  {name:20s} {t * 1e3:10.2f} ms   {rate:12.3e} steps/s   "
              f"max dev vs numpy path {dev:.2e}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the raw kernel hot spots (disc-element products, reorder-table builds)
on both backends in one process, then a small cone verification run per
backend via ``twistedreal._kernels.set_backend``.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from twistedreal import _kernels, _kernels_py
from twistedreal.graded_triple import verify_cone


def random_disc_prim(rng, nterms, max_exp, kernel):
    out = {}
    for _ in range(nterms):
        ql = {}
        for _ in range(3):
            g = kernel.g_make(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(1, 9))
            if g[:2] != (0, 0):
                ql[rng.randint(-6, 6)] = g
        if ql:
            out[(rng.randint(0, max_exp), rng.randint(0, max_exp))] = ql
    return out


def bench_de_mul(kernel, repeat):
    rng = random.Random(20260809)
    elements = [random_disc_prim(rng, 6, 8, kernel) for _ in range(40)]
    kernel.reorder(8, 8)  # warm the table so we time products, not memo fills
    t0 = time.perf_counter()
    for _ in range(repeat):
        for i in range(len(elements) - 1):
            kernel.de_mul(elements[i], elements[i + 1])
    return time.perf_counter() - t0


def bench_reorder(kernel, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        kernel._REORDER.clear()
        kernel._REORDER[(0, 0)] = {(0, 0): kernel.QL_ONE}
        kernel.reorder(20, 20)
    return time.perf_counter() - t0


def bench_verify(backend):
    _kernels.set_backend(backend)
    t0 = time.perf_counter()
    res = verify_cone(2, 5, 5)
    assert res.overall
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()

    backends = {"python": _kernels_py}
    try:
        from twistedreal import _kernels_cy

        backends["cython"] = _kernels_cy
    except ImportError:
        print("compiled backend not available; timing pure python only")

    rows = []
    for name, mod in backends.items():
        rows.append((name, bench_de_mul(mod, args.repeat), bench_reorder(mod, 5)))

    print(f"{'backend':<10} {'de_mul':>10} {'reorder':>10} {'verify_cone(2,5,5)':>20}")
    for name, t_mul, t_reorder in rows:
        t_verify = bench_verify(name)
        print(f"{name:<10} {t_mul:>9.3f}s {t_reorder:>9.3f}s {t_verify:>19.3f}s")

    if len(rows) == 2:
        (py_name, py_mul, py_re), (cy_name, cy_mul, cy_re) = rows
        if cy_name != "cython":
            (py_name, py_mul, py_re), (cy_name, cy_mul, cy_re) = rows[::-1]
        print(
            f"speedup (python/cython): de_mul {py_mul / cy_mul:.2f}x, "
            f"reorder {py_re / cy_re:.2f}x"
        )


if __name__ == "__main__":
    main()

"""Compare the compiled contraction kernels against the numpy fallback.

Run as: python3 benchmarks/bench_kernels.py [--repeats R]

Times contract_all / contract_except_one / contract_except_two on a range
of shapes with both backends and prints a table of per-call microseconds
and the speedup factor.  The numbers are for the kernels alone; end-to-end
sweep times are dominated by these calls for tensors past a few thousand
entries.
"""

from __future__ import annotations

import argparse
import importlib
import time

import numpy as np

from specnorm.linalg import Seed, gaussian_array

SHAPES = [
    (8, 8, 8),
    (20, 20, 20),
    (40, 40, 40),
    (10, 10, 10, 10),
    (6, 6, 6, 6, 6),
    (50, 50, 8, 8),
]


def _load_backends():
    backends = {"numpy": importlib.import_module("specnorm._kernels_np")}
    try:
        backends["c"] = importlib.import_module("specnorm._kernels_c")
    except ImportError:
        print("compiled kernels unavailable; timing the fallback only")
    return backends


def _vectors(shape, seed):
    vs = []
    for mu, n in enumerate(shape):
        v = gaussian_array((n,), seed.child(mu))
        vs.append(v / np.linalg.norm(v))
    return vs


def _time_call(fn, repeats):
    fn()  # warm up
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1e6


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=20)
    args = ap.parse_args()

    backends = _load_backends()
    seed = Seed(7)
    header = f"{'shape':>16} {'call':>22}" + "".join(
        f" {name + ' us':>12}" for name in backends
    )
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for shape in SHAPES:
        data = gaussian_array(shape, seed)
        vecs = _vectors(shape, seed.child(99))
        calls = {
            "contract_all": lambda b: b.contract_all(data, vecs),
            "contract_except_one": lambda b: b.contract_except_one(data, vecs, 0),
            "contract_except_two": lambda b: b.contract_except_two(data, vecs, 0, 1),
        }
        for cname, call in calls.items():
            times = {}
            for bname, mod in backends.items():
                times[bname] = _time_call(lambda m=mod: call(m), args.repeats)
            row = f"{'x'.join(map(str, shape)):>16} {cname:>22}" + "".join(
                f" {times[b]:>12.1f}" for b in backends
            )
            if len(times) == 2:
                row += f" {times['numpy'] / times['c']:>8.2f}x"
            print(row)

        for bname, mod in backends.items():
            ref = backends["numpy"].contract_all(data, vecs)
            got = mod.contract_all(data, vecs)
            if abs(got - ref) > 1e-10 * max(1.0, abs(ref)):
                raise SystemExit(f"backend {bname} disagrees on {shape}")


if __name__ == "__main__":
    main()

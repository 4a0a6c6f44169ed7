"""Time the numba and numpy kernel backends on the same workloads.

    python3 benchmarks/bench_kernels.py [--n 5] [--repeat 3] [--json]

Each backend is warmed up once (this is where numba compiles) and then timed
``--repeat`` times; the best wall time is reported.  Outputs of the two
backends are compared for equality before any timing is trusted.
"""

import argparse
import json
import time

import numpy as np

from idealfam.kernels import HAVE_NUMBA, numba_kernels, numpy_kernels


def workloads(n):
    masks = numpy_kernels.ideal_masks(n)
    return {
        "ideal_masks": lambda K: K.ideal_masks(n),
        "ideal_masks_antichain": lambda K: K.ideal_masks(n, "antichain"),
        "nds": lambda K: K.nds(masks, n),
        "is_ideal": lambda K: K.is_ideal(masks, n),
        "injection": lambda K: K.injection(masks, n)[1],
        "minors_ok": lambda K: K.minors_ok(masks, n),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    rows = []
    for name, job in workloads(args.n).items():
        a, b = job(numpy_kernels), job(numba_kernels)  # warm-up and compile
        if not np.array_equal(a, b):
            raise SystemExit(f"{name}: backends disagree")
        t_np = best_of(lambda: job(numpy_kernels), args.repeat)
        t_nb = best_of(lambda: job(numba_kernels), args.repeat)
        rows.append({"kernel": name, "n": args.n, "numpy_s": t_np, "numba_s": t_nb,
                     "speedup": t_np / t_nb if t_nb else float("inf")})

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'kernel':<24}{'numpy s':>12}{'numba s':>12}{'speedup':>10}")
    for r in rows:
        print(f"{r['kernel']:<24}{r['numpy_s']:>12.4f}{r['numba_s']:>12.4f}{r['speedup']:>9.1f}x")


if __name__ == "__main__":
    main()

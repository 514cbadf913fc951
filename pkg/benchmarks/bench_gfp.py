"""Compiled vs pure-Python row reduction over GF(p).

    python3 benchmarks/bench_gfp.py [--sizes 100 300 600] [--prime 2] [--repeat 3]

Times ``rref`` on random square matrices and one oracle workload (six
syzygies of every simple module of a dense quiver) under each available
backend, and checks that both backends return identical echelon forms.
"""

import argparse
import time

import numpy as np

from radzero import gen_random
from radzero.oracle import available_backends, build_simple, gfp, syzygy_rep, use_backend


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def syzygy_workload(prime):
    Q = gen_random(40, 5, 2)
    for a in Q.vertices:
        M = build_simple(Q, a, prime)
        for _ in range(6):
            M = syzygy_rep(M)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 300, 600])
    ap.add_argument("--prime", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    if len(backends) < 2:
        print(f"only {backends} available; build the extension with `pip install -e . --no-build-isolation`")
    rng = np.random.default_rng(0)
    print(f"{'workload':<22}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    previous = gfp.BACKEND
    try:
        for n in args.sizes:
            a = rng.integers(0, args.prime, size=(n, n))
            times, forms = {}, {}
            for b in backends:
                use_backend(b)
                times[b] = best_of(args.repeat, lambda: gfp.rref(a, args.prime))
                forms[b] = gfp.rref(a, args.prime)
            r0, p0 = next(iter(forms.values()))
            assert all(np.array_equal(r, r0) and piv == p0 for r, piv in forms.values()), "backends disagree"
            report(f"rref {n}x{n}", times)
        times = {}
        for b in backends:
            use_backend(b)
            times[b] = best_of(1, lambda: syzygy_workload(args.prime))
        report("syzygy chain", times)
    finally:
        use_backend(previous)


def report(label, times):
    line = f"{label:<22}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times.values())
    if "compiled" in times and "python" in times:
        line += f"{times['python'] / times['compiled']:>11.1f}x"
    print(line)


if __name__ == "__main__":
    main()

"""Compare the compiled term-ops kernel against the pure-Python fallback.

Two views: raw kernel throughput on synthetic term dictionaries, and an
end-to-end mutation workload (deep Kronecker walk + random walks) run in a
subprocess per backend via QUIVERLAB_FORCE_PY.

Usage: python3 benchmarks/bench_termops.py
"""

import os
import random
import subprocess
import sys
import time

from quiverlab import _termops_py as py_ops

try:
    from quiverlab import _termops_cy as cy_ops
except ImportError:
    cy_ops = None


def synthetic_terms(rng, n, size):
    terms = {}
    while len(terms) < size:
        exp = tuple(rng.randrange(-6, 7) for _ in range(n))
        terms[exp] = rng.randrange(1, 1000)
    return terms


def bench_kernel(ops, label, pairs, repeats=20):
    start = time.perf_counter()
    for _ in range(repeats):
        for a, b in pairs:
            ops.mul_terms(a, b)
            ops.add_terms(a, b)
    elapsed = time.perf_counter() - start
    print(f"  {label:8s} {elapsed:8.3f} s")
    return elapsed


WORKLOAD = r"""
import random, time
from quiverlab import termops
from quiverlab.quiver import from_arrows
from quiverlab.seed import initial_seed, mutate_seed

start = time.perf_counter()
kron = from_arrows(2, [(2, 1), (2, 1)])
s = initial_seed(kron)
direction = 1
for _ in range(40):
    s = mutate_seed(s, direction)
    direction = 3 - direction

rng = random.Random(20240615)
for _ in range(300):
    n = rng.choice([2, 3, 4])
    arrows = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < 0.6:
                pair = (i, j) if rng.random() < 0.5 else (j, i)
                arrows.append(pair)
    s = initial_seed(from_arrows(n, arrows))
    for _ in range(rng.randrange(1, 9)):
        s = mutate_seed(s, rng.randrange(1, n + 1))
print(f"{termops.BACKEND}: {time.perf_counter() - start:.3f} s")
"""


def bench_end_to_end():
    print("end-to-end mutation workload (subprocess per backend):")
    for force_py in (False, True):
        env = dict(os.environ)
        if force_py:
            env["QUIVERLAB_FORCE_PY"] = "1"
        else:
            env.pop("QUIVERLAB_FORCE_PY", None)
        out = subprocess.run(
            [sys.executable, "-c", WORKLOAD],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        print("  " + out.stdout.strip())


def main():
    rng = random.Random(11)
    pairs = [
        (synthetic_terms(rng, n, size), synthetic_terms(rng, n, size))
        for n in (2, 3, 4)
        for size in (20, 60, 120)
    ]
    print("raw kernel, mul+add over synthetic term dicts:")
    py_time = bench_kernel(py_ops, "python", pairs)
    if cy_ops is not None:
        cy_time = bench_kernel(cy_ops, "cython", pairs)
        print(f"  speedup  {py_time / cy_time:8.2f} x")
    else:
        print("  compiled kernel not built; only the fallback was timed")
    bench_end_to_end()


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python matrix kernels.

Times raw products of random exact matrices and a few group closures, once
with each kernel swapped into ``weylift._backend``.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import timeit

from weylift import _backend, _kernels_py
from weylift.exactmat import ExactMatrix, group_closure
from weylift.lifts import classical_generators, gl_generators
from weylift.scalars import zeta


def _random_matrix(rng: random.Random, n: int, N: int) -> ExactMatrix:
    rows = [[zeta(N, rng.randrange(N)) * rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
    return ExactMatrix.from_rows(rows, N=N)


def workloads():
    rng = random.Random(0)
    dense = [(_random_matrix(rng, 12, 8), _random_matrix(rng, 12, 8)) for _ in range(20)]
    gl5 = gl_generators(6)
    c4 = classical_generators("C", 4).Sg
    b4 = classical_generators("B", 4).Sg
    return {
        "dense 12x12 products over Q(zeta_8), x20": lambda: [a * b for a, b in dense],
        "closure gl-tits:5 (46080 elements)": lambda: group_closure(list(gl5.S) + list(gl5.T)),
        "closure C-tits:4 (6144 elements)": lambda: group_closure(c4),
        "closure B-weyl-lift:4 (384 elements)": lambda: group_closure(b4),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    kernels = {"python": _kernels_py.matmul}
    if _backend.BACKEND == "cython":
        kernels["cython"] = _backend.matmul
    else:
        print("compiled kernel unavailable; timing the Python kernel only")

    original = _backend.matmul
    print(f"{'workload':44s}" + "".join(f"{k:>12s}" for k in kernels) + ("     speedup" if len(kernels) == 2 else ""))
    try:
        for name, fn in workloads().items():
            times = {}
            for label, kernel in kernels.items():
                _backend.matmul = kernel
                times[label] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            row = f"{name:44s}" + "".join(f"{times[k]:11.3f}s" for k in kernels)
            if len(kernels) == 2:
                row += f"{times['python'] / times['cython']:11.1f}x"
            print(row)
    finally:
        _backend.matmul = original


if __name__ == "__main__":
    main()

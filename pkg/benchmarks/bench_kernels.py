"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from uavcircle import _pykernels

try:
    from uavcircle import _ckernels
except ImportError:
    _ckernels = None


def workloads(rng):
    big = rng.uniform(-100, 100, size=(20000, 2))
    bx, by = big[:, 0].tolist(), big[:, 1].tolist()
    order = rng.permutation(len(bx)).tolist()
    small = rng.uniform(-100, 100, size=(40, 2))
    sx, sy = small[:, 0].tolist(), small[:, 1].tolist()
    mid = rng.uniform(-100, 100, size=(80, 2))
    mx, my = mid[:, 0].tolist(), mid[:, 1].tolist()
    members = list(range(79))
    return {
        "welzl k=20000": lambda K: K.welzl(bx, by, order, 1e-9, -1.0),
        "bruteforce k=40": lambda K: K.bruteforce(sx, sy, 1e-9, -1.0),
        "best_circumcircle m=79": lambda K: K.best_circumcircle(mx, my, members, 79, 1e-9, -1.0),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python fallback is available")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<26}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, fn in workloads(rng).items():
        t_py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<26}{t_py:>12.4f}{'-':>12}{'-':>10}")
            continue
        assert fn(_ckernels) == fn(_pykernels)
        t_c = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<26}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()

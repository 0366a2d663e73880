"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from crosspoly import _pykernels

try:
    from crosspoly import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ("colored_tally", (7, 4)),
    ("colored_tally", (8, 8)),
    ("lattice_count", (8, 4, 8)),
    ("lattice_count", (8, 8, 8)),
]


def best_of(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only timing the Python fallback")
    print(f"{'kernel':<15}{'args':<14}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for name, call_args in CASES:
        t_py, r_py = best_of(getattr(_pykernels, name), call_args, args.repeat)
        if _ckernels is None:
            print(f"{name:<15}{str(call_args):<14}{t_py:>12.4f}{'-':>12}{'-':>10}")
            continue
        t_c, r_c = best_of(getattr(_ckernels, name), call_args, args.repeat)
        if r_c != r_py:
            raise SystemExit(f"backends disagree on {name}{call_args}")
        print(f"{name:<15}{str(call_args):<14}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.0f}x")


if __name__ == "__main__":
    main()

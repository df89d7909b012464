"""Time the unit-pivot elimination kernel, numba against plain numpy.

    python benchmarks/bench_elimination.py [--repeat 3]
"""

import argparse
import time

from roundtwin import _kernels
from roundtwin.complex import SpaceSpec, build_complex
from roundtwin.homology import boundary_matrix

CASES = [("round", 5, 2), ("round", 6, 2), ("round", 6, 3), ("line", 5, 2), ("line", 6, 2)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    modes = [("numpy", False)]
    if _kernels.USING_NUMBA:
        # compile once outside the timed region
        _kernels.eliminate_unit_pivots(boundary_matrix(build_complex(SpaceSpec.round(3)), 1), True)
        modes.append(("numba", True))
    else:
        print("numba unavailable; timing the numpy kernel only")

    print(f"{'matrix':<14}{'shape':>12}" + "".join(f"{name:>10}" for name, _ in modes))
    for kind, n, k in CASES:
        m = boundary_matrix(build_complex(SpaceSpec(kind, n)), k)
        row = f"{str(SpaceSpec(kind, n)) + ' d' + str(k):<14}{str(m.shape):>12}"
        results = set()
        for _, flag in modes:
            t, (units, resid) = best_of(lambda: _kernels.eliminate_unit_pivots(m, flag), args.repeat)
            results.add((units, resid.shape))
            row += f"{t:>9.3f}s"
        if len(results) != 1:
            raise SystemExit(f"kernels disagree on {kind} {n} d{k}")
        print(row)


if __name__ == "__main__":
    main()

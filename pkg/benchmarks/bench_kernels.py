"""Time the compiled and pure-Python float kernels on the oracle workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from serinv import _pykernels, kernels

CASES = [
    ("polylog_sum z=0.9", "polylog_sum", (0.9, 1.5, 400)),
    ("polylog_sum z=0.999999", "polylog_sum", (0.999999, 1.5, 2_000_000)),
    ("gk15 gaussian g=0.1", "gk15_adaptive", (kernels.GAUSS_QUARTIC, 0.1, 0.0, 6.0, 1e-12)),
    ("gk15 gaussian g=1e4", "gk15_adaptive", (kernels.GAUSS_QUARTIC, 1e4, 0.0, 0.2, 1e-12)),
    ("gk15 expint g=0.5", "gk15_adaptive", (kernels.EXP_RATIONAL, 0.5, 0.0, 40.0, 1e-12)),
]


def best_of(fn, args, repeat):
    number = 1
    while timeit.timeit(lambda: fn(*args), number=number) < 0.05 and number < 10 ** 6:
        number *= 10
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    try:
        cy = kernels.load_backend("cython")
    except ImportError:
        print("compiled extension not built; only the Python backend is available")
        cy = None
    print(f"{'case':<26}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, name, fargs in CASES:
        tp = best_of(getattr(_pykernels, name), fargs, args.repeat)
        if cy is None:
            print(f"{label:<26}{tp * 1e3:>10.3f}ms{'-':>12}{'-':>10}")
            continue
        tc = best_of(getattr(cy, name), fargs, args.repeat)
        print(f"{label:<26}{tp * 1e3:>10.3f}ms{tc * 1e3:>10.3f}ms{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()

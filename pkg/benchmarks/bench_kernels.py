"""Compare the compiled and pure-Python enumeration kernels.

Run with ``python3 benchmarks/bench_kernels.py``.  Each case is timed on both
backends and the outputs are checked to agree.
"""

from __future__ import annotations

import argparse
import time

from prymcalc import kernels

CASES = {
    # eight (-2)-coordinates, sign-restricted, with the standard parity link
    "signed-8": dict(lo=[-4] * 8, hi=[0] * 8, weights=[2] * 8, target=40, masks=[0b11, 0b110, 0b1100], parities=[0, 0, 0]),
    "full-8": dict(lo=[-4] * 8, hi=[4] * 8, weights=[2] * 8, target=36, masks=[], parities=[]),
    "full-10": dict(lo=[-3] * 10, hi=[3] * 10, weights=[1] * 10, target=12, masks=[0b1111111111], parities=[0]),
    "mixed-weights": dict(lo=[-6] * 7, hi=[6] * 7, weights=[1, 2, 3, 1, 2, 3, 5], target=60, masks=[], parities=[]),
}


def timed(backend: str, case: dict, repeat: int) -> tuple[float, list]:
    best = float("inf")
    out = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = kernels.norm_vectors(backend=backend, **case)
        best = min(best, time.perf_counter() - t)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        print("compiled extension not built; only the Python backend is available")
    print(f"{'case':15s} {'solutions':>9s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, case in CASES.items():
        tp, op = timed("python", case, args.repeat)
        if kernels.BACKEND == "compiled":
            tc, oc = timed("compiled", case, args.repeat)
            assert oc == op, f"backends disagree on {name}"
            print(f"{name:15s} {len(op):9d} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")
        else:
            print(f"{name:15s} {len(op):9d} {tp:10.4f} {'-':>11s} {'-':>8s}")


if __name__ == "__main__":
    main()

"""Compare the compiled simulator kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--steps N] [--repeat R]
"""

import argparse
import time

from symshift import _pykernels
from symshift.bitstrings import from_run_vector

try:
    from symshift import _ckernels
except ImportError:
    _ckernels = None


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return out, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, default=2_000_000, help="orbit steps per run")
    ap.add_argument("--cycle-n", type=int, default=14)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    # the n=1015 register whose orbit has length 128653810
    bits = bytes(int(c) for c in from_run_vector((3, 3, 3, 3, 2, 2, 1, 998)))
    cases = [
        ("orbit_period", lambda k: k.orbit_period(bits, 6, 2, args.steps), args.steps),
        ("generate", lambda k: k.generate(bits, 6, 2, args.steps), args.steps),
        ("weight_trace", lambda k: k.weight_trace(bits, 6, 2, args.steps), args.steps),
        ("cycle_lengths", lambda k: k.cycle_lengths(args.cycle_n, 3, 2), 2**args.cycle_n),
    ]
    kernels = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'kernel':<14}{'impl':<8}{'seconds':>10}{'Msteps/s':>10}{'speedup':>9}")
    for name, fn, work in cases:
        base = None
        results = []
        for label, mod in kernels:
            out, secs = timed(lambda: fn(mod), args.repeat)
            results.append(out if not hasattr(out, "tolist") else out.tolist())
            base = base or secs
            print(f"{name:<14}{label:<8}{secs:>10.4f}{work / secs / 1e6:>10.2f}{base / secs:>8.1f}x")
        assert all(r == results[0] for r in results), f"{name}: kernels disagree"
    if _ckernels is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()

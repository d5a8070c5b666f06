"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--number 2000]

Prints per-call timings for each kernel and the wall time of ``gosperq check
all`` under each backend (the latter through ``GOSPERQ_PURE``).
"""
import argparse
import os
import subprocess
import sys
import time
import timeit

from gosperq import _pykernels

try:
    from gosperq import _ckernels
except ImportError:  # extension not built
    _ckernels = None

CASES = {
    "qpoch_inf(0.5, 0.3)": ("qpoch_inf", (0.5 + 0.1j, 0.3, 1e-15, 10**6)),
    "qpoch_inf(0.5, 0.9)": ("qpoch_inf", (0.5 + 0.1j, 0.9, 1e-15, 10**6)),
    "theta1_sum(tau=0.1i)": ("theta1_sum", (0.7 + 0.2j, 0.1j, 1e-15, 10**6)),
    "theta1_sum(tau=i)": ("theta1_sum", (0.7 + 0.2j, 1j, 1e-15, 10**6)),
    "theta1_prime_sum(tau=0.05i)": ("theta1_prime_sum", (0.05j, 1e-15, 10**6)),
}


def per_call(fn, args, repeat, number):
    best = min(timeit.repeat(lambda: fn(*args), repeat=repeat, number=number))
    return best / number


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["GOSPERQ_PURE"] = "1"
    else:
        env.pop("GOSPERQ_PURE", None)
    start = time.perf_counter()
    subprocess.run([sys.executable, "-m", "gosperq", "check", "all"], env=env, check=True,
                   stdout=subprocess.DEVNULL)
    return time.perf_counter() - start


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=2000)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args(argv)

    print(f"{'kernel':<30} {'python (us)':>12} {'cython (us)':>12} {'speedup':>8}")
    for label, (name, call_args) in CASES.items():
        py = per_call(getattr(_pykernels, name), call_args, args.repeat, args.number)
        if _ckernels is None:
            print(f"{label:<30} {py * 1e6:12.2f} {'n/a':>12} {'':>8}")
            continue
        cy = per_call(getattr(_ckernels, name), call_args, args.repeat, args.number)
        print(f"{label:<30} {py * 1e6:12.2f} {cy * 1e6:12.2f} {py / cy:7.1f}x")

    if not args.skip_end_to_end:
        pure = end_to_end(True)
        print(f"\ncheck all, pure python: {pure:.2f}s")
        if _ckernels is not None:
            print(f"check all, cython:      {end_to_end(False):.2f}s")


if __name__ == "__main__":
    main()

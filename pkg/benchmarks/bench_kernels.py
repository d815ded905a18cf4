"""Time the compiled kernels against their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--terms N] [--repeat R]

Also times one full gamma_xz evaluation through each backend (the Python one
in a subprocess, since the backend is fixed at import).
"""
import argparse
import os
import subprocess
import sys
import timeit

from bigamma import _pykernels as py

try:
    from bigamma import _kernels as cy
except ImportError:
    cy = None

X = 0.7 + 1.3j
Z = -1.2 + 0.4j


def cases(n):
    return [
        ("gamma_x_sum", (X, n)),
        ("harmonic_sum", (X, n)),
        ("weierstrass_log_sum", (X, Z, n)),
        ("euler_product_log_sum", (X, Z, n)),
        ("log1p_sum_checkpoints", (X, Z, [n // 16, n // 4, n])),
        ("sin2_log_sum", (0.3 + 0.1j, Z, n)),
        ("binet_sum", (0.75, n)),
    ]


def best(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


_GAMMA_SNIPPET = (
    "import timeit, bigamma\n"
    "t = min(timeit.repeat(lambda: bigamma.gamma_xz(0.7+1.3j, -1.2+0.4j), number=1, repeat={r}))\n"
    "print(bigamma.BACKEND, t)\n"
)


def gamma_xz_time(pure, repeat):
    env = dict(os.environ)
    if pure:
        env["BIGAMMA_PURE_PYTHON"] = "1"
    else:
        env.pop("BIGAMMA_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", _GAMMA_SNIPPET.format(r=repeat)],
                         env=env, capture_output=True, text=True, check=True).stdout
    backend, t = out.split()
    return backend, float(t)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=10_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        print("compiled extension not built; only the Python timings are shown")
    print(f"{'kernel':<24}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, cargs in cases(args.terms):
        tp = best(getattr(py, name), cargs, args.repeat)
        if cy is None:
            print(f"{name:<24}{tp * 1e3:>12.3f}{'-':>12}{'-':>10}")
            continue
        tc = best(getattr(cy, name), cargs, args.repeat)
        print(f"{name:<24}{tp * 1e3:>12.3f}{tc * 1e3:>12.3f}{tp / tc:>9.1f}x")
    print()
    for pure in (False, True):
        backend, t = gamma_xz_time(pure, args.repeat)
        print(f"gamma_xz via {backend:<8} {t * 1e3:8.3f} ms")


if __name__ == "__main__":
    main()

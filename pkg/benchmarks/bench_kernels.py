"""Compare the compiled and pure-Python arithmetic kernels.

Each kernel is timed on the same random inputs with both backends, then the
whole pipeline is timed on a few surfaces.  Run with

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from surfsym.arith import _pykernel

try:
    from surfsym.arith import _ckernel
except ImportError:
    _ckernel = None

SURFACES = {
    "paraboloid": "x = t\ny = s\nz = t^2 + s^2\n",
    "enneper": "x = -s^3 + 3*s*t^2 + 3*s\ny = 3*s^2*t - t^3 + 3*t\nz = 3*s^2 - 3*t^2\n",
    "monkey saddle": "x = t\ny = s\nz = t^3 - 3*t*s^2\n",
}


def _inputs(rng):
    def terms(n):
        return {rng.randrange(1 << 40): rng.randint(-10 ** 6, 10 ** 6) for _ in range(n)}

    def dense(n, h):
        return [rng.randint(-h, h) for _ in range(n)] + [rng.randint(1, h)]

    mat = [[rng.randint(-50, 50) for _ in range(14)] for _ in range(14)]
    return {
        "mul_terms": (terms(120), terms(120)),
        "det_bareiss": (mat,),
        "horner_scaled": (dense(60, 10 ** 8), 123457, 65536),
        "umul": (dense(150, 10 ** 6), dense(150, 10 ** 6)),
        "uprem": (dense(120, 10 ** 4), dense(40, 10 ** 4)),
    }


def bench_kernels(repeat):
    rng = random.Random(1)
    args = _inputs(rng)
    print(f"{'kernel':<15}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, a in args.items():
        def call(mod, name=name, a=a):
            # det_bareiss consumes its matrix
            fresh = ([list(r) for r in a[0]],) if name == "det_bareiss" else a
            return getattr(mod, name)(*fresh)

        tp = min(timeit.repeat(lambda: call(_pykernel), number=1, repeat=repeat)) * 1e3
        if _ckernel is None:
            print(f"{name:<15}{tp:>14.3f}{'n/a':>14}{'':>10}")
            continue
        assert call(_pykernel) == call(_ckernel), name
        tc = min(timeit.repeat(lambda: call(_ckernel), number=1, repeat=repeat)) * 1e3
        print(f"{name:<15}{tp:>14.3f}{tc:>14.3f}{tp / tc:>9.2f}x")


def bench_pipeline(repeat):
    code = ("import sys, time\n"
            "from surfsym import analyze, parse_input, BACKEND\n"
            "P = parse_input(sys.stdin.read()).parametrization()\n"
            f"best = min((lambda t0: (analyze(P), time.perf_counter() - t0)[1])(time.perf_counter()) for _ in range({repeat}))\n"
            "print(BACKEND, best)\n")
    print(f"\n{'surface':<15}{'python (s)':>14}{'cython (s)':>14}{'speedup':>10}")
    for name, text in SURFACES.items():
        res = {}
        for pure in ("1", "0"):
            env = dict(os.environ, SURFSYM_PURE=pure)
            out = subprocess.run([sys.executable, "-c", code], input=text, env=env,
                                 capture_output=True, text=True, check=True).stdout.split()
            res[out[0]] = float(out[1])
        tp, tc = res["python"], res.get("cython")
        if tc is None:
            print(f"{name:<15}{tp:>14.3f}{'n/a':>14}")
        else:
            print(f"{name:<15}{tp:>14.3f}{tc:>14.3f}{tp / tc:>9.2f}x")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    opts = ap.parse_args()
    bench_kernels(opts.repeat)
    bench_pipeline(max(1, opts.repeat // 2))

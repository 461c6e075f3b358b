"""Compare the compiled kernels with the pure-Python reference.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--n 5]

Workloads:
  reduce    boundary matrices of X_n (box 2), over Z and F_2
  primitive the partial-basis test on random tuples of box vectors

Both backends are called directly, so the dispatcher's choice does not
matter. Results are checked for equality before timings are printed.
"""
import argparse
import random
import time

from oddsymp._kernels import _pykernels
from oddsymp.complexes import ComplexSpec, Family, build_complex
from oddsymp.homology import chain_complex

try:
    from oddsymp._kernels import _ckernels
except ImportError:
    _ckernels = None


def best_of(repeat, fn, *args):
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def reduce_all(kernels, cc, modulus):
    return [
        kernels.reduce_columns(cc.boundaries[d], cc.counts[d - 1], modulus)[0]
        for d in range(1, len(cc.counts))
    ]


def primitive_all(kernels, tuples, n):
    return [kernels.is_primitive(t, n) for t in tuples]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5, help="rank for the X_n boundary matrices")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--samples", type=int, default=20000, help="tuples for the primitivity test")
    args = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    cc = chain_complex(build_complex(ComplexSpec(Family.X, args.n, 2)), verify=False)
    rng = random.Random(0)
    tuples = []
    for _ in range(args.samples):
        k = rng.randint(1, args.n)
        tuples.append([[rng.randint(-2, 2) for _ in range(args.n)] for _ in range(k)])

    jobs = [
        (f"reduce X_{args.n} over Z", reduce_all, (cc, 0)),
        (f"reduce X_{args.n} over F_2", reduce_all, (cc, 2)),
        (f"is_primitive x{args.samples}", primitive_all, (tuples, args.n)),
    ]
    print(f"simplex counts {cc.counts}")
    print(f"{'workload':<28}{'python':>10}{'cython':>10}{'speedup':>10}")
    for label, fn, extra in jobs:
        t_py, r_py = best_of(args.repeat, fn, _pykernels, *extra)
        t_c, r_c = best_of(args.repeat, fn, _ckernels, *extra)
        if r_py != r_c:
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:<28}{t_py:>9.3f}s{t_c:>9.3f}s{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()

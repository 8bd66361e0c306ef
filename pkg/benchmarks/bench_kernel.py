"""Benchmark the compiled term-order kernel against the pure-Python twin.

Every workload drives identical algorithm code (the Buchberger loop, normal
forms, polynomial products) through both kernel implementations and checks
that the outputs agree before reporting timings.

Run:  python3 benchmarks/bench_kernel.py [--fast]
"""

import argparse
import random
import time

from fpcurves._kernel import _pure
from fpcurves.groebner import buchberger

try:
    from fpcurves._kernel import _core
except ImportError:
    _core = None


def random_terms(rnd, p, nvars, nterms, degree):
    out = []
    for _ in range(nterms):
        cuts = sorted(rnd.randrange(degree + 1) for _ in range(nvars - 1))
        bounds = [0] + cuts + [degree]
        exps = tuple(bounds[i + 1] - bounds[i] for i in range(nvars))
        out.append((rnd.randrange(1, p), 0, exps))
    return out


def bench_mul(kr, batches):
    total = 0
    t0 = time.perf_counter()
    for u, v in batches:
        uu = kr.vec(u)
        vv = kr.vec(v)
        w = kr.mul(uu, vv)
        total += kr.nterms(w)
    return time.perf_counter() - t0, total


def bench_normal_form(kr, gens, probes):
    red = kr.reducer()
    for g in gens:
        v = kr.vec(g)
        if not kr.is_zero(v):
            red.add(v)
    total = 0
    t0 = time.perf_counter()
    for f in probes:
        nf = kr.normal_form(kr.vec(f), red)
        total += kr.nterms(nf)
    return time.perf_counter() - t0, total


def bench_groebner(kr, gens):
    vecs = [kr.vec(g) for g in gens]
    t0 = time.perf_counter()
    basis = buchberger(kr, vecs, rank1=True)
    elapsed = time.perf_counter() - t0
    shape = tuple(sorted(kr.lead(v)[2] for v in basis))
    return elapsed, shape


def run(fast):
    rnd = random.Random(20260814)
    p = 32003

    workloads = []

    n_mul = 60 if fast else 400
    batches = [
        (
            random_terms(rnd, p, 6, 25, 4),
            random_terms(rnd, p, 6, 25, 4),
        )
        for _ in range(n_mul)
    ]
    workloads.append(("mul 25x25 terms, 6 vars", 6, bench_mul, (batches,)))

    gens = [random_terms(rnd, p, 5, 8, 3) for _ in range(25)]
    probes = [random_terms(rnd, p, 5, 30, 6) for _ in range(20 if fast else 120)]
    workloads.append(
        ("normal form vs 25 cubics, 5 vars", 5, bench_normal_form, (gens, probes))
    )

    gb_sizes = [(4, 3, 2), (5, 4, 2)] if fast else [(4, 3, 2), (5, 4, 2), (5, 5, 2), (6, 5, 2)]
    for nvars, ngens, deg in gb_sizes:
        gens = [random_terms(rnd, p, nvars, 12, deg) for _ in range(ngens)]
        workloads.append(
            (f"groebner: {ngens} generic deg-{deg} forms, {nvars} vars",
             nvars, bench_groebner, (gens,))
        )

    header = f"{'workload':<44} {'pure':>9} {'compiled':>9} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, nvars, fn, args in workloads:
        tp, outp = fn(_pure.KRing(p, nvars), *args)
        if _core is None:
            print(f"{name:<44} {tp:>8.3f}s {'n/a':>9} {'n/a':>8}")
            continue
        tc, outc = fn(_core.KRing(p, nvars), *args)
        if outp != outc:
            raise AssertionError(f"backend outputs differ on {name!r}")
        print(f"{name:<44} {tp:>8.3f}s {tc:>8.3f}s {tp / tc:>7.1f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fast", action="store_true", help="smaller workloads")
    args = ap.parse_args()
    run(args.fast)


if __name__ == "__main__":
    main()

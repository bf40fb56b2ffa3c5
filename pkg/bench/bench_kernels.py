"""Benchmark the compiled arithmetic kernel against the pure-Python fallback.

Raw kernel operations are timed on the cyclotomic ring of the chosen field,
then a representative identity sweep is timed end to end with each kernel.

Usage:  python bench/bench_kernels.py [--q 13] [--samples 60]
"""
import argparse
import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from ffhyper import _kernel  # noqa: E402
from ffhyper.charsums import SumTables  # noqa: E402
from ffhyper.cyclotomic import ring  # noqa: E402
from ffhyper.fields import build_field, q_to_field  # noqa: E402
from ffhyper.verifier import check_identity  # noqa: E402

SWEEP_IDS = ["appell-kampe", "F2-3F2-split", "fd-at-one", "sumrep-FC-double"]


def time_raw_ops(R, reps):
    rng = random.Random(7)
    phi, m = R.phi, 12
    a = [rng.randint(-10**6, 10**6) for _ in range(phi)]
    b = [rng.randint(-10**6, 10**6) for _ in range(phi)]
    A = [[rng.randint(-10**4, 10**4) for _ in range(phi)] for _ in range(m)]
    B = [[rng.randint(-10**4, 10**4) for _ in range(phi)] for _ in range(m)]
    out = {}
    for name, kern in (("pure", R._pure), ("compiled", R._fast)):
        if kern is None:
            continue
        t0 = time.perf_counter()
        for _ in range(reps):
            kern.mul(a, b)
        out[("mul", name)] = (time.perf_counter() - t0) / reps
        t0 = time.perf_counter()
        for _ in range(max(1, reps // 10)):
            kern.conv(A, B)
        out[("conv", name)] = (time.perf_counter() - t0) / max(1, reps // 10)
        t0 = time.perf_counter()
        for _ in range(reps):
            kern.dot(A, B)
        out[("dot", name)] = (time.perf_counter() - t0) / reps
    return out


def time_sweep(q, samples, use_fast):
    p, r = q_to_field(q)
    ctx = build_field(p, r)
    R = ctx.ring
    saved = R._fast
    if not use_fast:
        R._fast = None
    try:
        tables = SumTables(ctx)  # fresh instance: no warm caches
        t0 = time.perf_counter()
        for ident_id in SWEEP_IDS:
            rep = check_identity(tables, ident_id, mode="sample",
                                 samples=samples, seed=0)
            assert not rep.failures, f"{ident_id} failed during benchmarking"
        return time.perf_counter() - t0
    finally:
        R._fast = saved


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=13)
    ap.add_argument("--samples", type=int, default=60)
    ap.add_argument("--reps", type=int, default=200)
    args = ap.parse_args()

    if not _kernel.HAVE_SPEEDUPS:
        print("compiled kernel not available; showing the pure path only")

    p, r = q_to_field(args.q)
    N = p * (args.q - 1)
    R = ring(N)
    print(f"field F_{args.q}, value ring order N={N}, phi={R.phi}\n")

    raw = time_raw_ops(R, args.reps)
    print(f"{'kernel op':<10s} {'pure':>12s} {'compiled':>12s} {'speedup':>9s}")
    for op in ("mul", "conv", "dot"):
        pure = raw.get((op, "pure"))
        fast = raw.get((op, "compiled"))
        if fast:
            print(f"{op:<10s} {pure * 1e6:>10.1f}us {fast * 1e6:>10.1f}us "
                  f"{pure / fast:>8.1f}x")
        else:
            print(f"{op:<10s} {pure * 1e6:>10.1f}us {'n/a':>12s}")

    print(f"\nidentity sweep ({', '.join(SWEEP_IDS)}; "
          f"{args.samples} samples each at q={args.q}):")
    t_pure = time_sweep(args.q, args.samples, use_fast=False)
    print(f"  pure      {t_pure:8.2f}s")
    if _kernel.HAVE_SPEEDUPS:
        t_fast = time_sweep(args.q, args.samples, use_fast=True)
        print(f"  compiled  {t_fast:8.2f}s   ({t_pure / t_fast:.1f}x)")


if __name__ == "__main__":
    main()

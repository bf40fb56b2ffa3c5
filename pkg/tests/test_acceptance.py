"""Acceptance suite: one test per criterion, exact comparisons throughout.

Each test prints a single PASS line with its runtime (visible with -s).
The full suite is sized for the compiled kernel; it also passes on the
pure-Python kernel, just slower.  Run:  pytest tests/test_acceptance.py -v -s
"""
import itertools
import json
import time

import pytest

from ffhyper import hyper as hy
from ffhyper.approx import complex_tables, embed
from ffhyper.charsums import sum_tables
from ffhyper.cli import main
from ffhyper.fields import build_field, q_to_field
from ffhyper.identities import REGISTRY
from ffhyper.verifier import SplitMix64, check_identity

FOUNDATION_QS = [3, 4, 5, 7, 8, 9, 11, 13, 16]

_tables_cache: dict = {}


def tables_for(q, generator_choice=0):
    key = (q, generator_choice)
    if key not in _tables_cache:
        p, r = q_to_field(q)
        _tables_cache[key] = sum_tables(build_field(p, r, generator_choice=generator_choice))
    return _tables_cache[key]


def ids_in_group(group):
    return [i for i, ident in REGISTRY.items() if ident.group == group]


def run_block(ids, qs, mode, samples=200, seed=0, max_arity=3):
    bad = []
    for q in qs:
        t = tables_for(q)
        for ident_id in ids:
            rep = check_identity(t, ident_id, mode=mode, samples=samples,
                                 seed=seed, max_arity=max_arity)
            assert rep.error is None, f"{ident_id} q={q}: {rep.error}"
            if rep.failures:
                f = rep.failures[0]
                bad.append(f"{ident_id} q={q} params={f.params} point={f.point}")
    return bad


def announce(name, start, extra=""):
    print(f"ACCEPT {name}: PASS ({time.perf_counter() - start:.1f}s){extra}")


def test_criterion_foundations():
    start = time.perf_counter()
    ids = ["gauss-inversion", "poch-chain", "poch-invert", "dup-gauss", "dup-poch"]
    bad = run_block(ids, FOUNDATION_QS, "exhaustive")
    # the brute-force Jacobi oracle comparison runs where it is affordable
    bad += run_block(["jacobi-gauss"], [q for q in FOUNDATION_QS if q <= 9],
                     "exhaustive")
    assert not bad, bad
    announce("foundations", start)


def test_criterion_one_variable_layer():
    start = time.perf_counter()
    ids = ids_in_group("one-var")
    bad = run_block(ids, [3, 4, 5], "exhaustive")
    bad += run_block(ids, [7, 9, 11, 13], "sample", samples=200, seed=0)
    assert not bad, bad
    announce("one-variable layer", start)


def test_criterion_sum_representations():
    start = time.perf_counter()
    ids = ids_in_group("sumrep")
    bad = run_block(ids, [3, 4, 5], "exhaustive", max_arity=2)
    bad += run_block(ids, [7, 9], "sample", samples=200, seed=0, max_arity=2)
    # three-variable family A, sampled across its n = 1, 2, 3 configurations
    bad += run_block(["sumrep-FA"], [5], "sample", samples=300, seed=0, max_arity=3)
    assert not bad, bad
    announce("sum representations", start)


def test_criterion_full_registry():
    start = time.perf_counter()
    ids = ids_in_group("registry")
    bad = run_block(ids, [3, 4, 5], "exhaustive")
    bad += run_block(ids, [7, 8, 9, 11, 13], "sample", samples=200, seed=0)
    assert not bad, bad
    announce("full registry", start)


def test_criterion_degenerate_branches():
    # the quadratic-argument 2F1 lemma, per proof branch: a = eps, b+phi, 2b
    start = time.perf_counter()
    for q in (5, 7, 9):
        t = tables_for(q)
        ctx, m = t.ctx, t.m
        phi = m // 2
        for b in range(m):
            if (2 * b) % m == 0:
                continue
            for a, branch in ((0, "trivial"), ((b + phi) % m, "quad-shift"),
                              ((2 * b) % m, "square")):
                for lam in range(q):
                    if lam == 1 or lam == ctx.neg_i(1):
                        continue
                    lhs = hy.hyper_i(t, (a, a - b + phi), (b + phi,),
                                     ctx.mul_i(lam, lam))
                    one_plus = ctx.add_i(1, lam)
                    arg = ctx.div_i(ctx.mul_i(ctx.int_elem(4), lam),
                                    ctx.mul_i(one_plus, one_plus))
                    rhs = t.chi_i(-2 * a, one_plus) * hy.hyper_i(t, (a, b), (2 * b,), arg)
                    assert lhs == rhs, (q, branch, a, b, lam)
    announce("degenerate branches", start)


def _shape_evaluators(m):
    """The n = 2 family shapes plus 2F1 and 3F2, as (name, slots, dims, eval)."""

    def eval_a(t, ch, pts):
        return hy.fa_i(t, ch[0], (ch[1], ch[2]), (ch[3], ch[4]), pts)

    def eval_b(t, ch, pts):
        return hy.fb_i(t, (ch[0], ch[1]), (ch[2], ch[3]), ch[4], pts)

    def eval_c(t, ch, pts):
        return hy.fc_i(t, ch[0], ch[1], (ch[2], ch[3]), pts)

    def eval_d(t, ch, pts):
        return hy.fd_i(t, ch[0], (ch[1], ch[2]), ch[3], pts)

    def eval_2f1(t, ch, pts):
        return hy.hyper_i(t, (ch[0], ch[1]), (ch[2],), pts[0])

    def eval_3f2(t, ch, pts):
        return hy.hyper_i(t, (ch[0], ch[1], ch[2]), (ch[3], ch[4]), pts[0])

    return [
        ("FA2", 5, 2, eval_a),
        ("FB2", 5, 2, eval_b),
        ("FC2", 4, 2, eval_c),
        ("FD2", 4, 2, eval_d),
        ("2F1", 3, 1, eval_2f1),
        ("3F2", 5, 1, eval_3f2),
    ]


def test_criterion_psi_and_generator_independence():
    """Remark-level invariants at q in {5, 7, 9}, n = 2, by direct evaluation.

    Every (parameter, nonzero point) tuple is evaluated three ways: with the
    canonical additive character, with a twisted one, and on the field built
    from the next-smallest generator (where the same abstract character tuple
    appears under the index relabeling j -> j*u with g_alt = g^u).
    """
    start = time.perf_counter()
    for q in (5, 7, 9):
        t1 = tables_for(q)
        m, ctx = t1.m, t1.ctx
        t2 = t1.retwist(ctx.generator)
        ctx_alt = build_field(*q_to_field(q), generator_choice=1)
        t3 = sum_tables(ctx_alt)
        u = ctx.dlog_i(ctx_alt.generator)  # g_alt = g^u

        for name, slots, dims, ev in _shape_evaluators(m):
            for ch in itertools.product(range(m), repeat=slots):
                ch_re = tuple((j * u) % m for j in ch)
                for pts in itertools.product(range(1, q), repeat=dims):
                    v1 = ev(t1, ch, pts)
                    assert ev(t2, ch, pts) == v1, ("psi", q, name, ch, pts)
                    assert ev(t3, ch_re, pts) == v1, ("generator", q, name, ch, pts)

        # zero coordinates annihilate identically on every backend variant
        for name, slots, dims, ev in _shape_evaluators(m):
            ch = tuple(range(1, slots + 1))
            pts = (0,) * dims
            assert ev(t1, ch, pts).is_zero()
            assert ev(t2, ch, pts).is_zero()

        # rationality: values land in the q-1 part of the cyclotomic field
        rng = SplitMix64(7 + q)
        for _ in range(100):
            a, b1, b2, c1, c2 = (rng.below(m) for _ in range(5))
            l1, l2 = rng.below(q), rng.below(q)
            v = hy.fa_i(t1, a, (b1, b2), (c1, c2), (l1, l2))
            assert hy.value_in_small_cyclotomic(t1, v)
    announce("psi/generator independence", start)


def test_criterion_determinism(capsys):
    start = time.perf_counter()
    argv = ["--q-list", "3,4,5", "--identity", "euler-gauss", "--identity",
            "fd-at-one", "--identity", "int-1F1", "--mode", "sample",
            "--samples", "80", "--seed", "0", "--json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first.encode() == second.encode()
    payload = json.loads(first)
    assert payload["digest"]
    with capsys.disabled():
        announce("determinism", start)


def test_criterion_cross_backend():
    start = time.perf_counter()
    t = tables_for(13)
    ct = complex_tables(t.ctx)
    m, q = t.m, t.q
    rng = SplitMix64(0xC0FFEE)
    worst = 0.0
    for i in range(1000):
        kind = i % 5
        if kind == 0:
            a, b = rng.below(m), rng.below(m)
            exact, approx = t.jacobi_i(a, b), ct.jacobi_i(a, b)
        elif kind == 1:
            a, nu = rng.below(m), rng.below(m)
            exact, approx = t.poch_i(a, nu), ct.poch_i(a, nu)
        elif kind == 2:
            a, b, c = (rng.below(m) for _ in range(3))
            lam = rng.below(q)
            exact = hy.hyper_i(t, (a, b), (c,), lam)
            approx = hy.hyper_i(ct, (a, b, ), (c,), lam)
        elif kind == 3:
            a, b, c, d, e = (rng.below(m) for _ in range(5))
            lam = rng.below(q)
            exact = hy.hyper_i(t, (a, b, c), (d, e), lam)
            approx = hy.hyper_i(ct, (a, b, c), (d, e), lam)
        else:
            a, b, c1, c2 = (rng.below(m) for _ in range(4))
            l1, l2 = rng.below(q), rng.below(q)
            exact = hy.fc_i(t, a, b, (c1, c2), (l1, l2))
            approx = hy.fc_i(ct, a, b, (c1, c2), (l1, l2))
        ex = embed(t, exact)
        scale = max(1.0, abs(ex), abs(approx))
        rel = abs(ex - approx) / scale
        worst = max(worst, rel)
        assert rel <= 1e-9, (i, kind, rel)
    announce("cross-backend agreement", start, f" worst rel err {worst:.2e}")

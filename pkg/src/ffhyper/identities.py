"""The identity registry: every checkable statement as gated LHS/RHS evaluators.

Each entry produces one or more sweep configurations (one per arity or
inner-index choice).  A configuration declares how many character slots
and free field-element slots it enumerates, and a ``run`` callable that
either returns None (hypothesis or point exclusion: the tuple is skipped)
or a list of (lhs, rhs) value pairs to compare.

Conventions inside evaluators: characters are indices mod m = q - 1
(index arithmetic is character multiplication, negation is conjugation,
m // 2 is the quadratic character for odd q), field elements are indices
into the field enumeration, and all value arithmetic goes through the
backend tables, so every entry runs unchanged on the exact and floating
backends.  Entries flagged ``odd_p`` are skipped in characteristic 2.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import hyper as hy

Pair = tuple  # (lhs, rhs)


@dataclass(frozen=True)
class SweepConfig:
    tag: str
    char_slots: int
    point_slots: int
    run: Callable  # (tables, chars, points) -> list[Pair] | None


@dataclass(frozen=True)
class Identity:
    id: str
    group: str  # foundations | one-var | sumrep | registry
    odd_p: bool
    configs: Callable[[int], list[SweepConfig]]  # max_arity -> configs
    note: str = ""


REGISTRY: dict[str, Identity] = {}


def _register(id, group, odd_p, configs, note=""):
    REGISTRY[id] = Identity(id, group, odd_p, configs, note)


def _fixed(tag, char_slots, point_slots, run):
    cfgs = [SweepConfig(tag, char_slots, point_slots, run)]
    return lambda max_arity: cfgs


# ---------------------------------------------------------------------------
# generic brute-force sums (backend neutral)


def _jacobi_brute(t, js):
    ctx = t.ctx
    n = len(js)

    def terms(prefix_sum, depth, acc):
        if depth == n - 1:
            e = t.chi_exp(js[depth], ctx.sub_i(1, prefix_sum))
            if e is not None:
                yield acc + e
            return
        for x in range(1, t.q):
            yield from terms(ctx.add_i(prefix_sum, x), depth + 1, acc + t.chi_exp(js[depth], x))

    return t.zeta_sum(terms(0, 0, 0)) * ((-1) ** (n - 1))


# ---------------------------------------------------------------------------
# foundations


def _run_gauss_inversion(t, ch, pt):
    (j,) = ch
    lhs = t.gauss_i(j) * t.gauss_circ_i(-j)
    rhs = t.chi_i(j, t.ctx.neg_i(1)) * t.q
    return [(lhs, rhs)]


_register("gauss-inversion", "foundations", False,
          _fixed("all", 1, 0, _run_gauss_inversion),
          note="g(chi) g°(chi bar) = chi(-1) q")


def _jacobi_gauss_cfg(n):
    def run(t, ch, pt):
        return [(t.jacobi_i(*ch), _jacobi_brute(t, ch))]

    return SweepConfig(f"n{n}", n, 0, run)


_register("jacobi-gauss", "foundations", False,
          lambda max_arity: [_jacobi_gauss_cfg(2), _jacobi_gauss_cfg(3)],
          note="Gauss-quotient Jacobi formula vs brute-force summation")


def _run_poch_chain(t, ch, pt):
    a, nu, mu = ch
    m = t.m
    return [
        (t.poch_i(a, (nu + mu) % m), t.poch_i(a, nu) * t.poch_i((a + nu) % m, mu)),
        (t.poch_circ_i(a, (nu + mu) % m),
         t.poch_circ_i(a, nu) * t.poch_circ_i((a + nu) % m, mu)),
    ]


_register("poch-chain", "foundations", False, _fixed("all", 3, 0, _run_poch_chain))


def _run_poch_invert(t, ch, pt):
    a, nu = ch
    lhs = t.poch_i(a, nu)
    rhs = t.chi_i(nu, t.ctx.neg_i(1)) * t.inv_poch_circ_i(-a, -nu)
    return [(lhs, rhs)]


_register("poch-invert", "foundations", False, _fixed("all", 2, 0, _run_poch_invert))


def _run_dup_gauss(t, ch, pt):
    (a,) = ch
    phi = t.m // 2
    four = t.chi_i(a, t.ctx.int_elem(4))
    return [
        (t.gauss_i(2 * a), four * t.gauss_i(a) * t.gauss_i(a + phi) * t.inv_gauss_i(phi)),
        (t.gauss_circ_i(2 * a),
         four * t.gauss_circ_i(a) * t.gauss_circ_i(a + phi) * t.inv_gauss_circ_i(phi)),
    ]


_register("dup-gauss", "foundations", True, _fixed("all", 1, 0, _run_dup_gauss),
          note="degree-two twist duplication, plain and ° variants")


def _run_dup_poch(t, ch, pt):
    a, nu = ch
    phi = t.m // 2
    four = t.chi_i(nu, t.ctx.int_elem(4))
    return [
        (t.poch_i(2 * a, 2 * nu), four * t.poch_i(a, nu) * t.poch_i(a + phi, nu)),
        (t.poch_circ_i(2 * a, 2 * nu),
         four * t.poch_circ_i(a, nu) * t.poch_circ_i(a + phi, nu)),
    ]


_register("dup-poch", "foundations", True, _fixed("all", 2, 0, _run_dup_poch))


# ---------------------------------------------------------------------------
# one-variable layer


def _run_psi_0f0(t, ch, pt):
    (lam,) = pt
    if lam == 0:
        return None
    return [(hy.hyper_i(t, (), (), lam), t.psi_i(t.ctx.neg_i(lam)))]


_register("psi-0F0", "one-var", False, _fixed("all", 0, 1, _run_psi_0f0))


def _run_int_1f0(t, ch, pt):
    (a,) = ch
    (lam,) = pt
    if lam == 0 or (a == 0 and lam == 1):
        return None
    return [(hy.hyper_i(t, (a,), (), lam), t.chi_i(-a, t.ctx.sub_i(1, lam)))]


_register("int-1F0", "one-var", False, _fixed("all", 1, 1, _run_int_1f0))


def _int_1f1_cfg(n):
    def run(t, ch, pt):
        alphas, betas = ch[:n], ch[n:]
        (lam,) = pt
        if lam == 0 or any((a - b) % t.m == 0 for a, b in zip(alphas, betas)):
            return None
        jprod = t.one
        for a, b in zip(alphas, betas):
            jprod = jprod * t.jacobi_i(a, b - a)
        lhs = jprod * hy.hyper_i(t, alphas, betas, lam) * ((-1) ** n)
        return [(lhs, hy.nfold_confluent_sum(t, alphas, betas, lam))]

    return SweepConfig(f"n{n}", 2 * n, 1, run)


_register("int-1F1", "one-var", False,
          lambda max_arity: [_int_1f1_cfg(1), _int_1f1_cfg(2)],
          note="confluent nFn as an n-fold twisted sum")


def _run_ana_1f1(t, ch, pt):
    (a,) = ch
    (lam,) = pt
    if lam == 0:
        return None
    ctx = t.ctx
    acc = t.zero
    for u in range(2, t.q):
        arg = ctx.div_i(u, ctx.sub_i(1, u))
        acc = acc + t.psi_i(ctx.neg_i(ctx.mul_i(lam, u))) * t.chi_i(a, arg)
    rhs = -t.chi_i(a, ctx.neg_i(1)) * acc
    if a % t.m == 0:
        rhs = rhs + (t.q - 1) * t.psi_i(ctx.neg_i(lam))
    return [(hy.hyper_i(t, (a,), (0,), lam), rhs)]


_register("ana-1F1", "one-var", False, _fixed("all", 1, 1, _run_ana_1f1),
          note="1F1 with trivial lower parameter, with the delta correction term")


def _run_int_3f2(t, ch, pt):
    a0, a1, a2, b1, b2 = ch
    (lam,) = pt
    m = t.m
    if lam == 0 or a0 % m == 0 or (b1 - a1) % m == 0 or (b2 - a2) % m == 0:
        return None
    lhs = (t.jacobi_i(a1, b1 - a1) * t.jacobi_i(a2, b2 - a2)
           * hy.hyper_i(t, (a0, a1, a2), (b1, b2), lam))
    return [(lhs, hy.double_sum_3f2(t, a0, a1, a2, b1, b2, lam))]


_register("int-3F2", "one-var", False, _fixed("all", 5, 1, _run_int_3f2))


def _run_euler_gauss(t, ch, pt):
    a, b, c = ch
    m = t.m
    if {a % m, b % m} == {0, c % m}:
        return None
    lhs = hy.hyper_i(t, (a, b), (c,), 1)
    rhs = (t.gauss_circ_i(c) * t.gauss_i(c - a - b)
           * t.inv_gauss_circ_i(c - a) * t.inv_gauss_circ_i(c - b))
    return [(lhs, rhs)]


_register("euler-gauss", "one-var", False, _fixed("all", 3, 0, _run_euler_gauss),
          note="2F1 at 1 as a Gauss-sum ratio")


def _run_trans_2f1(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    m = t.m
    # lam = 1 is excluded: the right side vanishes by the zero convention
    # while the left side is the (nonzero) Gauss-ratio value at 1
    if lam in (0, 1) or a % m in (0, c % m) or b % m in (0, c % m):
        return None
    ctx = t.ctx
    lhs = hy.hyper_i(t, (a, b), (c,), lam)
    arg = ctx.div_i(ctx.sub_i(lam, 1), lam)
    rhs = (t.gauss_circ_i(c) * t.gauss_i(a + b - c) * t.inv_gauss_i(a) * t.inv_gauss_i(b)
           * t.chi_i(a - c, lam) * t.chi_i(c - a - b, ctx.sub_i(1, lam))
           * hy.hyper_i(t, (-a, c - a), (c - a - b,), arg))
    return [(lhs, rhs)]


_register("trans-2F1", "one-var", False, _fixed("all", 3, 1, _run_trans_2f1),
          note="argument inversion lambda -> (lambda-1)/lambda for 2F1")


# ---------------------------------------------------------------------------
# sum representations of the Lauricella families


def _sumrep_fa_cfg(n):
    def run(t, ch, pt):
        a = ch[0]
        bs, cs = ch[1:1 + n], ch[1 + n:]
        ctx = t.ctx
        lhs = -t.gauss_i(a) * hy.fa_i(t, a, bs, cs, pt)
        rhs = t.zero
        for u in range(1, t.q):
            term = t.psi_i(u) * t.chi_i(a, u)
            for b, c, lam in zip(bs, cs, pt):
                term = term * hy.hyper_i(t, (b,), (c,), ctx.mul_i(lam, u))
            rhs = rhs + term
        return [(lhs, rhs)]

    return SweepConfig(f"n{n}", 1 + 2 * n, n, run)


_register("sumrep-FA", "sumrep", False,
          lambda max_arity: [_sumrep_fa_cfg(n) for n in (1, 2, 3) if n <= max_arity],
          note="family A from a psi-weighted product of 1F1 factors")


def _sumrep_fb_cfg(n):
    def run(t, ch, pt):
        aas, bs = ch[:n], ch[n:2 * n]
        c = ch[2 * n]
        ctx = t.ctx
        lhs = -t.q * t.inv_gauss_circ_i(c) * hy.fb_i(t, aas, bs, c, pt)
        rhs = t.zero
        for u in range(1, t.q):
            term = t.psi_i(ctx.neg_i(u)) * t.chi_i(-c, u)
            for a, b, lam in zip(aas, bs, pt):
                term = term * hy.hyper_i(t, (a, b), (), ctx.div_i(lam, u))
            rhs = rhs + term
        return [(lhs, rhs)]

    return SweepConfig(f"n{n}", 2 * n + 1, n, run)


_register("sumrep-FB", "sumrep", False,
          lambda max_arity: [_sumrep_fb_cfg(n) for n in (1, 2) if n <= max_arity],
          note="family B from a psi-weighted product of 2F0 factors")


def _sumrep_fc_kummer_cfg(n):
    def run(t, ch, pt):
        a = ch[0]
        bs = ch[1:]
        ctx = t.ctx
        phi = t.m // 2
        lhs = -t.gauss_i(2 * a) * hy.fc_i(t, a, a + phi, bs, pt)
        rhs = t.zero
        quarter = ctx.inv_i(ctx.int_elem(4))
        for u in range(1, t.q):
            u2 = ctx.mul_i(u, u)
            term = t.psi_i(u) * t.chi_i(2 * a, u)
            for b, lam in zip(bs, pt):
                term = term * hy.hyper_i(t, (), (b,), ctx.mul_i(ctx.mul_i(lam, u2), quarter))
            rhs = rhs + term
        return [(lhs, rhs)]

    return SweepConfig(f"n{n}", 1 + n, n, run)


_register("sumrep-FC-kummer", "sumrep", True,
          lambda max_arity: [_sumrep_fc_kummer_cfg(n) for n in (1, 2) if n <= max_arity],
          note="family C at (a, a*phi) from 0F1 factors, odd characteristic")


def _sumrep_fc_double_cfg(n):
    def run(t, ch, pt):
        a, b = ch[0], ch[1]
        cs = ch[2:]
        ctx = t.ctx
        lhs = t.gauss_i(a) * t.gauss_i(b) * hy.fc_i(t, a, b, cs, pt)
        rhs = t.zero
        for s in range(1, t.q):
            psi_s_chi = t.psi_i(s) * t.chi_i(a, s)
            for u in range(1, t.q):
                term = psi_s_chi * t.psi_i(u) * t.chi_i(b, u)
                su = ctx.mul_i(s, u)
                for c, lam in zip(cs, pt):
                    term = term * hy.hyper_i(t, (), (c,), ctx.mul_i(lam, su))
                rhs = rhs + term
        return [(lhs, rhs)]

    return SweepConfig(f"n{n}", 2 + n, n, run)


_register("sumrep-FC-double", "sumrep", False,
          lambda max_arity: [_sumrep_fc_double_cfg(n) for n in (1, 2) if n <= max_arity],
          note="family C from a double psi-weighted sum of 0F1 factors")


# ---------------------------------------------------------------------------
# reduction / summation / transformation formulas


def _run_erdelyi(t, ch, pt):
    a1, a2, b1, b2 = ch
    (lam,) = pt
    m = t.m
    if a1 % m == 0 or a2 % m == 0 or (a1 - b1) % m == 0 or (a2 - b2) % m == 0:
        return None
    ctx = t.ctx
    neg_lam = ctx.neg_i(lam)
    acc = t.zero
    if lam != 0:  # every term carries nu(lam), so the average vanishes at 0
        for nu in range(m):
            term = (t.poch_i(a1, nu) * t.poch_i(a2, nu) * t.inv_poch_circ_i(0, nu)
                    * t.inv_poch_circ_i(b1, nu) * t.inv_poch_circ_i(b2, nu)
                    * hy.hyper_i(t, (a1 + nu,), (b1 + nu,), neg_lam)
                    * hy.hyper_i(t, (a2 + nu,), (b2 + nu,), neg_lam)
                    * t.chi_i(nu, lam))
            acc = acc + term
    lhs = acc * Fraction(-1, m)
    rhs = t.psi_i(lam) * hy.hyper_i(t, (b1 - a1, b2 - a2), (b1, b2), lam)
    return [(lhs, rhs)]


_register("erdelyi-2F2", "registry", False, _fixed("all", 4, 1, _run_erdelyi),
          note="character-sum average of 1F1 products collapsing to a 2F2")


def _run_lem_1f1(t, ch, pt):
    (nu,) = ch
    x, y = pt
    ctx = t.ctx
    # x + y = 0 (x, y nonzero) is excluded: the two sides differ by exactly 1
    # there, since the first right-hand term degenerates at argument 0
    if nu % t.m == 0 or (x != 0 and ctx.add_i(x, y) == 0):
        return None
    acc = t.zero
    for eta in range(t.m):
        acc = acc + (hy.hyper_i(t, (-eta,), (0,), x)
                     * hy.hyper_i(t, (eta - nu,), (0,), y))
    lhs = acc * Fraction(-1, t.m)
    rhs = (hy.hyper_i(t, (-nu,), (0,), ctx.add_i(x, y))
           - t.psi_i(ctx.neg_i(y)) * hy.hyper_i(t, (-nu,), (0,), x)
           - t.psi_i(ctx.neg_i(x)) * hy.hyper_i(t, (-nu,), (0,), y))
    return [(lhs, rhs)]


_register("lem-1F1-sum", "registry", False, _fixed("all", 1, 2, _run_lem_1f1),
          note="additive convolution rule for 1F1 with trivial lower parameter")


def _run_kummer_product(t, ch, pt):
    (a,) = ch
    (lam,) = pt
    if a % t.m == 0:
        return None
    ctx = t.ctx
    phi = t.m // 2
    two_lam = ctx.mul_i(ctx.int_elem(2), lam)
    lam2_4 = ctx.div_i(ctx.mul_i(lam, lam), ctx.int_elem(4))
    lhs = t.psi_i(lam) * hy.hyper_i(t, (a,), (2 * a,), two_lam)
    rhs = hy.hyper_i(t, (), (a + phi,), lam2_4)
    return [(lhs, rhs)]


_register("kummer-product", "registry", True, _fixed("all", 1, 1, _run_kummer_product),
          note="square-argument product formula for 1F1 vs 0F1")


def _red_fa_cfg(n):
    def run(t, ch, pt):
        a, nu = ch[0], ch[1]
        bs, cs = ch[2:2 + n], ch[2 + n:]
        x, y = pt[0], pt[1]
        lams = pt[2:]
        m = t.m
        ctx = t.ctx
        # x + y = 0 excluded for the same reason as in the pairwise
        # convolution rule this average is built from
        if nu % m == 0 or x == 1 or y == 1 or (x != 0 and ctx.add_i(x, y) == 0):
            return None
        acc = t.zero
        for eta in range(m):
            acc = acc + hy.fa_i(t, a, (-eta, eta - nu) + bs, (0, 0) + cs, (x, y) + lams)
        lhs = acc * Fraction(-1, m)
        one_minus_x = ctx.sub_i(1, x)
        one_minus_y = ctx.sub_i(1, y)
        rhs = hy.fa_i(t, a, (-nu,) + bs, (0,) + cs, (ctx.add_i(x, y),) + lams)
        rhs = rhs - t.chi_i(-a, one_minus_x) * hy.fa_i(
            t, a, (-nu,) + bs, (0,) + cs,
            tuple(ctx.div_i(z, one_minus_x) for z in (y,) + lams))
        rhs = rhs - t.chi_i(-a, one_minus_y) * hy.fa_i(
            t, a, (-nu,) + bs, (0,) + cs,
            tuple(ctx.div_i(z, one_minus_y) for z in (x,) + lams))
        return [(lhs, rhs)]

    return SweepConfig(f"n{n}", 2 + 2 * n, 2 + n, run)


_register("redFA-sum", "registry", False,
          lambda max_arity: [_red_fa_cfg(n) for n in (0, 1) if n + 2 <= max_arity],
          note="character average of family A in two extra slots")


def _run_f2_half_half(t, ch, pt):
    (nu,) = ch
    if nu % t.m == 0:
        return None
    half = t.ctx.half_i()
    acc = t.zero
    for eta in range(t.m):
        acc = acc + hy.fa_i(t, 0, (-eta, eta - nu), (0, 0), (half, half))
    return [(acc * Fraction(-1, t.m), t.rat(-1))]


_register("F2-half-half", "registry", True, _fixed("all", 1, 0, _run_f2_half_half),
          note="the half-half average collapses to -1")


def _bailey_cfg(n):
    def run(t, ch, pt):
        a = ch[0]
        bs = ch[1:]
        m = t.m
        ctx = t.ctx
        if any(b % m == 0 for b in bs):
            return None
        s = 0
        for lam in pt:
            s = ctx.add_i(s, lam)
        one_plus = ctx.add_i(1, s)
        if one_plus == 0:
            return None
        phi = m // 2
        lhs = hy.fc_i(t, a, a + phi, tuple(b + phi for b in bs),
                      tuple(ctx.mul_i(l, l) for l in pt))
        two = ctx.int_elem(2)
        args = tuple(ctx.div_i(ctx.mul_i(two, l), one_plus) for l in pt)
        rhs = t.chi_i(-2 * a, one_plus) * hy.fa_i(
            t, 2 * a, bs, tuple(2 * b for b in bs), args)
        return [(lhs, rhs)]

    return SweepConfig(f"n{n}", 1 + n, n, run)


_register("bailey-FA-FC", "registry", True,
          lambda max_arity: [_bailey_cfg(n) for n in (1, 2) if n <= max_arity],
          note="square-argument family C vs family A along the diagonal shift")


def _run_f2red_i(t, ch, pt):
    (a,) = ch
    (lam,) = pt
    m = t.m
    ctx = t.ctx
    if lam == 0:
        return None
    if (2 * a) % m == 0 and (lam == 1 or lam == ctx.neg_i(1)):
        return None
    phi = m // 2
    lhs = hy.hyper_i(t, (a, a + phi), (phi,), ctx.mul_i(lam, lam))
    # no 1/2 in front: the square substitution hits each square character
    # twice, which cancels the halving seen in the classical analogue
    rhs = t.chi_i(-2 * a, ctx.add_i(1, lam)) + t.chi_i(-2 * a, ctx.sub_i(1, lam))
    return [(lhs, rhs)]


_register("F2red-i", "registry", True, _fixed("all", 1, 1, _run_f2red_i),
          note="square-argument 2F1 with quadratic lower parameter")


def _run_f2red_ii(t, ch, pt):
    a, chi, eta = ch
    (lam,) = pt
    m = t.m
    ctx = t.ctx
    if chi % m == 0 or eta % m == 0 or lam == ctx.neg_i(1):
        return None
    phi = m // 2
    lam2 = ctx.mul_i(lam, lam)
    lhs = t.zero
    for ap in (a, a + phi):
        lhs = lhs + (t.poch_i(eta + phi, ap) * t.inv_poch_i(phi, ap)
                     * hy.hyper_i(t, (ap, ap + eta + phi), (phi - chi,), lam2))
    one_plus = ctx.add_i(1, lam)
    two = ctx.int_elem(2)
    rhs = t.chi_i(-2 * a, one_plus) * hy.fa_i(
        t, 2 * a, (-chi, -eta), (-2 * chi, -2 * eta),
        (ctx.div_i(ctx.mul_i(two, lam), one_plus), ctx.div_i(two, one_plus)))
    return [(lhs, rhs)]


_register("F2red-ii", "registry", True, _fixed("all", 3, 1, _run_f2red_ii),
          note="two-term quadratic-shift sum of 2F1 vs family A")


def _run_f2_2f1(t, ch, pt):
    a, b1, b2 = ch
    (lam,) = pt
    m = t.m
    ctx = t.ctx
    if b1 % m == 0 or b2 % m == 0 or lam == 1:
        return None
    phi = m // 2
    lhs = hy.fa_i(t, 2 * a, (b1, b2), (2 * b1, 2 * b2),
                  (ctx.add_i(1, lam), ctx.sub_i(1, lam)))
    ratio = ctx.div_i(ctx.add_i(1, lam), ctx.sub_i(1, lam))
    arg = ctx.mul_i(ratio, ratio)
    half_diff = ctx.div_i(ctx.sub_i(1, lam), ctx.int_elem(2))
    acc = t.zero
    for ap in (a, a + phi):
        acc = acc + (t.poch_i(phi - b2, ap) * t.inv_poch_i(phi, ap)
                     * hy.hyper_i(t, (ap, ap - b2 + phi), (b1 + phi,), arg))
    rhs = t.chi_i(-2 * a, half_diff) * acc
    return [(lhs, rhs)]


_register("F2-2F1", "registry", True, _fixed("all", 3, 1, _run_f2_2f1),
          note="family A at (1+l, 1-l) vs a quadratic-shift pair of 2F1")


def _run_f2_3f2_at1(t, ch, pt):
    a, b1, b2, c1, c2 = ch
    (lam,) = pt
    m = t.m
    if (a % m == 0 or b2 % m == 0 or (b1 - c1) % m == 0 or (b2 - c2) % m == 0):
        return None
    lhs = hy.fa_i(t, a, (b1, b2), (c1, c2), (lam, 1))
    rhs = (t.poch_i(c2 - b2, -a) * t.inv_poch_circ_i(c2, -a)
           * hy.hyper_i(t, (a, b1, a - c2), (c1, a + b2 - c2), lam))
    return [(lhs, rhs)]


_register("F2-3F2-at1", "registry", False, _fixed("all", 5, 1, _run_f2_3f2_at1),
          note="family A with second coordinate pinned at 1 vs 3F2")


def _run_f2_3f2_split(t, ch, pt):
    a, b1, b2, c1, c2 = ch
    (lam,) = pt
    m = t.m
    ctx = t.ctx
    if (a % m == 0 or b1 % m == 0 or b2 % m == 0
            or (b1 - c1) % m == 0 or (b2 - c2) % m == 0 or lam == 1):
        return None
    lhs = hy.fa_i(t, a, (b1, b2), (c1, c2), (lam, ctx.sub_i(1, lam)))
    arg = ctx.div_i(lam, ctx.sub_i(lam, 1))
    rhs = (t.poch_i(c2 - b2, -a) * t.inv_poch_circ_i(c2, -a)
           * t.chi_i(-a, ctx.sub_i(1, lam))
           * hy.hyper_i(t, (a, c1 - b1, a - c2), (c1, a + b2 - c2), arg))
    return [(lhs, rhs)]


_register("F2-3F2-split", "registry", False, _fixed("all", 5, 1, _run_f2_3f2_split),
          note="family A at (l, 1-l) vs 3F2 at l/(l-1)")


def _run_f3_3f2_at1(t, ch, pt):
    a1, a2, b1, b2, c = ch
    (lam,) = pt
    m = t.m
    if (a1 % m == 0 or a2 % m == 0 or b2 % m == 0 or (c - b1 - b2) % m == 0):
        return None
    lhs = hy.fb_i(t, (a1, a2), (b1, b2), c, (lam, 1))
    rhs = (t.gauss_circ_i(c) * t.gauss_i(c - a2 - b2)
           * t.inv_gauss_circ_i(c - a2) * t.inv_gauss_circ_i(c - b2)
           * hy.hyper_i(t, (a1, b1, c - a2 - b2), (c - a2, c - b2), lam))
    return [(lhs, rhs)]


_register("F3-3F2-at1", "registry", False, _fixed("all", 5, 1, _run_f3_3f2_at1),
          note="family B with second coordinate pinned at 1 vs 3F2")


def _run_f3_3f2_split(t, ch, pt):
    a1, a2, b1, b2, c = ch
    (lam,) = pt
    m = t.m
    ctx = t.ctx
    if (a1 % m == 0 or a2 % m == 0 or b1 % m == 0 or b2 % m == 0
            or (c - a1 - a2) % m == 0 or lam == 1):
        return None
    lhs = hy.fb_i(t, (a1, a2), (b1, b2), c,
                  (lam, ctx.div_i(lam, ctx.sub_i(lam, 1))))
    rhs = (t.gauss_i(a1 + a2 - c) * t.gauss_i(a2 + b1 - c) * t.gauss_i(-b2)
           * t.inv_gauss_i(-c) * t.inv_gauss_circ_i(a1 + a2 + b1 - c)
           * t.inv_gauss_circ_i(a2 - b2)
           * t.chi_i(-c, lam) * t.chi_i(a2, ctx.sub_i(1, lam))
           * hy.hyper_i(t, (a1 + a2 - c, a2 + b1 - c, -b2),
                        (a1 + a2 + b1 - c, a2 - b2), ctx.sub_i(1, lam)))
    return [(lhs, rhs)]


_register("F3-3F2-split", "registry", False, _fixed("all", 5, 1, _run_f3_3f2_split),
          note="family B at (l, l/(l-1)) vs 3F2 at 1-l")


def _run_f3_2f1_quad(t, ch, pt):
    b1, b2, c = ch
    (lam,) = pt
    m = t.m
    ctx = t.ctx
    if (2 * b1) % m == 0 or (2 * b2) % m == 0:
        return None
    for s in (2 * (b1 + b2), 2 * (b1 - b2)):
        if (s - 2 * c) % m == 0 or (s + 2 * c) % m == 0:
            return None
    if lam == 1 or lam == ctx.neg_i(1):
        return None
    phi = m // 2
    x = ctx.div_i(lam, ctx.add_i(lam, 1))
    y = ctx.div_i(lam, ctx.sub_i(lam, 1))
    lhs = hy.fb_i(t, (2 * b1, 2 * b2), (-2 * b1, -2 * b2), 2 * c, (x, y))
    one_plus = ctx.add_i(1, lam)
    arg = ctx.div_i(ctx.mul_i(ctx.int_elem(4), lam), ctx.mul_i(one_plus, one_plus))
    acc = t.zero
    for cp in (c, c + phi):
        acc = acc + hy.hyper_i(t, (b2 - b1 + cp, b1 + b2 + cp + phi), (2 * c,), arg)
    rhs = (t.chi_i(-2 * b2 - 2 * c, one_plus)
           * t.chi_i(2 * b2, ctx.sub_i(1, lam)) * acc)
    return [(lhs, rhs)]


_register("F3-2F1-quad", "registry", True, _fixed("all", 3, 1, _run_f3_2f1_quad),
          note="family B on the split quadratic locus vs a 2F1 pair")


def _run_karlsson(t, ch, pt):
    a1, a2, b1, b2, c = ch
    (lam,) = pt
    m = t.m
    ctx = t.ctx
    for bad in (a1 + a2, b1 + b2, a1 + b2, a2 + b1, a1 + a2 + b1 + b2):
        if (c - bad) % m == 0:
            return None
    if a1 % m == 0 or a2 % m == 0 or b1 % m == 0 or b2 % m == 0 or lam == 1:
        return None
    point = (lam, ctx.div_i(lam, ctx.sub_i(lam, 1)))
    lhs = (t.chi_i(a1 + a2 + b1 - c, ctx.sub_i(1, lam))
           * hy.fb_i(t, (a1, a2), (b1, b2), c, point))
    rhs = hy.fb_i(t, (c - a2 - b1, a1 + a2 + b1 + b2 - c), (c - a1 - a2, a2), c, point)
    return [(lhs, rhs)]


_register("karlsson", "registry", False, _fixed("all", 5, 1, _run_karlsson),
          note="parameter swap of family B on the split locus")


def _run_f4red_parity(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    ctx = t.ctx
    phi = t.m // 2
    pts = (ctx.mul_i(lam, lam), ctx.pow_i(ctx.sub_i(1, lam), 2))
    lhs = hy.fc_i(t, a, b, (c + phi, phi), pts)
    rhs = (t.poch_i(a, phi) * t.poch_i(b, phi)
           * hy.fc_i(t, a + phi, b + phi, (c + phi, phi), pts))
    return [(lhs, rhs)]


_register("F4red-parity", "registry", True, _fixed("all", 3, 1, _run_f4red_parity),
          note="quadratic-twist parity reduction of family C")


def _run_f4red_trans(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    m = t.m
    ctx = t.ctx
    if a % m == 0 or (c - b) % m == 0 or lam == 1:
        return None
    phi = m // 2
    lhs = hy.fc_i(t, a, b, (c + phi, phi),
                  (ctx.mul_i(lam, lam), ctx.pow_i(ctx.sub_i(1, lam), 2)))
    om = ctx.sub_i(1, lam)
    om2 = ctx.mul_i(om, om)
    rhs = (t.gauss_i(b - a) * t.gauss_i(a + phi) * t.inv_gauss_i(b) * t.inv_gauss_i(phi)
           * t.chi_i(-2 * a, om)
           * hy.fc_i(t, a, a + phi, (c + phi, a - b),
                     (ctx.div_i(ctx.mul_i(lam, lam), om2), ctx.inv_i(om2))))
    return [(lhs, rhs)]


_register("F4red-trans", "registry", True, _fixed("all", 3, 1, _run_f4red_trans),
          note="family C transformation into the shifted-parameter form")


def _run_f4red_3f2(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    m = t.m
    ctx = t.ctx
    if (a - b + m // 2) % m == 0 or c % m == 0 or lam == 1:
        return None
    phi = m // 2
    om = ctx.sub_i(1, lam)
    om2 = ctx.mul_i(om, om)
    lhs = (t.chi_i(-2 * a, om)
           * hy.fc_i(t, a, a + phi, (c + phi, a - b),
                     (ctx.div_i(ctx.mul_i(lam, lam), om2), ctx.inv_i(om2))))
    rhs = (t.gauss_i(b) * t.gauss_i(b + phi) * t.inv_gauss_i(b - a)
           * t.inv_gauss_circ_i(a + b + phi)
           * hy.hyper_i(t, (2 * a, 2 * b, c), (a + b + phi, 2 * c), lam))
    return [(lhs, rhs)]


_register("F4red-3F2", "registry", True, _fixed("all", 3, 1, _run_f4red_3f2),
          note="shifted family C reduces to a 3F2 on the diagonal")


def _run_f4_lintrans(t, ch, pt):
    a, b, c1, c2 = ch
    x, y = pt
    m = t.m
    ctx = t.ctx
    if a % m == 0 or (c1 + c2 - b) % m == 0 or y == 0:
        return None
    lhs = hy.fc_i(t, a, b, (c1, c2), (x, y))
    rhs = (t.gauss_i(b - a) * t.gauss_i(a - c2) * t.inv_gauss_i(b) * t.inv_gauss_i(-c2)
           * t.chi_i(-a, y)
           * hy.fc_i(t, a, a - c2, (c1, a - b), (ctx.div_i(x, y), ctx.inv_i(y))))
    return [(lhs, rhs)]


_register("F4-lintrans", "registry", False, _fixed("all", 4, 2, _run_f4_lintrans),
          note="coordinate rescaling transformation of family C")


def _run_appell_kampe(t, ch, pt):
    a, b, c = ch
    x, y = pt
    m = t.m
    ctx = t.ctx
    if (2 * b) % m == 0 or y == 1 or y == ctx.neg_i(1):
        return None
    phi = m // 2
    lhs = hy.fc_i(t, a, a - b + phi, (c, b + phi), (x, ctx.mul_i(y, y)))
    one_plus = ctx.add_i(1, y)
    denom = ctx.mul_i(one_plus, one_plus)
    rhs = (t.chi_i(-2 * a, one_plus)
           * hy.fa_i(t, a, (a - b + phi, b), (c, 2 * b),
                     (ctx.div_i(x, denom),
                      ctx.div_i(ctx.mul_i(ctx.int_elem(4), y), denom))))
    return [(lhs, rhs)]


_register("appell-kampe", "registry", True, _fixed("all", 3, 2, _run_appell_kampe),
          note="family C at (x, y^2) vs family A with rescaled coordinates")


def _run_gauss_quad(t, ch, pt):
    a, b = ch
    (lam,) = pt
    m = t.m
    ctx = t.ctx
    if (2 * b) % m == 0 or lam == 1 or lam == ctx.neg_i(1):
        return None
    phi = m // 2
    lhs = hy.hyper_i(t, (a, a - b + phi), (b + phi,), ctx.mul_i(lam, lam))
    one_plus = ctx.add_i(1, lam)
    arg = ctx.div_i(ctx.mul_i(ctx.int_elem(4), lam), ctx.mul_i(one_plus, one_plus))
    rhs = t.chi_i(-2 * a, one_plus) * hy.hyper_i(t, (a, b), (2 * b,), arg)
    return [(lhs, rhs)]


_register("gauss-quad-lemma", "registry", True, _fixed("all", 2, 1, _run_gauss_quad),
          note="quadratic argument transformation of 2F1, all degenerate branches")


def _run_tb_i(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    m = t.m
    for s in (2 * b, 2 * c, 2 * b + 2 * c, 2 * b - 2 * c):
        if s % m == 0:
            return None
    ctx = t.ctx
    phi = m // 2
    lhs = hy.fa_i(t, 2 * a, (2 * b, 2 * c), (4 * b, 4 * c), (lam, ctx.neg_i(lam)))
    rhs = hy.hyper_i(t, (a, a + phi, b + c, b + c + phi),
                     (2 * b + phi, 2 * c + phi, 2 * b + 2 * c), ctx.mul_i(lam, lam))
    return [(lhs, rhs)]


_register("tb-i", "registry", True, _fixed("all", 3, 1, _run_tb_i),
          note="family A at (l, -l) with doubled parameters vs 4F3")


def _run_tb_ii(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    m = t.m
    for s in (b, b - c, b - c - m // 2, b - 2 * c):
        if s % m == 0:
            return None
    ctx = t.ctx
    phi = m // 2
    lhs = hy.fa_i(t, 2 * a, (b, b), (2 * c, 2 * c), (lam, ctx.neg_i(lam)))
    rhs = hy.hyper_i(t, (a, a + phi, b, 2 * c - b), (2 * c, c, c + phi),
                     ctx.mul_i(lam, lam))
    return [(lhs, rhs)]


_register("tb-ii", "registry", True, _fixed("all", 3, 1, _run_tb_ii),
          note="family A with equal numerator parameters vs 4F3")


def _run_tb_iii(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    m = t.m
    for s in (2 * a, 2 * b, 2 * a + 2 * b):
        if s % m == 0:
            return None
    ctx = t.ctx
    phi = m // 2
    lhs = hy.fb_i(t, (2 * a, 2 * a), (2 * b, 2 * b), 2 * c, (lam, ctx.neg_i(lam)))
    rhs = hy.hyper_i(t, (a + b, a + b + phi, 2 * a, 2 * b),
                     (2 * a + 2 * b, c, c + phi), ctx.mul_i(lam, lam))
    return [(lhs, rhs)]


_register("tb-iii", "registry", True, _fixed("all", 3, 1, _run_tb_iii),
          note="family B at (l, -l) vs 4F3")


def _run_tb_iv(t, ch, pt):
    a, b, c1, c2 = ch
    (lam,) = pt
    m = t.m
    if (2 * c1 + 2 * c2) % m == 0 or (2 * c1 - 2 * c2) % m == 0:
        return None
    ctx = t.ctx
    phi = m // 2
    lhs = hy.fc_i(t, a, b, (2 * c1, 2 * c2), (lam, lam))
    rhs = hy.hyper_i(t, (a, b, c1 + c2, c1 + c2 + phi),
                     (2 * c1, 2 * c2, 2 * c1 + 2 * c2),
                     ctx.mul_i(ctx.int_elem(4), lam))
    return [(lhs, rhs)]


_register("tb-iv", "registry", True, _fixed("all", 4, 1, _run_tb_iv),
          note="family C on the diagonal vs 4F3 at 4l")


def _run_tb_v(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    ctx = t.ctx
    phi = t.m // 2
    lhs = hy.fc_i(t, 2 * a, 2 * b, (2 * c, 2 * c), (lam, ctx.neg_i(lam)))
    arg = ctx.neg_i(ctx.mul_i(ctx.int_elem(4), ctx.mul_i(lam, lam)))
    rhs = hy.hyper_i(t, (a, a + phi, b, b + phi), (2 * c, c, c + phi), arg)
    return [(lhs, rhs)]


_register("tb-v", "registry", True, _fixed("all", 3, 1, _run_tb_v),
          note="family C at (l, -l) vs 4F3 at -4l^2, no parameter hypothesis")


def _run_extra_i(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    m = t.m
    for s in (b, b - 2 * c, 2 * b - 2 * c):
        if s % m == 0:
            return None
    ctx = t.ctx
    phi = m // 2
    lhs = hy.fa_i(t, 2 * a, (b, b - 2 * c), (2 * c, -2 * c), (lam, ctx.neg_i(lam)))
    # q^delta(c) normalizes the c = trivial case, as in the conjugate-pair
    # family C statement; without it the two sides differ exactly by q there
    rhs = (t.q ** t.delta_i(c)) * hy.hyper_i(
        t, (a, a + phi, b - c + phi, c - b + phi),
        (phi, c + phi, phi - c), ctx.mul_i(lam, lam))
    return [(lhs, rhs)]


_register("extra-i", "registry", True, _fixed("all", 3, 1, _run_extra_i),
          note="family A with conjugate denominator pair vs 4F3")


def _run_extra_ii(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    m = t.m
    for s in (2 * a, 2 * b, 2 * a + 2 * b, 2 * a - 2 * b):
        if s % m == 0:
            return None
    ctx = t.ctx
    phi = m // 2
    lhs = hy.fb_i(t, (2 * a, 2 * b), (-2 * a, -2 * b), 2 * c, (lam, ctx.neg_i(lam)))
    rhs = hy.hyper_i(t, (a + b, -a - b, a - b + phi, b - a + phi),
                     (phi, c, c + phi), ctx.mul_i(lam, lam))
    return [(lhs, rhs)]


_register("extra-ii", "registry", True, _fixed("all", 3, 1, _run_extra_ii),
          note="family B with inverted parameters vs 4F3")


def _run_extra_iii(t, ch, pt):
    a, b, c = ch
    (lam,) = pt
    ctx = t.ctx
    phi = t.m // 2
    lhs = hy.fc_i(t, 2 * a, 2 * b, (2 * c, -2 * c), (lam, ctx.neg_i(lam)))
    arg = ctx.neg_i(ctx.mul_i(ctx.int_elem(4), ctx.mul_i(lam, lam)))
    rhs = (t.q ** t.delta_i(c)) * hy.hyper_i(
        t, (a, a + phi, b, b + phi), (phi, c + phi, phi - c), arg)
    return [(lhs, rhs)]


_register("extra-iii", "registry", True, _fixed("all", 3, 1, _run_extra_iii),
          note="family C with conjugate denominators vs 4F3, with a q^delta factor")


def _fd_multinomial_cfg(n):
    def run(t, ch, pt):
        bs, nu = ch[:n], ch[n]
        m = t.m
        if sum(bs) % m == 0:
            return None
        lhs = t.poch_i(sum(bs), nu) * t.inv_poch_circ_i(0, nu)
        acc = t.zero
        for partial in itertools.product(range(m), repeat=n - 1):
            last = (nu - sum(partial)) % m
            term = t.one
            for b, v in zip(bs, partial + (last,)):
                term = term * t.poch_i(b, v) * t.inv_poch_circ_i(0, v)
            acc = acc + term
        rhs = acc * Fraction(-1, m) ** (n - 1)
        return [(lhs, rhs)]

    return SweepConfig(f"n{n}", n + 1, 0, run)


_register("fd-multinomial", "registry", False,
          lambda max_arity: [_fd_multinomial_cfg(n) for n in (2, 3)],
          note="multinomial splitting of one Pochhammer ratio over the group")


def _fd_collapse_cfg(n, i):
    def run(t, ch, pt):
        a = ch[0]
        bs = ch[1:1 + n]
        c = ch[1 + n]
        tail = sum(bs[i:]) % t.m
        if tail == 0:
            return None
        lams, x = pt[:i], pt[i]
        lhs = hy.fd_i(t, a, bs, c, lams + (x,) * (n - i))
        rhs = hy.fd_i(t, a, bs[:i] + (tail,), c, lams + (x,))
        return [(lhs, rhs)]

    return SweepConfig(f"n{n}-i{i}", n + 2, i + 1, run)


_register("fd-collapse", "registry", False,
          lambda max_arity: [_fd_collapse_cfg(n, i)
                             for n in (2, 3) if n <= max_arity
                             for i in range(n)],
          note="repeated trailing coordinates merge into one parameter")


def _fd_at_one_cfg(n, i):
    def run(t, ch, pt):
        a = ch[0]
        bs = ch[1:1 + n]
        c = ch[1 + n]
        m = t.m
        tail = sum(bs[i:]) % m
        if tail == 0 or tail == (c - a) % m:
            return None
        lhs = hy.fd_i(t, a, bs, c, pt + (1,) * (n - i))
        factor = (t.gauss_circ_i(c) * t.gauss_i(c - a - tail)
                  * t.inv_gauss_circ_i(c - a) * t.inv_gauss_circ_i(c - tail))
        if i == 0:
            rhs = factor
        else:
            rhs = factor * hy.fd_i(t, a, bs[:i], c - tail, pt)
        return [(lhs, rhs)]

    return SweepConfig(f"n{n}-i{i}", n + 2, i, run)


_register("fd-at-one", "registry", False,
          lambda max_arity: [_fd_at_one_cfg(n, i)
                             for n in (2, 3) if n <= max_arity
                             for i in range(n)],
          note="trailing coordinates pinned at 1 absorb into a Gauss-sum ratio")


def _run_int_fa(t, ch, pt):
    a, b1, b2, c1, c2 = ch
    x, y = pt
    m = t.m
    ctx = t.ctx
    if a % m == 0 or (c1 - b1) % m == 0 or (c2 - b2) % m == 0 or x == 0 or y == 0:
        return None
    lhs = (t.jacobi_i(b1, c1 - b1) * t.jacobi_i(b2, c2 - b2)
           * hy.fa_i(t, a, (b1, b2), (c1, c2), (x, y)))
    exps = []
    for u in range(1, t.q):
        e1 = t.chi_exp(b1, u)
        e2 = t.chi_exp(c1 - b1, ctx.sub_i(1, u))
        if e2 is None:
            continue
        xu = ctx.mul_i(x, u)
        for v in range(1, t.q):
            e3 = t.chi_exp(b2, v)
            e4 = t.chi_exp(c2 - b2, ctx.sub_i(1, v))
            if e4 is None:
                continue
            e0 = t.chi_exp(-a, ctx.sub_i(ctx.sub_i(1, xu), ctx.mul_i(y, v)))
            if e0 is None:
                continue
            exps.append(e0 + e1 + e2 + e3 + e4)
    return [(lhs, t.zeta_sum(exps))]


_register("int-FA", "registry", False, _fixed("all", 5, 2, _run_int_fa),
          note="double-sum representation of the two-variable family A")


def _run_int_fb(t, ch, pt):
    a1, a2, b1, b2, c = ch
    x, y = pt
    m = t.m
    ctx = t.ctx
    if a1 % m == 0 or a2 % m == 0 or (c - b1 - b2) % m == 0 or x == 0 or y == 0:
        return None
    lhs = (t.gauss_i(b1) * t.gauss_i(b2) * t.gauss_i(c - b1 - b2) * t.inv_gauss_circ_i(c)
           * hy.fb_i(t, (a1, a2), (b1, b2), c, (x, y)))
    exps = []
    for u in range(1, t.q):
        e1 = t.chi_exp(-a1, ctx.sub_i(1, ctx.mul_i(x, u)))
        if e1 is None:
            continue
        e2 = t.chi_exp(b1, u)
        for v in range(1, t.q):
            e3 = t.chi_exp(-a2, ctx.sub_i(1, ctx.mul_i(y, v)))
            if e3 is None:
                continue
            e4 = t.chi_exp(b2, v)
            e5 = t.chi_exp(c - b1 - b2, ctx.sub_i(ctx.sub_i(1, u), v))
            if e5 is None:
                continue
            exps.append(e1 + e2 + e3 + e4 + e5)
    return [(lhs, t.zeta_sum(exps))]


_register("int-FB", "registry", False, _fixed("all", 5, 2, _run_int_fb),
          note="double-sum representation of the two-variable family B")


def _run_int_f4(t, ch, pt):
    a, b, c1, c2 = ch
    x, y = pt
    m = t.m
    ctx = t.ctx
    if a % m == 0 or (c1 + c2 - b) % m == 0 or x == 0 or y == 0:
        return None
    lhs = (t.gauss_i(-c1) * t.gauss_i(-c2) * t.gauss_i(c1 + c2 - b)
           * t.inv_gauss_circ_i(-b) * hy.fc_i(t, a, b, (c1, c2), (x, y)))
    exps = []
    for u in range(1, t.q):
        xu = ctx.div_i(x, u)
        e1 = t.chi_exp(-c1, u)
        for v in range(1, t.q):
            e0 = t.chi_exp(-a, ctx.sub_i(ctx.sub_i(1, xu), ctx.div_i(y, v)))
            if e0 is None:
                continue
            e2 = t.chi_exp(-c2, v)
            e3 = t.chi_exp(c1 + c2 - b, ctx.sub_i(ctx.sub_i(1, u), v))
            if e3 is None:
                continue
            exps.append(e0 + e1 + e2 + e3)
    return [(lhs, t.zeta_sum(exps))]


_register("int-F4", "registry", False, _fixed("all", 4, 2, _run_int_f4),
          note="double-sum representation of the two-variable family C")


def _fa_fb_remark_cfg(n):
    def run(t, ch, pt):
        aas, bs = ch[:n], ch[n:2 * n]
        c = ch[2 * n]
        ctx = t.ctx
        if any(l == 0 for l in pt):
            return None
        lhs = hy.fb_i(t, aas, bs, c, pt)
        rhs = t.poch_i(-c, sum(bs))
        for a, b, lam in zip(aas, bs, pt):
            rhs = rhs * t.poch_i(a, -b) * t.chi_i(-b, lam)
        rhs = rhs * hy.fa_i(t, sum(bs) - c, bs,
                            tuple(b - a for a, b in zip(aas, bs)),
                            tuple(ctx.inv_i(l) for l in pt))
        return [(lhs, rhs)]

    return SweepConfig(f"n{n}", 2 * n + 1, n, run)


_register("fa-fb-remark", "registry", False,
          lambda max_arity: [_fa_fb_remark_cfg(n) for n in (1, 2) if n <= max_arity],
          note="family B as a reweighted family A at inverted coordinates")


def _psi_choice_cfgs(max_arity):
    shapes = []

    def lauricella_shape(fam, n):
        if fam == "A":
            slots = 1 + 2 * n

            def ev(t, ch, pts):
                return hy.fa_i(t, ch[0], ch[1:1 + n], ch[1 + n:], pts)
        elif fam == "B":
            slots = 2 * n + 1

            def ev(t, ch, pts):
                return hy.fb_i(t, ch[:n], ch[n:2 * n], ch[2 * n], pts)
        elif fam == "C":
            slots = 2 + n

            def ev(t, ch, pts):
                return hy.fc_i(t, ch[0], ch[1], ch[2:], pts)
        else:
            slots = n + 2

            def ev(t, ch, pts):
                return hy.fd_i(t, ch[0], ch[1:1 + n], ch[1 + n], pts)

        def run(t, ch, pt):
            twist, pts = pt[0], pt[1:]
            if twist == 0:
                return None
            return [(ev(t, ch, pts), ev(t.retwist(twist), ch, pts))]

        return SweepConfig(f"{fam}{n}", slots, n + 1, run)

    for fam in "ABCD":
        for n in (1, 2):
            if n <= max_arity:
                shapes.append(lauricella_shape(fam, n))

    def run_2f1(t, ch, pt):
        twist, lam = pt
        if twist == 0:
            return None
        return [(hy.hyper_i(t, ch[:2], ch[2:], lam),
                 hy.hyper_i(t.retwist(twist), ch[:2], ch[2:], lam))]

    def run_3f2(t, ch, pt):
        twist, lam = pt
        if twist == 0:
            return None
        return [(hy.hyper_i(t, ch[:3], ch[3:], lam),
                 hy.hyper_i(t.retwist(twist), ch[:3], ch[3:], lam))]

    shapes.append(SweepConfig("2F1", 3, 2, run_2f1))
    shapes.append(SweepConfig("3F2", 5, 2, run_3f2))
    return shapes


_register("psi-choice", "registry", False, _psi_choice_cfgs,
          note="values do not depend on the choice of the additive character")


def all_ids() -> list[str]:
    return list(REGISTRY)


def get(id: str) -> Identity:
    try:
        return REGISTRY[id]
    except KeyError:
        raise KeyError(f"unknown identity id {id!r}") from None

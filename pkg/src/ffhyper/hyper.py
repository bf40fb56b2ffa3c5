"""Hypergeometric sums over a finite field: mFn, the four Lauricella
families, the Fourier-transform pair, and brute-force double-sum oracles.

Every family reduces to the same table-driven shape.  For a parameter set,
the per-index factor (Pochhammer ratios times nu(lambda)) is tabulated
once over the character group; an n-variable sum is then a cyclic
convolution of its axis tables over Z/(q-1) followed by a dot product
against the head-factor table:

    sum over mu of head(mu) * (F_1 (*) ... (*) F_n)(mu)

Axis tables, head tables and convolutions are memoized per tables object,
so exhaustive parameter sweeps degenerate into cache lookups.  All
machinery is backend generic: it only uses the primitive surface shared
by the exact tables and the floating cross-check tables.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .characters import MulChar
from .fields import FqElem

FAMILIES = ("A", "B", "C", "D")


# ---------------------------------------------------------------------------
# one-variable sums


def _coef_table(t, uppers: tuple[int, ...], lowers: tuple[int, ...]):
    key = ("coef", uppers, lowers)
    got = t._cache.get(key)
    if got is None:
        vals = []
        for nu in range(t.m):
            v = t.inv_poch_circ_i(0, nu)
            for a in uppers:
                v = v * t.poch_i(a, nu)
            for b in lowers:
                v = v * t.inv_poch_circ_i(b, nu)
            vals.append(v)
        got = t.t_from_values(vals)
        t._cache[key] = got
    return got


def hyper_i(t, uppers, lowers, lam: int):
    """mFn at a raw evaluation point; upper/lower are character indices."""
    uppers = tuple(sorted(j % t.m for j in uppers))
    lowers = tuple(sorted(j % t.m for j in lowers))
    if lam == 0:
        return t.zero
    table = _coef_table(t, uppers, lowers)
    k = t.ctx.dlog_i(lam)
    shifts = [(t.p * nu * k) % t.N for nu in range(t.m)]
    return t.t_sum_shifted(table, shifts) * Fraction(-1, t.m)


# ---------------------------------------------------------------------------
# Lauricella families


def _axis_table(t, family: str, chars: tuple[int, ...], lam: int):
    key = ("axis", family, chars, lam)
    got = t._cache.get(key)
    if got is None:
        vals = []
        for nu in range(t.m):
            v = t.inv_poch_circ_i(0, nu)
            if family == "A":
                b, c = chars
                v = v * t.poch_i(b, nu) * t.inv_poch_circ_i(c, nu)
            elif family == "B":
                a, b = chars
                v = v * t.poch_i(a, nu) * t.poch_i(b, nu)
            elif family == "C":
                (c,) = chars
                v = v * t.inv_poch_circ_i(c, nu)
            else:
                (b,) = chars
                v = v * t.poch_i(b, nu)
            vals.append(v)
        k = t.ctx.dlog_i(lam)
        shifts = [(t.p * nu * k) % t.N for nu in range(t.m)]
        got = t.t_from_values(vals, shifts=shifts)
        t._cache[key] = got
    return got


def _head_table(t, family: str, chars: tuple[int, ...]):
    key = ("head", family, chars)
    got = t._cache.get(key)
    if got is None:
        vals = []
        for mu in range(t.m):
            if family == "A":
                (a,) = chars
                v = t.poch_i(a, mu)
            elif family == "B":
                (c,) = chars
                v = t.inv_poch_circ_i(c, mu)
            elif family == "C":
                a, b = chars
                v = t.poch_i(a, mu) * t.poch_i(b, mu)
            else:
                a, c = chars
                v = t.poch_i(a, mu) * t.inv_poch_circ_i(c, mu)
            vals.append(v)
        got = t.t_from_values(vals)
        t._cache[key] = got
    return got


def _convolve_axes(t, keyed_tables):
    """Fold axis tables with a cache keyed by the sorted key multiset."""
    keyed_tables = sorted(keyed_tables, key=lambda kt: kt[0])
    keys = tuple(k for k, _ in keyed_tables)
    if len(keyed_tables) == 1:
        return keyed_tables[0][1]
    cache_key = ("conv",) + keys
    got = t._cache.get(cache_key)
    if got is None:
        left = _convolve_axes(t, keyed_tables[:-1])
        got = t.t_conv(left, keyed_tables[-1][1])
        t._cache[cache_key] = got
    return got


def _lauricella(t, family, head_chars, axis_chars, lams):
    n = len(lams)
    if n < 1:
        raise ValueError("Lauricella arity must be >= 1")
    if n != len(axis_chars):
        raise ValueError("point arity does not match parameter arity")
    if n > t.max_arity:
        raise ValueError(f"arity {n} over the configured cap {t.max_arity}")
    if any(l == 0 for l in lams):
        return t.zero
    axes = [
        (("axis", family, chars, lam), _axis_table(t, family, chars, lam))
        for chars, lam in zip(axis_chars, lams)
    ]
    grid = _convolve_axes(t, axes)
    head = _head_table(t, family, head_chars)
    return t.t_dot(head, grid) * Fraction(-1, t.m) ** n


def fa_i(t, a, bs, cs, lams):
    """F_A: head (a)_{nu_1...nu_n}; axis i carries (b_i)/(c_i)°(eps)°."""
    m = t.m
    return _lauricella(
        t,
        "A",
        (a % m,),
        tuple((b % m, c % m) for b, c in zip(bs, cs, strict=True)),
        tuple(lams),
    )


def fb_i(t, aas, bs, c, lams):
    """F_B: head 1/(c)°_{nu_1...nu_n}; axis i carries (a_i)(b_i)/(eps)°."""
    m = t.m
    return _lauricella(
        t,
        "B",
        (c % m,),
        tuple((a % m, b % m) for a, b in zip(aas, bs, strict=True)),
        tuple(lams),
    )


def fc_i(t, a, b, cs, lams):
    """F_C: head (a)(b) by product index; axis i carries 1/(c_i)°(eps)°."""
    m = t.m
    return _lauricella(t, "C", (a % m, b % m), tuple((c % m,) for c in cs), tuple(lams))


def fd_i(t, a, bs, c, lams):
    """F_D: head (a)/(c)° by product index; axis i carries (b_i)/(eps)°."""
    m = t.m
    return _lauricella(t, "D", (a % m, c % m), tuple((b % m,) for b in bs), tuple(lams))


# ---------------------------------------------------------------------------
# Fourier transform on (k^x)^n


def fourier_transform(t, f, n: int = 1):
    """The transform f_hat(nu_1..nu_n) = sum f(t_1..t_n) prod nubar_i(t_i).

    ``f`` is called with n nonzero element indices and must return backend
    values; the result is a function of n character indices.
    """
    tuples = list(itertools.product(range(1, t.q), repeat=n))
    table = t.t_from_values([f(*tp) for tp in tuples])

    def fhat(*nus):
        if len(nus) != n:
            raise ValueError("arity mismatch")
        shifts = [
            sum(t.chi_exp(-nu, x) for nu, x in zip(nus, tp)) % t.N for tp in tuples
        ]
        return t.t_sum_shifted(table, shifts)

    return fhat


def inverse_fourier(t, fhat, n: int = 1):
    """Pointwise inversion: f(l_1..l_n) = (q-1)^{-n} sum fhat(nu) prod nu_i(l_i)."""
    chars = list(itertools.product(range(t.m), repeat=n))
    table = t.t_from_values([fhat(*cs) for cs in chars])

    def f(*xs):
        shifts = [
            sum(t.chi_exp(nu, x) for nu, x in zip(cs, xs)) % t.N for cs in chars
        ]
        return t.t_sum_shifted(table, shifts) * Fraction(1, t.m**n)

    return f


# ---------------------------------------------------------------------------
# brute-force summation oracles


def double_sum_3f2(t, a0, a1, a2, b1, b2, lam: int):
    """Independent double sum matching (prod j) * 3F2 up to the Jacobi factor.

    sum over s,u nonzero of
    a0bar(1 - lam*s*u) a1(s) a1bar*b1(1-s) a2(u) a2bar*b2(1-u).
    """
    ctx = t.ctx
    if lam == 0:
        raise ValueError("the double-sum representation needs lambda != 0")
    exps = []
    for s in range(1, t.q):
        e1 = t.chi_exp(a1, s)
        e2 = t.chi_exp(b1 - a1, ctx.sub_i(1, s))
        if e2 is None:
            continue
        for u in range(1, t.q):
            e3 = t.chi_exp(a2, u)
            e4 = t.chi_exp(b2 - a2, ctx.sub_i(1, u))
            if e4 is None:
                continue
            e0 = t.chi_exp(-a0, ctx.sub_i(1, ctx.mul_i(lam, ctx.mul_i(s, u))))
            if e0 is None:
                continue
            exps.append(e0 + e1 + e2 + e3 + e4)
    return t.zeta_sum(exps)


def nfold_confluent_sum(t, alphas, betas, lam: int):
    """The n-fold sum matching (-1)^n (prod j) * nFn:

    sum over u_1..u_n of psi(-lam u_1...u_n) prod alpha_i(u_i) alphabar_i beta_i(1-u_i).
    """
    ctx = t.ctx
    n = len(alphas)
    exps = []
    for us in itertools.product(range(1, t.q), repeat=n):
        acc = 0
        prod = 1
        ok = True
        for a, b, u in zip(alphas, betas, us):
            e1 = t.chi_exp(a, u)
            e2 = t.chi_exp(b - a, ctx.sub_i(1, u))
            if e2 is None:
                ok = False
                break
            acc += e1 + e2
            prod = ctx.mul_i(prod, u)
        if ok:
            exps.append(acc + t.psi_exp(ctx.neg_i(ctx.mul_i(lam, prod))))
    return t.zeta_sum(exps)


# ---------------------------------------------------------------------------
# rationality domain


def value_in_small_cyclotomic(t, v) -> bool:
    """Whether an exact value lies in Q(mu_{q-1}) inside Q(mu_{p(q-1)}).

    Tested as invariance under the automorphisms zeta -> zeta^j for
    j = 1 mod (q-1) coprime to the order; equivalent to having no
    coordinates outside the embedded subfield.
    """
    ring = t.ring
    for s in range(1, t.p):
        j = 1 + s * t.m
        if math.gcd(j, t.N) == 1:
            if ring.apply_galois(v, j) != v:
                return False
    return True


# ---------------------------------------------------------------------------
# spec-facing parameter carriers


@dataclass(frozen=True)
class HyperParams:
    """Upper and lower character lists of an mFn sum; either may be empty."""

    upper: tuple[MulChar, ...]
    lower: tuple[MulChar, ...]


@dataclass(frozen=True)
class EvalPoint:
    coords: tuple[FqElem, ...]


@dataclass(frozen=True)
class LauricellaParams:
    """Characters of one Lauricella family, shaped per the family definition.

    family A: alpha (1), beta (n), c (n)     family B: alpha (n), beta (n), c (1)
    family C: alpha (1), beta (1), c (n)     family D: alpha (1), beta (n), c (1)
    """

    family: str
    alpha: tuple[MulChar, ...]
    beta: tuple[MulChar, ...]
    c: tuple[MulChar, ...]

    def arity(self) -> int:
        if self.family == "A":
            n = len(self.beta)
            ok = len(self.alpha) == 1 and len(self.c) == n
        elif self.family == "B":
            n = len(self.alpha)
            ok = len(self.beta) == n and len(self.c) == 1
        elif self.family == "C":
            n = len(self.c)
            ok = len(self.alpha) == 1 and len(self.beta) == 1
        elif self.family == "D":
            n = len(self.beta)
            ok = len(self.alpha) == 1 and len(self.c) == 1
        else:
            raise ValueError(f"unknown family {self.family!r}")
        if not ok or n < 1:
            raise ValueError("parameter shape does not match the family")
        return n


def hyper(t, params: HyperParams, lam: FqElem | int):
    """The one-variable sum mFn(upper; lower; lambda)."""
    idx = lam if isinstance(lam, int) else t.ctx.index_of(lam)
    return hyper_i(t, [c.j for c in params.upper], [c.j for c in params.lower], idx)


def lauricella(t, params: LauricellaParams, point: EvalPoint):
    """Evaluate one Lauricella family at an n-coordinate point."""
    n = params.arity()
    coords = tuple(
        x if isinstance(x, int) else t.ctx.index_of(x) for x in point.coords
    )
    if len(coords) != n:
        raise ValueError("point arity does not match parameter arity")
    a = [c.j for c in params.alpha]
    b = [c.j for c in params.beta]
    c = [c.j for c in params.c]
    if params.family == "A":
        return fa_i(t, a[0], b, c, coords)
    if params.family == "B":
        return fb_i(t, a, b, c[0], coords)
    if params.family == "C":
        return fc_i(t, a[0], b[0], c, coords)
    return fd_i(t, a[0], b, c[0], coords)

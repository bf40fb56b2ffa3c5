"""Floating-point twin of the exact tables, for cross-checks and benchmarks.

ComplexTables exposes the same primitive surface as SumTables but computes
with machine complex numbers, rebuilding its Gauss table by direct complex
summation rather than embedding the exact values; agreement between the
two backends is therefore a meaningful diagnostic.  Equality is relative
within ``tolerance``.  The exact backend remains the only truth source.
"""
from __future__ import annotations

import cmath
from fractions import Fraction

from .charsums import SumTables
from .fields import FieldCtx


class ComplexTables:
    is_exact = False
    tolerance = 1e-9

    def __init__(self, ctx: FieldCtx, twist: int = 1, max_arity: int = 3):
        if twist % ctx.q == 0:
            raise ValueError("additive character twist must be nonzero")
        self.ctx = ctx
        self.twist = twist % ctx.q
        self.q = ctx.q
        self.p = ctx.p
        self.m = ctx.q - 1
        self.N = ctx.N
        self.max_arity = max_arity
        self._cache: dict = {}
        self.roots = [cmath.exp(2j * cmath.pi * k / self.N) for k in range(self.N)]

        m, N, p = self.m, self.N, self.p
        psi_exps = [
            ((self.q - 1) * ctx.trace_t[ctx.mul_i(self.twist, ctx.exp_t[k])]) % N
            for k in range(m)
        ]
        self._gauss = [
            -sum(self.roots[(psi_exps[k] + p * j * k) % N] for k in range(m))
            for j in range(m)
        ]
        self._inv_gauss = [1.0 / g for g in self._gauss]
        self._gauss_circ = [self._gauss[0] * self.q] + self._gauss[1:]
        self._inv_gauss_circ = [1.0 / g for g in self._gauss_circ]

    # scalar helpers -----------------------------------------------------------

    one = 1 + 0j
    zero = 0j

    def rat(self, x) -> complex:
        return complex(float(Fraction(x)))

    def eq(self, u, v) -> bool:
        scale = max(1.0, abs(u), abs(v))
        return abs(u - v) <= self.tolerance * scale

    def delta_i(self, j: int) -> int:
        return 1 if j % self.m == 0 else 0

    def retwist(self, twist: int) -> "ComplexTables":
        twist %= self.q
        key = ("ctables", twist)
        got = self.ctx._sum_tables.get(key)
        if got is None:
            got = ComplexTables(self.ctx, twist, self.max_arity) if twist != self.twist else self
            self.ctx._sum_tables[key] = got
        return got

    # evaluation ----------------------------------------------------------------

    def chi_exp(self, j: int, x: int) -> int | None:
        if x == 0:
            return None
        return (self.p * j * self.ctx.dlog_i(x)) % self.N

    def psi_exp(self, x: int) -> int:
        ctx = self.ctx
        return ((self.q - 1) * ctx.trace_t[ctx.mul_i(self.twist, x)]) % self.N

    def chi_i(self, j: int, x: int) -> complex:
        e = self.chi_exp(j, x)
        return 0j if e is None else self.roots[e]

    def psi_i(self, x: int) -> complex:
        return self.roots[self.psi_exp(x)]

    def zeta_sum(self, exps) -> complex:
        return sum((self.roots[e % self.N] for e in exps if e is not None), 0j)

    def gauss_i(self, j: int) -> complex:
        return self._gauss[j % self.m]

    def gauss_circ_i(self, j: int) -> complex:
        return self._gauss_circ[j % self.m]

    def inv_gauss_i(self, j: int) -> complex:
        return self._inv_gauss[j % self.m]

    def inv_gauss_circ_i(self, j: int) -> complex:
        return self._inv_gauss_circ[j % self.m]

    def poch_i(self, a: int, nu: int) -> complex:
        return self._gauss[(a + nu) % self.m] * self._inv_gauss[a % self.m]

    def poch_circ_i(self, a: int, nu: int) -> complex:
        return self._gauss_circ[(a + nu) % self.m] * self._inv_gauss_circ[a % self.m]

    def inv_poch_i(self, a: int, nu: int) -> complex:
        return self._gauss[a % self.m] * self._inv_gauss[(a + nu) % self.m]

    def inv_poch_circ_i(self, a: int, nu: int) -> complex:
        return self._gauss_circ[a % self.m] * self._inv_gauss_circ[(a + nu) % self.m]

    def jacobi_i(self, *js: int) -> complex:
        if len(js) < 2:
            raise ValueError("Jacobi sums take at least two characters")
        js = tuple(j % self.m for j in js)
        if all(j == 0 for j in js):
            return complex((1 - (1 - self.q) ** len(js)) / self.q)
        out = 1 + 0j
        for j in js:
            out *= self._gauss[j]
        return out * self.inv_gauss_circ_i(sum(js))

    # table primitives ------------------------------------------------------------

    def t_from_values(self, values, shifts=None):
        if shifts is None:
            return [complex(v) for v in values]
        return [complex(v) * self.roots[k] for v, k in zip(values, shifts)]

    def t_conv(self, A, B):
        m = self.m
        out = [0j] * m
        for i, a in enumerate(A):
            for j, b in enumerate(B):
                out[(i + j) % m] += a * b
        return out

    def t_dot(self, A, B) -> complex:
        return sum((a * b for a, b in zip(A, B)), 0j)

    def t_sum_shifted(self, A, shifts) -> complex:
        return sum((a * self.roots[k] for a, k in zip(A, shifts)), 0j)


def complex_tables(ctx: FieldCtx, twist: int = 1, max_arity: int = 3) -> ComplexTables:
    key = ("ctables", twist % ctx.q)
    got = ctx._sum_tables.get(key)
    if got is None:
        got = ComplexTables(ctx, twist, max_arity)
        ctx._sum_tables[key] = got
    return got


def embed(tables: SumTables, v) -> complex:
    """Complex embedding of an exact value (zeta_N -> exp(2 pi i / N))."""
    return tables.ring.to_complex(v)

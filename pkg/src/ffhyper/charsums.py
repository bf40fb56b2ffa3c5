"""Gauss sums, Jacobi sums and finite Pochhammer symbols, cached per field.

A SumTables instance fixes one field and one additive character psi_a and
stores g(chi_j) for every j, built once by naive summation.  Everything
else is derived from the table, never re-summed:

  * g°(chi) = q^{delta(chi)} g(chi)
  * 1/g(chi) = chi(-1) g(chi^-1) / q for chi != trivial (Gauss inversion)
  * Pochhammer (a)_nu = g(a nu)/g(a) and its ° variant
  * Jacobi sums from the Gauss-quotient formula, with the rational branch
    (1 - (1-q)^n)/q when every argument is trivial

A brute-force Jacobi summation oracle is kept alongside for tests.
Index-level methods (suffix ``_i``) take raw character/element indices and
are the evaluation surface used by the hypergeometric layer.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .characters import MulChar
from .cyclotomic import CycNum
from .fields import FieldCtx


class SumTables:
    """Cached Gauss sums and derived data for one (field, psi twist) pair."""

    is_exact = True

    def __init__(self, ctx: FieldCtx, twist: int = 1, max_arity: int = 3):
        if twist % ctx.q == 0:
            raise ValueError("additive character twist must be nonzero")
        self.ctx = ctx
        self.twist = twist % ctx.q
        self.q = ctx.q
        self.p = ctx.p
        self.m = ctx.q - 1
        self.N = ctx.N
        self.ring = ctx.ring
        self.max_arity = max_arity
        self._cache: dict = {}

        self._gauss = self._build_gauss()
        one = self.ring.one()
        if self._gauss[0] != one:
            raise ArithmeticError("g(trivial) != 1; table construction is broken")
        for g in self._gauss:
            if g.is_zero():
                raise ArithmeticError("vanishing Gauss sum; table construction is broken")
        self._inv_gauss = self._build_inv_gauss()
        q = self.q
        self._gauss_circ = [self._gauss[0] * q] + self._gauss[1:]
        self._inv_gauss_circ = [self._inv_gauss[0] * Fraction(1, q)] + self._inv_gauss[1:]

    # table construction ------------------------------------------------------

    def _build_gauss(self) -> list[CycNum]:
        ctx = self.ctx
        m, N, p = self.m, self.N, self.p
        psi_exps = [
            ((self.q - 1) * ctx.trace_t[ctx.mul_i(self.twist, ctx.exp_t[k])]) % N
            for k in range(m)
        ]
        out = []
        for j in range(m):
            counts = [0] * N
            for k in range(m):
                counts[(psi_exps[k] + p * j * k) % N] -= 1
            out.append(self.ring.make(self.ring.k_reduce(counts), 1))
        return out

    def _build_inv_gauss(self) -> list[CycNum]:
        # 1/g(chi) = chi(-1) g(chi bar)/q away from the trivial character
        m = self.m
        out = [self.ring.one()]
        sign_exp = self.ctx.dlog_i(self.ctx.neg_i(1))  # dlog(-1)
        for j in range(1, m):
            sign = self.chi_exp_sign(j, sign_exp)
            out.append(self._gauss[(m - j) % m] * Fraction(sign, self.q))
        return out

    def chi_exp_sign(self, j: int, k: int) -> int:
        """chi_j(g^k) when it is rational (+1/-1), as a plain int."""
        e = (self.p * j * k) % self.N
        if e == 0:
            return 1
        if 2 * e == self.N:
            return -1
        raise ArithmeticError("character value is not rational")

    # scalar helpers ------------------------------------------------------------

    @property
    def one(self) -> CycNum:
        return self.ring.one()

    @property
    def zero(self) -> CycNum:
        return self.ring.zero()

    def rat(self, x) -> CycNum:
        return self.ring.from_rational(x)

    def eq(self, u, v) -> bool:
        return u == v

    def delta_i(self, j: int) -> int:
        return 1 if j % self.m == 0 else 0

    def retwist(self, twist: int) -> "SumTables":
        """The tables for the same field with additive character psi_twist."""
        twist %= self.q
        key = ("tables", twist)
        got = self.ctx._sum_tables.get(key)
        if got is None:
            got = SumTables(self.ctx, twist, self.max_arity) if twist != self.twist else self
            self.ctx._sum_tables[key] = got
        return got

    # character/element evaluation ------------------------------------------------

    def chi_exp(self, j: int, x: int) -> int | None:
        """Exponent e with chi_j(x) = zeta_N^e, or None when x = 0."""
        if x == 0:
            return None
        return (self.p * j * self.ctx.dlog_i(x)) % self.N

    def psi_exp(self, x: int) -> int:
        ctx = self.ctx
        return ((self.q - 1) * ctx.trace_t[ctx.mul_i(self.twist, x)]) % self.N

    def chi_i(self, j: int, x: int) -> CycNum:
        e = self.chi_exp(j, x)
        return self.ring.zero() if e is None else self.ring.zeta(e)

    def psi_i(self, x: int) -> CycNum:
        return self.ring.zeta(self.psi_exp(x))

    def zeta_sum(self, exps) -> CycNum:
        """Exact sum of zeta_N^e over an iterable of exponents (None skipped)."""
        counts = [0] * self.N
        for e in exps:
            if e is not None:
                counts[e % self.N] += 1
        return self.ring.make(self.ring.k_reduce(counts), 1)

    # Gauss and Pochhammer accessors -----------------------------------------------

    def gauss_i(self, j: int) -> CycNum:
        return self._gauss[j % self.m]

    def gauss_circ_i(self, j: int) -> CycNum:
        return self._gauss_circ[j % self.m]

    def inv_gauss_i(self, j: int) -> CycNum:
        return self._inv_gauss[j % self.m]

    def inv_gauss_circ_i(self, j: int) -> CycNum:
        return self._inv_gauss_circ[j % self.m]

    def poch_i(self, a: int, nu: int) -> CycNum:
        return self._gauss[(a + nu) % self.m] * self._inv_gauss[a % self.m]

    def poch_circ_i(self, a: int, nu: int) -> CycNum:
        return self._gauss_circ[(a + nu) % self.m] * self._inv_gauss_circ[a % self.m]

    def inv_poch_i(self, a: int, nu: int) -> CycNum:
        return self._gauss[a % self.m] * self._inv_gauss[(a + nu) % self.m]

    def inv_poch_circ_i(self, a: int, nu: int) -> CycNum:
        return self._gauss_circ[a % self.m] * self._inv_gauss_circ[(a + nu) % self.m]

    def jacobi_i(self, *js: int) -> CycNum:
        if len(js) < 2:
            raise ValueError("Jacobi sums take at least two characters")
        js = tuple(j % self.m for j in js)
        if all(j == 0 for j in js):
            return self.rat(Fraction(1 - (1 - self.q) ** len(js), self.q))
        out = self._gauss[js[0]]
        for j in js[1:]:
            out = out * self._gauss[j]
        return out * self.inv_gauss_circ_i(sum(js))

    # backend table primitives used by the hypergeometric layer ------------------
    #
    # A table is (den, rows): one shared positive denominator and one integer
    # coefficient row per character index.

    def t_from_values(self, values, shifts=None):
        den = 1
        for v in values:
            den = den * v.den // math.gcd(den, v.den)
        rows = []
        for i, v in enumerate(values):
            scale = den // v.den
            row = [c * scale for c in v.num]
            if shifts is not None and shifts[i]:
                row = self.ring.k_shift(row, shifts[i])
            rows.append(row)
        return (den, rows)

    def t_conv(self, A, B):
        return (A[0] * B[0], self.ring.k_conv(A[1], B[1]))

    def t_dot(self, A, B) -> CycNum:
        return self.ring.make(self.ring.k_dot(A[1], B[1]), A[0] * B[0])

    def t_sum_shifted(self, A, shifts) -> CycNum:
        return self.ring.make(self.ring.k_sum_shifts(A[1], shifts), A[0])

    def jacobi_bruteforce_i(self, *js: int) -> CycNum:
        """Signed summation over x_1 + ... + x_n = 1, as an independent oracle."""
        if len(js) < 2:
            raise ValueError("Jacobi sums take at least two characters")
        ctx = self.ctx
        n = len(js)

        def terms(prefix_sum: int, depth: int, exp_acc: int):
            if depth == n - 1:
                last = ctx.sub_i(1, prefix_sum)
                e = self.chi_exp(js[depth], last)
                if e is not None:
                    yield (exp_acc + e) % self.N
                return
            for x in range(1, self.q):
                e = self.chi_exp(js[depth], x)
                yield from terms(ctx.add_i(prefix_sum, x), depth + 1, exp_acc + e)

        total = self.zeta_sum(terms(0, 0, 0))
        return total * ((-1) ** (n - 1))


def sum_tables(ctx: FieldCtx, twist: int = 1, max_arity: int = 3) -> SumTables:
    """Build (or fetch) the cached SumTables for a field and twist."""
    key = ("tables", twist % ctx.q)
    got = ctx._sum_tables.get(key)
    if got is None:
        got = SumTables(ctx, twist, max_arity)
        ctx._sum_tables[key] = got
    return got


# MulChar-level wrappers ---------------------------------------------------------


def _j(chi: MulChar | int) -> int:
    return chi.j if isinstance(chi, MulChar) else chi


def gauss(tables: SumTables, chi: MulChar | int) -> CycNum:
    """The cached Gauss sum -sum psi(x)chi(x) over nonzero x."""
    return tables.gauss_i(_j(chi))


def gauss_circ(tables: SumTables, chi: MulChar | int) -> CycNum:
    return tables.gauss_circ_i(_j(chi))


def jacobi(tables: SumTables, *chis: MulChar | int) -> CycNum:
    return tables.jacobi_i(*(_j(c) for c in chis))


def jacobi_bruteforce(tables: SumTables, *chis: MulChar | int) -> CycNum:
    return tables.jacobi_bruteforce_i(*(_j(c) for c in chis))


def poch(tables: SumTables, a: MulChar | int, nu: MulChar | int) -> CycNum:
    """(a)_nu = g(a nu)/g(a)."""
    return tables.poch_i(_j(a), _j(nu))


def poch_circ(tables: SumTables, a: MulChar | int, nu: MulChar | int) -> CycNum:
    """(a)_nu° = g°(a nu)/g°(a)."""
    return tables.poch_circ_i(_j(a), _j(nu))

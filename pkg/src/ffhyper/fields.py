"""Concrete finite fields F_{p^r}: generator, discrete logs, traces.

Construction is deterministic: the modulus is the lexicographically
smallest monic irreducible of degree r (coefficients low-to-high compared
as base-p integers) and the generator is the enumeration-smallest element
of full multiplicative order.  Fields are desk scale (q <= 64 by default),
so every table is dense and element arithmetic is a lookup.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import cyclotomic

DEFAULT_MAX_Q = 64


@dataclass(frozen=True)
class FqElem:
    """A field element as a coefficient vector over F_p, low degree first."""

    coeffs: tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _digits(i: int, p: int, r: int) -> tuple[int, ...]:
    out = []
    for _ in range(r):
        out.append(i % p)
        i //= p
    return tuple(out)


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    num = [c % p for c in num]
    while len(num) >= len(den):
        if num[-1] == 0:
            num.pop()
            continue
        shift = len(num) - len(den)
        c = num[-1]  # den is monic
        for i, dc in enumerate(den):
            num[shift + i] = (num[shift + i] - c * dc) % p
        while num and num[-1] == 0:
            num.pop()
    return num


def _is_irreducible(mod: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    r = len(mod) - 1
    for d in range(1, r // 2 + 1):
        for idx in range(p**d):
            div = list(_digits(idx, p, d)) + [1]
            if not _poly_mod(mod, div, p):
                return False
    return True


class FieldCtx:
    """All tables for one F_{p^r}: arithmetic, dlog, trace, and the value ring."""

    def __init__(self, p: int, r: int, generator_choice: int = 0):
        self.p = p
        self.r = r
        self.q = p**r
        self.N = p * (self.q - 1)
        q = self.q

        self.modulus = self._pick_modulus()
        self.elements = [FqElem(_digits(i, p, r)) for i in range(q)]
        self._index = {e.coeffs: i for i, e in enumerate(self.elements)}

        self.add_t = [[self._add_raw(i, j) for j in range(q)] for i in range(q)]
        self.neg_t = [self._neg_raw(i) for i in range(q)]
        self.mul_t = [[self._mul_raw(i, j) for j in range(q)] for i in range(q)]
        self.inv_t = self._build_inverses()

        gens = self._generators()
        if generator_choice >= len(gens):
            raise ValueError(f"only {len(gens)} generators available")
        self.generator = gens[generator_choice]
        self.exp_t, self.dlog_t = self._build_dlog()
        self.trace_t = [self._trace_raw(i) for i in range(q)]
        self._sum_tables: dict = {}

    # raw constructions -------------------------------------------------------

    def _pick_modulus(self) -> tuple[int, ...]:
        if self.r == 1:
            return (0, 1)
        for idx in range(self.q):
            cand = list(_digits(idx, self.p, self.r)) + [1]
            if _is_irreducible(cand, self.p):
                return tuple(cand)
        raise ArithmeticError("no irreducible modulus found")

    def _add_raw(self, i: int, j: int) -> int:
        a = _digits(i, self.p, self.r)
        b = _digits(j, self.p, self.r)
        return self._idx(tuple((x + y) % self.p for x, y in zip(a, b)))

    def _neg_raw(self, i: int) -> int:
        a = _digits(i, self.p, self.r)
        return self._idx(tuple((-x) % self.p for x in a))

    def _mul_raw(self, i: int, j: int) -> int:
        a = _digits(i, self.p, self.r)
        b = _digits(j, self.p, self.r)
        raw = [0] * (2 * self.r - 1)
        for x, ax in enumerate(a):
            if ax:
                for y, by in enumerate(b):
                    raw[x + y] += ax * by
        rem = _poly_mod(raw, list(self.modulus), self.p)
        rem = rem + [0] * (self.r - len(rem))
        return self._idx(tuple(rem))

    def _idx(self, coeffs: tuple[int, ...]) -> int:
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def _build_inverses(self) -> list[int | None]:
        inv: list[int | None] = [None] * self.q
        for i in range(1, self.q):
            if inv[i] is None:
                for j in range(1, self.q):
                    if self.mul_t[i][j] == 1:
                        inv[i] = j
                        inv[j] = i
                        break
        return inv

    def _order_is_full(self, i: int) -> bool:
        m = self.q - 1
        for ell in _prime_factors(m):
            if self.pow_i(i, m // ell) == 1:
                return False
        return True

    def _generators(self) -> list[int]:
        return [i for i in range(2, self.q) if self._order_is_full(i)] or (
            [1] if self.q == 2 else []
        )

    def _build_dlog(self):
        m = self.q - 1
        exp_t = [1] * m
        dlog_t: list[int | None] = [None] * self.q
        cur = 1
        for k in range(m):
            exp_t[k] = cur
            if dlog_t[cur] is not None:
                raise ArithmeticError("generator does not have full order")
            dlog_t[cur] = k
            cur = self.mul_t[cur][self.generator]
        if cur != 1:
            raise ArithmeticError("generator does not have full order")
        return exp_t, dlog_t

    def _trace_raw(self, i: int) -> int:
        acc = 0
        cur = i
        for _ in range(self.r):
            acc = self.add_t[acc][cur]
            cur = self.pow_i(cur, self.p)
        if acc >= self.p:
            raise ArithmeticError("trace left the prime field")
        return acc

    # index-level operations ---------------------------------------------------

    def pow_i(self, i: int, e: int) -> int:
        out = 1
        base = i
        while e:
            if e & 1:
                out = self.mul_t[out][base]
            base = self.mul_t[base][base]
            e >>= 1
        return out

    def add_i(self, i: int, j: int) -> int:
        return self.add_t[i][j]

    def sub_i(self, i: int, j: int) -> int:
        return self.add_t[i][self.neg_t[j]]

    def mul_i(self, i: int, j: int) -> int:
        return self.mul_t[i][j]

    def neg_i(self, i: int) -> int:
        return self.neg_t[i]

    def inv_i(self, i: int) -> int:
        v = self.inv_t[i]
        if v is None:
            raise ZeroDivisionError("inverse of zero field element")
        return v

    def div_i(self, i: int, j: int) -> int:
        return self.mul_t[i][self.inv_i(j)]

    def dlog_i(self, i: int) -> int:
        v = self.dlog_t[i]
        if v is None:
            raise ZeroDivisionError("discrete log of zero")
        return v

    def int_elem(self, n: int) -> int:
        """The image of the integer n in F_q (a prime-field constant)."""
        return n % self.p

    def half_i(self) -> int:
        return self.inv_i(self.int_elem(2))

    # FqElem-level API ----------------------------------------------------------

    def index_of(self, a: FqElem) -> int:
        return self._index[a.coeffs]

    def element(self, i: int) -> FqElem:
        return self.elements[i]

    def add(self, a: FqElem, b: FqElem) -> FqElem:
        return self.elements[self.add_t[self.index_of(a)][self.index_of(b)]]

    def mul(self, a: FqElem, b: FqElem) -> FqElem:
        return self.elements[self.mul_t[self.index_of(a)][self.index_of(b)]]

    def neg(self, a: FqElem) -> FqElem:
        return self.elements[self.neg_t[self.index_of(a)]]

    def inv(self, a: FqElem) -> FqElem:
        return self.elements[self.inv_i(self.index_of(a))]

    def trace(self, a: FqElem) -> int:
        return self.trace_t[self.index_of(a)]

    def dlog(self, a: FqElem) -> int:
        return self.dlog_i(self.index_of(a))

    @property
    def ring(self) -> cyclotomic.CycRing:
        return cyclotomic.ring(self.N)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, r={self.r}, q={self.q}, g={self.generator})"


def build_field(
    p: int, r: int, *, max_q: int = DEFAULT_MAX_Q, generator_choice: int = 0
) -> FieldCtx:
    """Construct F_{p^r} with all tables populated.

    Raises ValueError for non-prime p or q over the configured bound.
    ``generator_choice`` selects among the full-order elements in
    enumeration order (0 is the canonical smallest); it exists so that
    generator-independence of downstream results can be tested.
    """
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if r < 1:
        raise ValueError("r must be >= 1")
    if p**r > max_q:
        raise ValueError(f"q = {p**r} exceeds the bound {max_q}")
    return FieldCtx(p, r, generator_choice)


def q_to_field(q: int) -> tuple[int, int]:
    """Split a prime power into (p, r); rejects non prime powers."""
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            r = 0
            n = q
            while n % p == 0:
                n //= p
                r += 1
            if n != 1:
                break
            return p, r
    raise ValueError(f"{q} is not a prime power")

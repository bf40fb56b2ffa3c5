"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Character sums over F_q take values in Q(zeta_{p(q-1)}).  An element is
held in the power basis of Q[x]/(Phi_N): an integer coordinate vector of
length phi(N) over a single positive denominator, reduced eagerly, so
equality is plain coefficient comparison.

Bulk vector work is delegated to a kernel ring (compiled when available,
see ``_kernel``); every kernel call falls back to the pure-Python twin if
the compiled path overflows int64.
"""
from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from ._kernel import make_kernel_rings


# ---------------------------------------------------------------------------
# dense polynomials, low degree first


@dataclass(frozen=True)
class CycPoly:
    """Dense rational polynomial, used for moduli and extended-gcd inversion."""

    coeffs: tuple[Fraction, ...]

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _poly_divmod_exact(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Integer polynomial division; quotient coefficients must stay integral."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    dlead = den[-1]
    while len(num) >= len(den) and _trim(num):
        shift = len(num) - len(den)
        c, rem = divmod(num[-1], dlead)
        if rem:
            raise ArithmeticError("non-exact polynomial division")
        q[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] -= c * dc
        num = _trim(num)
    return q, num


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _poly_divmod_frac(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    while num and len(num) >= len(den):
        shift = len(num) - len(den)
        c = num[-1] / den[-1]
        q[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] -= c * dc
        num = _trim(num)
    return q, num


_PHI_CACHE: dict[int, list[int]] = {}
_PHI_LOCK = threading.Lock()


def _cyclotomic_int(N: int) -> list[int]:
    """Phi_N as an integer coefficient list, via (x^N - 1) / prod of proper divisors."""
    with _PHI_LOCK:
        cached = _PHI_CACHE.get(N)
    if cached is not None:
        return cached
    if N == 1:
        poly = [-1, 1]
    else:
        num = [-1] + [0] * (N - 1) + [1]
        den = [1]
        for d in range(1, N):
            if N % d == 0:
                den = _poly_mul(den, _cyclotomic_int(d))
        poly, rem = _poly_divmod_exact(num, den)
        if rem:
            raise ArithmeticError(f"x^{N} - 1 not divisible by its proper factors")
    with _PHI_LOCK:
        _PHI_CACHE[N] = poly
    return poly


def cyclotomic_polynomial(N: int) -> CycPoly:
    """The N-th cyclotomic polynomial, monic with integer coefficients."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    return CycPoly(tuple(Fraction(c) for c in _cyclotomic_int(N)))


def euler_phi(N: int) -> int:
    out = N
    n = N
    f = 2
    while f * f <= n:
        if n % f == 0:
            out -= out // f
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out -= out // n
    return out


# ---------------------------------------------------------------------------
# the ring context


class CycRing:
    """Arithmetic context for one order N: modulus, reduction rows, kernels."""

    def __init__(self, N: int):
        self.N = N
        mod = _cyclotomic_int(N)
        self.phi = len(mod) - 1
        self.modulus = cyclotomic_polynomial(N)
        self.red = self._reduction_rows(mod)
        self._pure, self._fast = make_kernel_rings(N, self.phi, self.red)
        self._zeta_rows: list[tuple[int, ...]] = [
            tuple(self.red[k - self.phi]) if k >= self.phi
            else tuple(1 if t == k else 0 for t in range(self.phi))
            for k in range(N)
        ]
        self._roots: list[complex] | None = None

    def _reduction_rows(self, mod: list[int]) -> list[list[int]]:
        # row for degree d (phi <= d <= N + phi - 2), fully reduced
        phi = len(mod) - 1
        rows: list[list[int]] = []
        cur = [-c for c in mod[:phi]]  # x^phi = -(mod minus leading term)
        rows.append(list(cur))
        for _ in range(self.N - 1):
            nxt = [0] + cur[: phi - 1]
            top = cur[phi - 1]
            if top:
                for t in range(phi):
                    nxt[t] += top * rows[0][t]
            rows.append(nxt)
            cur = nxt
        return rows

    # kernel dispatch with per-call overflow fallback ------------------------

    def k_mul(self, a, b):
        if self._fast is not None:
            try:
                return self._fast.mul(a, b)
            except OverflowError:
                pass
        return self._pure.mul(a, b)

    def k_shift(self, a, k):
        if self._fast is not None:
            try:
                return self._fast.shift(a, k)
            except OverflowError:
                pass
        return self._pure.shift(a, k)

    def k_conv(self, arows, brows):
        if self._fast is not None:
            try:
                return self._fast.conv(arows, brows)
            except OverflowError:
                pass
        return self._pure.conv(arows, brows)

    def k_dot(self, arows, brows):
        if self._fast is not None:
            try:
                return self._fast.dot(arows, brows)
            except OverflowError:
                pass
        return self._pure.dot(arows, brows)

    def k_sum_shifts(self, rows, shifts):
        if self._fast is not None:
            try:
                return self._fast.sum_shifts(rows, shifts)
            except OverflowError:
                pass
        return self._pure.sum_shifts(rows, shifts)

    def k_reduce(self, raw):
        if self._fast is not None:
            try:
                return self._fast.reduce(raw)
            except OverflowError:
                pass
        return self._pure.reduce(raw)

    # element constructors ---------------------------------------------------

    def make(self, num, den: int = 1) -> "CycNum":
        """Canonicalize an integer vector / denominator pair into a CycNum."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = den
        for c in num:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        return CycNum(self, tuple(num), den)

    def zero(self) -> "CycNum":
        return CycNum(self, (0,) * self.phi, 1)

    def one(self) -> "CycNum":
        return self.from_rational(1)

    def from_rational(self, x) -> "CycNum":
        fr = Fraction(x)
        vec = [0] * self.phi
        vec[0] = fr.numerator
        return self.make(vec, fr.denominator)

    def zeta(self, k: int) -> "CycNum":
        row = self._zeta_rows[k % self.N]
        return self.make(list(row), 1)

    def from_poly_coeffs(self, coeffs, den: int = 1) -> "CycNum":
        raw = [int(c) for c in coeffs]
        if len(raw) > self.phi:
            raw = self.k_reduce(raw)
        else:
            raw = raw + [0] * (self.phi - len(raw))
        return self.make(raw, den)

    # embeddings and symmetries ----------------------------------------------

    def complex_roots(self) -> list[complex]:
        if self._roots is None:
            self._roots = [cmath.exp(2j * cmath.pi * k / self.N) for k in range(self.N)]
        return self._roots

    def to_complex(self, v: "CycNum") -> complex:
        roots = self.complex_roots()
        acc = 0j
        for i, c in enumerate(v.num):
            if c:
                acc += c * roots[i]
        return acc / v.den

    def apply_galois(self, v: "CycNum", j: int) -> "CycNum":
        """The automorphism zeta -> zeta^j (j coprime to N) applied to v."""
        if math.gcd(j, self.N) != 1:
            raise ValueError("galois exponent must be coprime to the order")
        rows = []
        shifts = []
        for i, c in enumerate(v.num):
            if c:
                rows.append([c] + [0] * (self.phi - 1))
                shifts.append((i * j) % self.N)
        if not rows:
            return self.zero()
        return self.make(self.k_sum_shifts(rows, shifts), v.den)


_RING_CACHE: dict[int, CycRing] = {}
_RING_LOCK = threading.Lock()


def ring(N: int) -> CycRing:
    """The shared arithmetic context of order N (memoized, thread safe)."""
    with _RING_LOCK:
        r = _RING_CACHE.get(N)
        if r is None:
            r = CycRing(N)
            _RING_CACHE[N] = r
        return r


# ---------------------------------------------------------------------------
# elements


class CycNum:
    """An element of Q(zeta_N) in the power basis, immutable and hashable.

    ``num`` has length phi(N) and shares no common factor with ``den`` > 0.
    Arithmetic between different orders is rejected; callers embed into a
    common order first.
    """

    __slots__ = ("ring", "num", "den")

    def __init__(self, rng: CycRing, num: tuple[int, ...], den: int):
        object.__setattr__(self, "ring", rng)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    @property
    def order(self) -> int:
        return self.ring.N

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.ring is not self.ring:
                raise ValueError("order mismatch: normalize to a common N first")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return self.ring.make(num, a.den * b.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return CycNum(self.ring, tuple(-c for c in self.num), self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            fr = Fraction(other)
            return self.ring.make([c * fr.numerator for c in self.num], self.den * fr.denominator)
        vec = self.ring.k_mul(list(self.num), list(o.num))
        return self.ring.make(vec, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.from_rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.ring is other.ring and self.den == other.den and self.num == other.num

    def __hash__(self):
        return hash((self.ring.N, self.den, self.num))

    def __bool__(self):
        return any(self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def inv(self) -> "CycNum":
        """Multiplicative inverse via extended gcd with Phi_N over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        a = [Fraction(c, self.den) for c in self.num]
        b = list(self.ring.modulus.coeffs)
        # extended euclid: s*a + t*b = gcd; gcd is a nonzero constant
        r0, r1 = _trim(a), _trim(b)
        s0, s1 = [Fraction(1)], []
        while r1:
            q, r2 = _poly_divmod_frac(r0, r1)
            s2 = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1 = r1, r2
            s0, s1 = s1, s2
        if len(r0) != 1:
            raise ZeroDivisionError("element is a zero divisor mod Phi_N")
        c = r0[0]
        inv_coeffs = [x / c for x in s0]
        den = 1
        for x in inv_coeffs:
            den = den * x.denominator // math.gcd(den, x.denominator)
        vec = [int(x * den) for x in inv_coeffs]
        return self.ring.from_poly_coeffs(vec, den)

    def as_rational(self) -> Fraction | None:
        """The rational value when all higher basis coordinates vanish."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def coeff_fractions(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    def __repr__(self):
        return f"CycNum(N={self.ring.N}, num={self.num}, den={self.den})"


def zeta_power(N: int, k: int) -> CycNum:
    """zeta_N^k reduced mod Phi_N."""
    return ring(N).zeta(k)

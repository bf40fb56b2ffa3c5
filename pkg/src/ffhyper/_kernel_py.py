"""Pure-Python arithmetic kernel for dense power-basis vectors.

Elements of Q(zeta_N) are integer coefficient vectors of length
phi = deg Phi_N (denominators are tracked by the caller).  A kernel ring
holds precomputed reduction rows: ``red[d - phi]`` is x^d reduced mod
Phi_N, for every degree d that can appear in a raw product or shift
(phi <= d <= N + phi - 2).

The compiled twin in ``_speedups`` implements the same class on int64
storage and raises OverflowError when a value leaves that range; callers
retry the failed call here, where Python integers cannot overflow.
"""
from __future__ import annotations


class KernelRing:
    """Reduction tables plus the four bulk operations used by table-driven sums."""

    def __init__(self, N: int, phi: int, red: list[list[int]]):
        self.N = N
        self.phi = phi
        self.red = [list(row) for row in red]

    def reduce(self, raw: list[int]) -> list[int]:
        """Reduce a raw coefficient vector (any degree < N + phi - 1) mod Phi_N."""
        phi = self.phi
        out = list(raw[:phi])
        if len(out) < phi:
            out.extend([0] * (phi - len(out)))
        red = self.red
        for d in range(len(raw) - 1, phi - 1, -1):
            c = raw[d]
            if c:
                row = red[d - phi]
                for t in range(phi):
                    out[t] += c * row[t]
        return out

    def mul(self, a: list[int], b: list[int]) -> list[int]:
        phi = self.phi
        raw = [0] * (2 * phi - 1)
        for i in range(phi):
            ai = a[i]
            if ai:
                for j in range(phi):
                    bj = b[j]
                    if bj:
                        raw[i + j] += ai * bj
        return self.reduce(raw)

    def shift(self, a: list[int], k: int) -> list[int]:
        """Multiply by the basis monomial of exponent k (0 <= k < N)."""
        if k == 0:
            return list(a)
        return self.reduce([0] * k + list(a))

    def conv(self, arows: list[list[int]], brows: list[list[int]]) -> list[list[int]]:
        """Cyclic convolution over Z/m of two length-m tables of vectors.

        Output row k is sum over i+j = k (mod m) of arows[i]*brows[j].
        """
        m = len(arows)
        phi = self.phi
        raw = [[0] * (2 * phi - 1) for _ in range(m)]
        for i in range(m):
            ar = arows[i]
            for j in range(m):
                br = brows[j]
                acc = raw[(i + j) % m]
                for x in range(phi):
                    ax = ar[x]
                    if ax:
                        for y in range(phi):
                            by = br[y]
                            if by:
                                acc[x + y] += ax * by
        return [self.reduce(r) for r in raw]

    def dot(self, arows: list[list[int]], brows: list[list[int]]) -> list[int]:
        """Sum over i of arows[i]*brows[i], reduced once at the end."""
        phi = self.phi
        raw = [0] * (2 * phi - 1)
        for ar, br in zip(arows, brows):
            for x in range(phi):
                ax = ar[x]
                if ax:
                    for y in range(phi):
                        by = br[y]
                        if by:
                            raw[x + y] += ax * by
        return self.reduce(raw)

    def sum_shifts(self, rows: list[list[int]], shifts: list[int]) -> list[int]:
        """Sum over i of rows[i] * x^shifts[i] (each shift < N), one reduction."""
        phi = self.phi
        raw = [0] * (self.N + phi - 1)
        for row, k in zip(rows, shifts):
            for t in range(phi):
                c = row[t]
                if c:
                    raw[k + t] += c
        return self.reduce(raw)

"""Multiplicative and additive characters of a small finite field.

A multiplicative character is just its index j modulo q-1 relative to the
field's generator g: chi_j(g^k) = zeta_{q-1}^{jk}, extended by chi(0) = 0.
An additive character is a twist a != 0: psi_a(x) = zeta_p^{Tr(ax)}.
Values land in the field's cyclotomic ring of order N = p(q-1) through
the embeddings zeta_{q-1} = zeta_N^p and zeta_p = zeta_N^{q-1}.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum
from .fields import FieldCtx, FqElem


@dataclass(frozen=True)
class MulChar:
    """chi_j on F_q^*, as an index modulo the group order m = q - 1."""

    m: int
    j: int

    def __post_init__(self):
        object.__setattr__(self, "j", self.j % self.m)

    def __mul__(self, other: "MulChar") -> "MulChar":
        if other.m != self.m:
            raise ValueError("characters of different groups")
        return MulChar(self.m, self.j + other.j)

    def inverse(self) -> "MulChar":
        return MulChar(self.m, -self.j)

    def is_trivial(self) -> bool:
        return self.j == 0


@dataclass(frozen=True)
class AddChar:
    """psi_a for a nonzero twist a, given as an element index."""

    twist: int

    def __post_init__(self):
        if self.twist == 0:
            raise ValueError("additive character twist must be nonzero")


def trivial_char(ctx: FieldCtx) -> MulChar:
    return MulChar(ctx.q - 1, 0)


def quadratic_char(ctx: FieldCtx) -> MulChar:
    if ctx.p == 2:
        raise ValueError("no quadratic character in characteristic 2")
    return MulChar(ctx.q - 1, (ctx.q - 1) // 2)


def char_group(ctx: FieldCtx) -> list[MulChar]:
    """All q - 1 multiplicative characters, in index order."""
    return [MulChar(ctx.q - 1, j) for j in range(ctx.q - 1)]


def delta(chi: MulChar) -> int:
    """1 for the trivial character, 0 otherwise."""
    return 1 if chi.j == 0 else 0


def _elem_index(ctx: FieldCtx, x) -> int:
    return x if isinstance(x, int) else ctx.index_of(x)


def mul_char_eval(ctx: FieldCtx, chi: MulChar, x: FqElem | int) -> CycNum:
    """chi(x), with the zero convention chi(0) = 0 for every chi."""
    i = _elem_index(ctx, x)
    if i == 0:
        return ctx.ring.zero()
    return ctx.ring.zeta((ctx.p * chi.j * ctx.dlog_i(i)) % ctx.N)


def add_char_eval(ctx: FieldCtx, psi: AddChar, x: FqElem | int) -> CycNum:
    """psi_a(x) = zeta_p^{Tr(ax)}."""
    i = _elem_index(ctx, x)
    t = ctx.trace_t[ctx.mul_i(psi.twist, i)]
    return ctx.ring.zeta(((ctx.q - 1) * t) % ctx.N)

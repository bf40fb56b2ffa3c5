"""Sweep drivers: enumerate or sample tuples, gate, compare exactly, report.

Sampling is reproducible without any library dependence: a splitmix-style
64-bit generator (additive constant 0x9E3779B97F4A7C15, then the
xorshift-multiply finalizer with 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB)
drives unbiased rejection draws.  Each (identity, config, field) gets its
own stream, derived by folding (seed, q, r, id, tag) bytes through the
same finalizer, so per-identity results do not depend on suite order.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import time
from dataclasses import dataclass, field

from .identities import REGISTRY, Identity, SweepConfig, get

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z &= _MASK
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK
    z ^= z >> 31
    return z


class SplitMix64:
    """The documented sampling generator; state update is a single addition."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        return _mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform draw in [0, n) by rejection, bias free."""
        if n <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next64()
            if v < limit:
                return v % n


def stream_seed(seed: int, q: int, r: int, ident_id: str, tag: str) -> int:
    h = seed & _MASK
    for tok in (q, r):
        h = _mix64(h ^ tok)
    for byte in f"{ident_id}:{tag}".encode():
        h = _mix64(h ^ byte)
    return h


# ---------------------------------------------------------------------------
# reports


@dataclass
class Failure:
    params: tuple[int, ...]
    point: tuple[int, ...]
    point_enc: list  # elements as coefficient lists, generator independent
    pair_index: int
    lhs: list
    rhs: list

    def to_obj(self):
        return {
            "params": list(self.params),
            "point": self.point_enc,
            "pair": self.pair_index,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class Report:
    identity: str
    p: int
    r: int
    q: int
    mode: str
    checked: int = 0
    skipped: int = 0
    failures: list[Failure] = field(default_factory=list)
    duration_ms: int = 0
    inapplicable: bool = False
    error: str | None = None

    @property
    def passed(self) -> bool:
        return not self.failures and self.error is None


@dataclass
class SuiteReport:
    reports: list[Report]
    checked: int
    skipped: int
    failure_count: int
    digest: str

    @property
    def passed(self) -> bool:
        return all(rep.passed for rep in self.reports)


def render_value(tables, v) -> list:
    """Exact values as [numerator, denominator] per basis coordinate."""
    if tables.is_exact:
        return [[fr.numerator, fr.denominator] for fr in v.coeff_fractions()]
    return [[v.real, v.imag]]


# ---------------------------------------------------------------------------
# sweep drivers


MAX_FAILURES_PER_REPORT = 20


def _run_tuple(tables, cfg: SweepConfig, chars, points, report: Report):
    out = cfg.run(tables, chars, points)
    if out is None:
        report.skipped += 1
        return
    report.checked += 1
    ctx = tables.ctx
    for k, (lhs, rhs) in enumerate(out):
        if not tables.eq(lhs, rhs):
            enc = [list(ctx.element(i).coeffs) for i in points]
            if len(report.failures) < MAX_FAILURES_PER_REPORT:
                report.failures.append(
                    Failure(chars, points, enc, k, render_value(tables, lhs),
                            render_value(tables, rhs))
                )
            else:
                report.failures.append(Failure(chars, points, enc, k, [], []))
            return


def predict_tuples(ident: Identity, q: int, max_arity: int) -> int:
    """The exhaustive enumeration size for one identity over F_q."""
    m = q - 1
    return sum(m**c.char_slots * q**c.point_slots for c in ident.configs(max_arity))


def check_identity(
    tables,
    ident: Identity | str,
    mode: str = "exhaustive",
    samples: int = 200,
    seed: int = 0,
    max_arity: int = 3,
) -> Report:
    """Sweep one identity over one field; exact comparison on every tuple."""
    if isinstance(ident, str):
        ident = get(ident)
    if mode not in ("exhaustive", "sample"):
        raise ValueError(f"unknown mode {mode!r}")
    ctx = tables.ctx
    report = Report(ident.id, ctx.p, ctx.r, ctx.q, mode)
    start = time.perf_counter()
    if ident.odd_p and ctx.p == 2:
        report.inapplicable = True
        report.duration_ms = int((time.perf_counter() - start) * 1000)
        return report

    configs = ident.configs(max_arity)
    m, q = ctx.q - 1, ctx.q
    if mode == "exhaustive":
        for cfg in configs:
            for chars in itertools.product(range(m), repeat=cfg.char_slots):
                for points in itertools.product(range(q), repeat=cfg.point_slots):
                    _run_tuple(tables, cfg, chars, points, report)
    else:
        quota, extra = divmod(samples, len(configs))
        for idx, cfg in enumerate(configs):
            n_draws = quota + (1 if idx < extra else 0)
            rng = SplitMix64(stream_seed(seed, q, ctx.r, ident.id, cfg.tag))
            for _ in range(n_draws):
                chars = tuple(rng.below(m) for _ in range(cfg.char_slots))
                points = tuple(rng.below(q) for _ in range(cfg.point_slots))
                _run_tuple(tables, cfg, chars, points, report)
    report.duration_ms = int((time.perf_counter() - start) * 1000)
    return report


def run_suite(
    tables_list,
    ids=None,
    mode: str = "exhaustive",
    samples: int = 200,
    seed: int = 0,
    max_arity: int = 3,
) -> SuiteReport:
    """Run identities over fields; reports ordered by (q, id), errors contained."""
    if ids is None:
        ids = list(REGISTRY)
    jobs = sorted(
        ((tables.ctx.q, ident_id, tables) for tables in tables_list for ident_id in ids),
        key=lambda job: (job[0], job[1]),
    )
    reports = []
    for q, ident_id, tables in jobs:
        try:
            reports.append(
                check_identity(tables, ident_id, mode, samples, seed, max_arity)
            )
        except Exception as exc:  # contained: one bad entry must not sink the suite
            ctx = tables.ctx
            rep = Report(ident_id, ctx.p, ctx.r, ctx.q, mode, error=str(exc))
            reports.append(rep)
    checked = sum(rep.checked for rep in reports)
    skipped = sum(rep.skipped for rep in reports)
    fails = sum(len(rep.failures) for rep in reports) + sum(
        1 for rep in reports if rep.error
    )
    return SuiteReport(reports, checked, skipped, fails, suite_digest(reports))


def report_to_obj(rep: Report) -> dict:
    obj = {
        "identity": rep.identity,
        "p": rep.p,
        "r": rep.r,
        "q": rep.q,
        "mode": rep.mode,
        "checked": rep.checked,
        "skipped": rep.skipped,
        "failures": [f.to_obj() for f in rep.failures],
        "duration_ms": 0,  # suppressed for byte-reproducible output
    }
    if rep.inapplicable:
        obj["inapplicable"] = True
    if rep.error is not None:
        obj["error"] = rep.error
    return obj


def suite_digest(reports: list[Report]) -> str:
    payload = json.dumps(
        [report_to_obj(rep) for rep in reports],
        sort_keys=True,
        separators=(",", ":"),
    ).encode()
    return hashlib.sha256(payload).hexdigest()


# ---------------------------------------------------------------------------
# diagnostics: confirm that hypothesis gates are not vacuous


def hypothesis_necessity_probe(tables, ident_id: str) -> tuple[int, int]:
    """Evaluate gate-violating tuples; returns (violating, unequal) counts.

    Supported for the summation formula at 1 ("euler-gauss") and the
    trailing-ones reduction ("fd-at-one"); a nonzero second count shows
    the printed hypothesis excludes genuine counterexamples.
    """
    from . import hyper as hy

    t = tables
    m = t.m
    violating = unequal = 0
    if ident_id == "euler-gauss":
        for a, b, c in itertools.product(range(m), repeat=3):
            if {a, b} != {0, c % m}:
                continue
            violating += 1
            lhs = hy.hyper_i(t, (a, b), (c,), 1)
            rhs = (t.gauss_circ_i(c) * t.gauss_i(c - a - b)
                   * t.inv_gauss_circ_i(c - a) * t.inv_gauss_circ_i(c - b))
            if not t.eq(lhs, rhs):
                unequal += 1
        return violating, unequal
    if ident_id == "fd-at-one":
        n = 2
        for ch in itertools.product(range(m), repeat=n + 2):
            a, bs, c = ch[0], ch[1:1 + n], ch[1 + n]
            tail = sum(bs) % m
            if tail != 0 and tail != (c - a) % m:
                continue
            violating += 1
            lhs = hy.fd_i(t, a, bs, c, (1,) * n)
            rhs = (t.gauss_circ_i(c) * t.gauss_i(c - a - tail)
                   * t.inv_gauss_circ_i(c - a) * t.inv_gauss_circ_i(c - tail))
            if not t.eq(lhs, rhs):
                unequal += 1
        return violating, unequal
    raise KeyError(f"no necessity probe for {ident_id!r}")

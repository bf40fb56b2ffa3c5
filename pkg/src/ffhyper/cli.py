"""Command-line entry point: pick fields and identities, sweep, report.

Exit codes: 0 all checked tuples passed, 1 at least one identity failed,
2 usage or I/O error.  JSON output is byte-reproducible for a fixed
configuration and seed (timings are therefore suppressed there; text
mode prints real durations).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .approx import complex_tables
from .charsums import sum_tables
from .fields import build_field, q_to_field
from .identities import REGISTRY
from .verifier import SuiteReport, predict_tuples, report_to_obj, run_suite

DEFAULT_BUDGET = 10**7


@dataclass
class RunConfig:
    fields: list[tuple[int, int]]
    identities: list[str]
    mode: str = "exhaustive"
    samples: int = 200
    seed: int = 0
    backend: str = "exact"
    max_arity: int = 3
    output: str = "text"
    out_path: str | None = None
    budget: int = DEFAULT_BUDGET

    def to_obj(self) -> dict:
        return {
            "fields": [list(pr) for pr in self.fields],
            "identities": self.identities,
            "mode": self.mode,
            "samples": self.samples,
            "seed": self.seed,
            "backend": self.backend,
            "max_arity": self.max_arity,
            "output": self.output,
            "out_path": self.out_path,
            "budget": self.budget,
        }


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ffhyper",
        description="Verify hypergeometric character-sum identities over small finite fields.",
    )
    ap.add_argument("--p", action="append", type=int, default=[],
                    help="field characteristic (pair with a matching --r)")
    ap.add_argument("--r", action="append", type=int, default=[],
                    help="extension degree for the preceding --p")
    ap.add_argument("--q-list", default=None,
                    help="comma-separated prime powers, e.g. 3,4,5")
    ap.add_argument("--identity", action="append", default=[],
                    help="identity id to run (repeatable); see --list")
    ap.add_argument("--all", action="store_true", help="run every registered identity")
    ap.add_argument("--list", action="store_true", help="print identity ids and exit")
    ap.add_argument("--mode", choices=["exhaustive", "sample"], default=None)
    ap.add_argument("--samples", type=int, default=None,
                    help="tuples per identity in sample mode (default 200)")
    ap.add_argument("--seed", type=int, default=None, help="64-bit sampling seed")
    ap.add_argument("--backend", choices=["exact", "float"], default=None)
    ap.add_argument("--max-arity", type=int, default=None,
                    help="cap on the number of Lauricella variables (default 3)")
    ap.add_argument("--budget", type=int, default=None,
                    help="max exhaustive tuples per run (default 1e7)")
    ap.add_argument("--json", action="store_true", help="emit the JSON report")
    ap.add_argument("--out", default=None, help="write the report to a file")
    ap.add_argument("--config", default=None,
                    help="key=value file with the flags above; flags override it")
    return ap


def _parse_config_file(path: str) -> dict:
    out = {}
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key=value")
                key, value = line.split("=", 1)
                out[key.strip()] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    return out


def _expand_q_list(text: str) -> list[tuple[int, int]]:
    fields = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            q = int(token)
        except ValueError:
            raise UsageError(f"bad q value {token!r}") from None
        try:
            fields.append(q_to_field(q))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return fields


def parse_args(argv: list[str]) -> RunConfig:
    """Resolve flags (plus optional config file) into a validated RunConfig."""
    ap = _build_parser()
    ns = ap.parse_args(argv)
    if ns.list:
        raise _ListRequest()

    cfg = _parse_config_file(ns.config) if ns.config else {}

    def pick(flag_value, key, default, cast):
        if flag_value is not None:
            return flag_value
        if key in cfg:
            try:
                return cast(cfg[key])
            except ValueError:
                raise UsageError(f"bad config value for {key}: {cfg[key]!r}") from None
        return default

    fields: list[tuple[int, int]] = []
    q_text = ns.q_list if ns.q_list is not None else cfg.get("q_list")
    if q_text:
        fields.extend(_expand_q_list(q_text))
    ps, rs = ns.p, ns.r
    if not ps and not rs and "p" in cfg:
        ps = [int(tok) for tok in str(cfg["p"]).split(",")]
        rs = [int(tok) for tok in str(cfg.get("r", "")).split(",") if tok]
    if len(ps) != len(rs):
        raise UsageError("--p and --r must come in pairs")
    fields.extend(zip(ps, rs))
    if not fields:
        raise UsageError("no fields selected; use --q-list or --p/--r pairs")

    identities = list(ns.identity)
    if not identities and "identity" in cfg:
        identities = [tok.strip() for tok in str(cfg["identity"]).split(",") if tok.strip()]
    run_all = ns.all or str(cfg.get("all", "")).lower() in ("1", "true", "yes")
    if run_all:
        identities = list(REGISTRY)
    if not identities:
        raise UsageError("no identities selected; use --identity or --all")
    for ident_id in identities:
        if ident_id not in REGISTRY:
            raise UsageError(f"unknown identity id {ident_id!r}")

    output = "json" if (ns.json or str(cfg.get("output", "")) == "json") else "text"
    config = RunConfig(
        fields=fields,
        identities=identities,
        mode=pick(ns.mode, "mode", "exhaustive", str),
        samples=pick(ns.samples, "samples", 200, int),
        seed=pick(ns.seed, "seed", 0, int),
        backend=pick(ns.backend, "backend", "exact", str),
        max_arity=pick(ns.max_arity, "max_arity", 3, int),
        output=output,
        out_path=ns.out if ns.out is not None else cfg.get("out"),
        budget=pick(ns.budget, "budget", DEFAULT_BUDGET, int),
    )
    _validate(config)
    return config


class _ListRequest(Exception):
    pass


def _validate(config: RunConfig) -> None:
    if config.mode not in ("exhaustive", "sample"):
        raise UsageError(f"unknown mode {config.mode!r}")
    if config.backend not in ("exact", "float"):
        raise UsageError(f"unknown backend {config.backend!r}")
    if config.samples < 1:
        raise UsageError("--samples must be positive")
    for p, r in config.fields:
        try:
            q_to_field(p**r)
        except ValueError:
            raise UsageError(f"({p},{r}) is not a valid field") from None
    if config.mode == "exhaustive":
        total = sum(
            predict_tuples(REGISTRY[ident_id], p**r, config.max_arity)
            for p, r in config.fields
            for ident_id in config.identities
        )
        if total > config.budget:
            raise UsageError(
                f"exhaustive run would enumerate {total} tuples, over the "
                f"budget of {config.budget}; switch to --mode sample"
            )


def run(config: RunConfig) -> SuiteReport:
    tables = []
    for p, r in config.fields:
        ctx = build_field(p, r)
        if config.backend == "float":
            tables.append(complex_tables(ctx, max_arity=config.max_arity))
        else:
            tables.append(sum_tables(ctx, max_arity=config.max_arity))
    return run_suite(
        tables,
        config.identities,
        mode=config.mode,
        samples=config.samples,
        seed=config.seed,
        max_arity=config.max_arity,
    )


def emit_report(suite: SuiteReport, config: RunConfig) -> str:
    """Serialize a finished suite per the configured output mode."""
    if config.output == "json":
        obj = {
            "version": 1,
            "config": config.to_obj(),
            "reports": [report_to_obj(rep) for rep in suite.reports],
            "digest": suite.digest,
        }
        return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    lines = []
    for rep in suite.reports:
        if rep.error is not None:
            status = f"ERROR {rep.error}"
        elif rep.inapplicable:
            status = "inapplicable (needs odd characteristic)"
        else:
            status = "ok" if rep.passed else f"FAIL({len(rep.failures)})"
        lines.append(
            f"q={rep.q:<3d} {rep.identity:<18s} mode={rep.mode:<10s} "
            f"checked={rep.checked:<8d} skipped={rep.skipped:<8d} "
            f"{rep.duration_ms:>6d}ms  {status}"
        )
    ok = sum(1 for rep in suite.reports if rep.passed)
    lines.append(
        f"{ok}/{len(suite.reports)} reports passed; checked={suite.checked} "
        f"skipped={suite.skipped} failures={suite.failure_count}"
    )
    lines.append(f"digest: {suite.digest}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
    except _ListRequest:
        for ident_id, ident in REGISTRY.items():
            print(f"{ident_id:<18s} [{ident.group}]"
                  + (" odd-p" if ident.odd_p else "") + f"  {ident.note}")
        return 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("run with --help for usage", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse's own usage failure
        return 2 if exc.code not in (0, None) else 0

    suite = run(config)
    text = emit_report(suite, config)
    if config.out_path:
        try:
            with open(config.out_path, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {config.out_path}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0 if suite.passed else 1


if __name__ == "__main__":
    sys.exit(main())

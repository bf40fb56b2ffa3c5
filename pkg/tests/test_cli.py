import json

import pytest

from ffhyper.cli import UsageError, main, parse_args
from ffhyper.identities import REGISTRY, Identity, SweepConfig


def test_parse_q_list_all():
    cfg = parse_args(["--q-list", "3,5", "--all", "--mode", "exhaustive",
                      "--budget", "100000000"])
    assert cfg.fields == [(3, 1), (5, 1)]
    assert cfg.identities == list(REGISTRY)
    assert cfg.mode == "exhaustive"


def test_parse_pr_pair_single_identity():
    cfg = parse_args(["--p", "2", "--r", "2", "--identity", "euler-gauss"])
    assert cfg.fields == [(2, 2)]
    assert cfg.identities == ["euler-gauss"]


def test_parse_rejects_non_prime_power(capsys):
    with pytest.raises(UsageError):
        parse_args(["--q-list", "6", "--all"])
    assert main(["--q-list", "6", "--all"]) == 2
    assert "prime power" in capsys.readouterr().err


def test_parse_rejects_unknown_identity():
    with pytest.raises(UsageError):
        parse_args(["--q-list", "3", "--identity", "no-such-identity"])


def test_parse_rejects_unpaired_p():
    with pytest.raises(UsageError):
        parse_args(["--p", "3", "--identity", "euler-gauss"])


def test_budget_guard():
    with pytest.raises(UsageError):
        parse_args(["--q-list", "13", "--all", "--mode", "exhaustive"])
    cfg = parse_args(["--q-list", "13", "--all", "--mode", "sample"])
    assert cfg.mode == "sample"


def test_config_file_and_flag_override(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# sweep config\nq_list=3,4\nall=true\nmode=sample\nsamples=25\n")
    cfg = parse_args(["--config", str(path)])
    assert cfg.fields == [(3, 1), (2, 2)]
    assert cfg.mode == "sample" and cfg.samples == 25
    cfg2 = parse_args(["--config", str(path), "--samples", "60"])
    assert cfg2.samples == 60


def test_round_trip_from_json_config():
    argv = ["--q-list", "3,5", "--identity", "euler-gauss", "--identity",
            "psi-0F0", "--mode", "sample", "--samples", "33", "--seed", "9",
            "--backend", "exact", "--max-arity", "2", "--json"]
    cfg = parse_args(argv)
    obj = cfg.to_obj()
    rebuilt = ["--q-list", ",".join(str(p**r) for p, r in obj["fields"])]
    for ident in obj["identities"]:
        rebuilt += ["--identity", ident]
    rebuilt += ["--mode", obj["mode"], "--samples", str(obj["samples"]),
                "--seed", str(obj["seed"]), "--backend", obj["backend"],
                "--max-arity", str(obj["max_arity"]),
                "--budget", str(obj["budget"])]
    if obj["output"] == "json":
        rebuilt.append("--json")
    assert parse_args(rebuilt) == cfg


def test_json_schema_and_exit_zero(capsys):
    code = main(["--q-list", "3", "--identity", "euler-gauss",
                 "--identity", "dup-gauss", "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["version"] == 1
    assert set(payload) == {"version", "config", "reports", "digest"}
    rep = payload["reports"][0]
    for key in ("identity", "p", "r", "q", "mode", "checked", "skipped",
                "failures", "duration_ms"):
        assert key in rep
    assert rep["failures"] == []


def test_json_determinism(capsys):
    argv = ["--q-list", "3,4", "--identity", "int-1F0", "--mode", "sample",
            "--samples", "40", "--seed", "5", "--json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    assert first.encode() == second.encode()


def test_failure_exit_code_and_witness(capsys):
    def bad_run(t, ch, pt):
        return [(t.one, t.zero)]

    REGISTRY["cli-selftest-bad"] = Identity(
        "cli-selftest-bad", "registry", False,
        lambda max_arity: [SweepConfig("all", 1, 1, bad_run)],
    )
    try:
        code = main(["--q-list", "3", "--identity", "cli-selftest-bad", "--json"])
        assert code == 1
        payload = json.loads(capsys.readouterr().out)
        failures = payload["reports"][0]["failures"]
        assert failures
        wit = failures[0]
        assert wit["lhs"] == [[1, 1], [0, 1]]
        assert wit["rhs"] == [[0, 1], [0, 1]]
        assert wit["params"] == [0]
        assert wit["point"] == [[0]]  # element encoded as its coefficient list
    finally:
        del REGISTRY["cli-selftest-bad"]


def test_out_file_and_unwritable(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["--q-list", "3", "--identity", "psi-0F0", "--json",
                 "--out", str(target)])
    assert code == 0
    assert json.loads(target.read_text())["digest"]
    code = main(["--q-list", "3", "--identity", "psi-0F0", "--json",
                 "--out", str(tmp_path / "nope" / "x.json")])
    assert code == 2
    assert "cannot write" in capsys.readouterr().err


def test_float_backend_runs(capsys):
    code = main(["--q-list", "5", "--identity", "euler-gauss",
                 "--backend", "float"])
    assert code == 0
    out = capsys.readouterr().out
    assert "ok" in out


def test_list_mode(capsys):
    assert main(["--list"]) == 0
    out = capsys.readouterr().out
    assert "euler-gauss" in out and "fd-at-one" in out


def test_text_mode_smoke(capsys):
    code = main(["--q-list", "4", "--identity", "dup-gauss"])
    assert code == 0
    assert "inapplicable" in capsys.readouterr().out

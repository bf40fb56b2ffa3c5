import pytest

from ffhyper.charsums import sum_tables
from ffhyper.fields import build_field, q_to_field
from ffhyper.identities import REGISTRY, Identity, SweepConfig
from ffhyper.verifier import (
    SplitMix64,
    check_identity,
    hypothesis_necessity_probe,
    predict_tuples,
    run_suite,
    stream_seed,
    suite_digest,
)


@pytest.fixture(scope="module")
def tbl():
    return {q: sum_tables(build_field(*q_to_field(q))) for q in [3, 4, 5, 7]}


def test_splitmix_determinism():
    a = SplitMix64(123)
    b = SplitMix64(123)
    assert [a.next64() for _ in range(8)] == [b.next64() for _ in range(8)]
    c = SplitMix64(124)
    assert a.next64() != c.next64()
    rng = SplitMix64(0)
    draws = [rng.below(7) for _ in range(500)]
    assert set(draws) <= set(range(7))
    assert len(set(draws)) == 7


def test_stream_seed_separates_identities():
    s1 = stream_seed(0, 5, 1, "euler-gauss", "all")
    s2 = stream_seed(0, 5, 1, "gauss-inversion", "all")
    s3 = stream_seed(0, 7, 1, "euler-gauss", "all")
    assert len({s1, s2, s3}) == 3


def test_gauss_inversion_exhaustive_counts(tbl):
    rep = check_identity(tbl[5], "gauss-inversion", mode="exhaustive")
    assert rep.checked == 4
    assert rep.skipped == 0
    assert not rep.failures


def test_euler_gauss_skip_accounting(tbl):
    rep = check_identity(tbl[7], "euler-gauss", mode="exhaustive")
    m = 6
    # set-equality exclusion: alpha=eps,beta=c or alpha=c,beta=eps, overlap once
    assert rep.skipped == 2 * m - 1
    assert rep.checked == m**3 - (2 * m - 1)
    assert not rep.failures


def test_gating_contract_counts(tbl):
    rep = check_identity(tbl[5], "psi-0F0", mode="exhaustive")
    assert rep.checked == 4 and rep.skipped == 1  # the zero point is excluded


def test_sample_mode_reproducible(tbl):
    r1 = check_identity(tbl[5], "int-1F0", mode="sample", samples=50, seed=3)
    r2 = check_identity(tbl[5], "int-1F0", mode="sample", samples=50, seed=3)
    assert (r1.checked, r1.skipped) == (r2.checked, r2.skipped)
    assert r1.checked + r1.skipped == 50


def test_inapplicable_on_even_characteristic(tbl):
    rep = check_identity(tbl[4], "dup-gauss", mode="exhaustive")
    assert rep.inapplicable
    assert rep.checked == 0 and rep.skipped == 0 and rep.passed


def test_predict_tuples(tbl):
    ident = REGISTRY["euler-gauss"]
    assert predict_tuples(ident, 7, 3) == 6**3
    ident = REGISTRY["psi-0F0"]
    assert predict_tuples(ident, 5, 3) == 5


def test_run_suite_ordering_and_totals(tbl):
    suite = run_suite([tbl[5], tbl[3]], ["euler-gauss", "gauss-inversion"],
                      mode="exhaustive")
    keys = [(rep.q, rep.identity) for rep in suite.reports]
    assert keys == sorted(keys)
    assert suite.passed
    assert suite.checked == sum(rep.checked for rep in suite.reports)


def test_run_suite_empty_ids():
    suite = run_suite([], [])
    assert suite.reports == []
    assert suite.digest == suite_digest([])


def test_corrupted_rhs_produces_witness(tbl):
    def bad_run(t, ch, pt):
        return [(t.one, t.zero)]

    broken = Identity(
        "broken-selftest", "registry", False,
        lambda max_arity: [SweepConfig("all", 1, 0, bad_run)],
    )
    REGISTRY["broken-selftest"] = broken
    try:
        suite = run_suite([tbl[3]], ["broken-selftest"], mode="exhaustive")
        assert not suite.passed
        failure = suite.reports[0].failures[0]
        assert failure.lhs == [[1, 1], [0, 1]]
        assert failure.rhs == [[0, 1], [0, 1]]
        assert failure.params == (0,)
    finally:
        del REGISTRY["broken-selftest"]


def test_errors_contained_as_failed_reports(tbl):
    def exploding(t, ch, pt):
        raise RuntimeError("boom")

    REGISTRY["exploding-selftest"] = Identity(
        "exploding-selftest", "registry", False,
        lambda max_arity: [SweepConfig("all", 1, 0, exploding)],
    )
    try:
        suite = run_suite([tbl[3]], ["exploding-selftest", "gauss-inversion"],
                          mode="exhaustive")
        by_id = {rep.identity: rep for rep in suite.reports}
        assert by_id["exploding-selftest"].error == "boom"
        assert by_id["gauss-inversion"].passed
        assert not suite.passed
    finally:
        del REGISTRY["exploding-selftest"]


def test_hypothesis_gates_are_not_vacuous(tbl):
    violating, unequal = hypothesis_necessity_probe(tbl[5], "euler-gauss")
    assert violating > 0 and unequal >= 1
    violating, unequal = hypothesis_necessity_probe(tbl[5], "fd-at-one")
    assert violating > 0 and unequal >= 1
    with pytest.raises(KeyError):
        hypothesis_necessity_probe(tbl[5], "poch-chain")


def test_generator_independence_counts():
    ctx0 = build_field(7, 1)
    ctx1 = build_field(7, 1, generator_choice=1)
    t0, t1 = sum_tables(ctx0), sum_tables(ctx1)
    for ident_id in ("euler-gauss", "gauss-inversion", "fd-at-one"):
        r0 = check_identity(t0, ident_id, mode="exhaustive")
        r1 = check_identity(t1, ident_id, mode="exhaustive")
        assert (r0.checked, r0.skipped, len(r0.failures)) == (
            r1.checked, r1.skipped, len(r1.failures))


def test_digest_ignores_duration(tbl):
    r1 = check_identity(tbl[3], "gauss-inversion", mode="exhaustive")
    r2 = check_identity(tbl[3], "gauss-inversion", mode="exhaustive")
    r2.duration_ms = r1.duration_ms + 1000
    assert suite_digest([r1]) == suite_digest([r2])

import pytest

from seqcomplex import SUITES, Modulus, SuiteReport, run_suites


def test_suite_names_are_stable():
    assert set(SUITES) == {
        "lc-oracle",
        "mcrit-exhaustive",
        "counting",
        "decomposition",
        "bounds",
        "stability",
    }


def test_lc_oracle_all_agree_9():
    (rep,) = run_suites(["lc-oracle"], Modulus(3, 2))
    assert rep.failures == 0
    assert rep.checks >= 512


def test_mcrit_disagreement_census_9():
    """The closed-form first critical point overshoots on exactly 36 of the
    511 nonzero period-9 sequences, all of them sums of several hypercubes.
    This census is the regression pin for that fact."""
    (rep,) = run_suites(["mcrit-exhaustive"], Modulus(3, 2))
    assert rep.checks == 511
    assert rep.failures == 36
    assert all("m 3 != " in d for d in rep.details)  # formula overshoots to 3
    assert len(rep.details) == 20  # detail log is capped


def test_mcrit_clean_at_small_moduli():
    for mod in [Modulus(3, 1), Modulus(5, 1)]:
        (rep,) = run_suites(["mcrit-exhaustive"], mod)
        assert rep.failures == 0, mod


def test_remaining_suites_clean_9():
    reports = run_suites(
        ["counting", "decomposition", "bounds", "stability"], Modulus(3, 2)
    )
    assert [r.failures for r in reports] == [0, 0, 0, 0]
    assert all(r.checks > 0 for r in reports)


def test_sampled_runs_are_seed_deterministic():
    a = run_suites(["decomposition"], Modulus(3, 3), seed=7)
    b = run_suites(["decomposition"], Modulus(3, 3), seed=7)
    assert [(r.checks, r.failures) for r in a] == [(r.checks, r.failures) for r in b]


def test_unknown_suite_rejected():
    with pytest.raises(KeyError):
        run_suites(["no-such-suite"], Modulus(3, 2))


def test_report_formatting():
    rep = SuiteReport("demo", checks=10, failures=3, details=("a", "b"))
    assert str(rep) == "demo: 7/10 agree"

from ellsurf import NumClass, is_normally_presented, run_suites
from ellsurf.verify import (
    check_convexity,
    check_corollary_soundness,
    check_np_equivalence,
    check_sharpness,
)


def test_all_suites_pass_on_small_window():
    report = run_suites(window=12, samples=150, seed=7)
    assert report.passed
    assert [s.name for s in report.suites] == [
        "duality-symmetry",
        "rr-sign-consistency",
        "ray-table-totals",
        "np-equivalence",
        "np-convexity",
        "koszul-agreement",
        "corollary-soundness",
        "sharpness-triple",
    ]
    for suite in report.suites:
        assert suite.counterexamples == []
        assert suite.checked > 0


def test_window_must_be_at_least_four():
    import pytest

    with pytest.raises(ValueError):
        run_suites(window=3)


def _corrupted(c: NumClass, s) -> bool:
    # Claims one extra class is normally presented.
    return is_normally_presented(c, s) or (c.a, c.b, s.e) == (3, 0, -1)


def test_equivalence_suite_detects_corruption():
    result = check_np_equivalence(8, (-1,), np_fn=_corrupted)
    assert not result.passed
    assert any("(3, 0)" in example for example in result.counterexamples)


def test_convexity_suite_detects_corruption():
    result = check_convexity(8, (-1,), np_fn=_corrupted)
    assert not result.passed


def test_sharpness_suite_detects_corruption():
    def worse(c, s):
        return is_normally_presented(c, s) or (c.a, c.b, s.e) == (2, 1, -1)

    result = check_sharpness(np_fn=worse)
    assert not result.passed
    assert any("(2, 1)" in example for example in result.counterexamples)


def test_corollary_suite_is_deterministic():
    first = check_corollary_soundness((-1, 0), seed=41, samples=50)
    second = check_corollary_soundness((-1, 0), seed=41, samples=50)
    assert first.passed and second.passed
    assert first.checked == second.checked


def test_report_aggregates_failure():
    report = run_suites(window=6, samples=20, seed=1, np_fn=_corrupted)
    assert not report.passed
    failing = [s for s in report.suites if not s.passed]
    assert failing
    for suite in failing:
        assert suite.counterexamples

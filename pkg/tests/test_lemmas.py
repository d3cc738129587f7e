import pytest

from vwu_checker.combinatorics.lemmas import (
    MAX_REPORTED_VIOLATIONS,
    LemmaResult,
    check_monotonicity_a,
    check_type_c_injectivity,
    run_lemma_suites,
)


def test_lemma_result_caps_reported_violations() -> None:
    result = LemmaResult("demo")
    for i in range(MAX_REPORTED_VIOLATIONS + 5):
        result.fail(f"case {i}")
    assert not result.passed
    assert len(result.violations) == MAX_REPORTED_VIOLATIONS


def test_quick_suites_pass() -> None:
    results = run_lemma_suites(quick=True)
    assert [r.name for r in results] == [
        "monotonicity-A",
        "monotonicity-BCD",
        "triangular-separation",
        "type-C-injectivity",
    ]
    for result in results:
        assert result.cases > 0
        assert result.passed, result.violations


def test_small_instances() -> None:
    assert check_monotonicity_a(3).passed
    assert check_type_c_injectivity(2).passed


@pytest.mark.slow
def test_full_suites_pass() -> None:
    for result in run_lemma_suites():
        assert result.passed, (result.name, result.violations)

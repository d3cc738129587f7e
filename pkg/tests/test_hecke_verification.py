import numpy as np
import pytest

from vwu_checker.hecke.algebra import AffineHeckeAlgebra
from vwu_checker.hecke.verification import (
    SHRIEK,
    STAR,
    intertwiner_class,
    random_element,
    verify_inverse_pairs,
    verify_presentation,
)


def make_algebra(label: str) -> AffineHeckeAlgebra:
    return AffineHeckeAlgebra.from_label(label)


@pytest.mark.parametrize("label,depth", [("A1", 2), ("A2", 3), ("B2", 4)])
def test_presentation_holds(label, depth) -> None:
    report = verify_presentation(make_algebra(label), depth=depth, samples=10, mu_bound=2)
    assert report.passed, [f.detail for f in report.failures]
    summary = report.summary()
    assert set(summary) == {
        "identity",
        "quadratic",
        "braid",
        "bernstein",
        "associativity",
        "specialization",
    }
    assert all("fail" not in counts for counts in summary.values())


@pytest.mark.slow
def test_presentation_holds_for_g2() -> None:
    report = verify_presentation(make_algebra("G2"), depth=6, samples=20, mu_bound=2)
    assert report.passed, [f.detail for f in report.failures]


def test_random_elements_are_reproducible() -> None:
    algebra = make_algebra("A2")
    first = random_element(algebra, np.random.default_rng(7))
    second = random_element(algebra, np.random.default_rng(7))
    assert first == second


def test_inverse_pairs_are_exactly_one() -> None:
    algebra = make_algebra("A1")
    report, pairs = verify_inverse_pairs(algebra, 0, range(-5, 6))
    assert report.passed
    assert [pair.k for pair in pairs] == list(range(-5, 6))
    assert all(pair.u_power == 0 for pair in pairs)
    assert all(pair.product == algebra.one() for pair in pairs)


def test_inverse_pairs_on_second_node_of_b2() -> None:
    report, pairs = verify_inverse_pairs(make_algebra("B2"), 1, range(-2, 3))
    assert report.passed
    assert {pair.u_power for pair in pairs} == {0}


def test_inverse_pairs_trivial_datum() -> None:
    report, pairs = verify_inverse_pairs(make_algebra("trivial"), 0, range(-5, 6))
    assert report.passed
    assert len(pairs) == 1
    assert pairs[0].u_power == 0


def test_intertwiner_class_dispatch() -> None:
    algebra = make_algebra("A1")
    assert intertwiner_class(algebra, SHRIEK, 0, 2) == algebra.shriek(0, 2)
    assert intertwiner_class(algebra, STAR, 0, -1) == algebra.star(0, -1)
    with pytest.raises(ValueError):
        intertwiner_class(algebra, "bang", 0, 0)

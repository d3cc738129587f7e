from fractions import Fraction as Q
from itertools import product

import pytest

from vwu_checker.checker.direct import check_vwu_direct
from vwu_checker.checker.fast import check_vwu_triangular
from vwu_checker.checker.oracle import brute_force_vwu, invariant_norm, lp_in_hull
from vwu_checker.config import PACKAGED_TABLES_DIR
from vwu_checker.lie.rootsys import system_from_label, vector
from vwu_checker.lie.weightgeom import orbit_points
from vwu_checker.orbits.tables import load_tables

TABLES = load_tables(PACKAGED_TABLES_DIR)
GRID = tuple(Q(v) for v in ("0", "1/4", "1/2", "3/4", "1", "3/2", "2", "4"))


def make_weights(label: str, pairings=GRID):
    system = system_from_label(label)
    for values in product(pairings, repeat=system.rank):
        yield system, system.from_fundamental(values)


def assert_agreement(system, lam, tables=None) -> None:
    direct = check_vwu_direct(system, lam, tables)
    oracle = brute_force_vwu(system, lam, tables)
    assert oracle.is_vwu is direct.is_vwu, lam
    assert len(oracle.members) == direct.dcirc_size, lam
    assert sorted(w[0] for w in oracle.witnesses) == sorted(w.member for w in direct.witnesses), lam


def test_lp_in_hull_examples() -> None:
    a2 = system_from_label("A2")
    vertices = sorted(orbit_points(a2, vector([1, 0, -1])))
    assert len(vertices) == 6
    assert lp_in_hull(vector([0, 0, 0]), vertices)
    assert lp_in_hull(vector([1, 0, -1]), vertices)
    assert not lp_in_hull(vector([2, -1, -1]), vertices)


def test_invariant_norm_is_weyl_invariant() -> None:
    g2 = system_from_label("G2")
    lam = g2.from_fundamental([1, 2])
    norms = {invariant_norm(g2, mu) for mu in orbit_points(g2, lam)}
    assert len(norms) == 1


def test_oracle_a1_examples() -> None:
    a1 = system_from_label("A1")
    assert brute_force_vwu(a1, a1.from_fundamental([2])).is_vwu
    result = brute_force_vwu(a1, a1.from_fundamental([4]))
    assert not result.is_vwu
    assert [w[0] for w in result.witnesses] == [vector([1, -1])]


def test_oracle_keeps_points_outside_the_dominant_chamber() -> None:
    # λ - e1 = (1/2, 1) is not dominant, yet it lies in D°(λ) and is a witness on both factors
    b2 = system_from_label("B2")
    result = brute_force_vwu(b2, vector(["3/2", 1]))
    assert result.is_vwu is False
    assert vector(["1/2", 1]) in [w[0] for w in result.witnesses]


@pytest.mark.parametrize("label", ["A1", "A1xA1"])
def test_oracle_agrees_with_direct_on_grid(label) -> None:
    for system, lam in make_weights(label):
        assert_agreement(system, lam)


@pytest.mark.slow
@pytest.mark.parametrize("label", ["A2", "B2", "C2", "G2"])
def test_oracle_agrees_with_direct_on_grid_rank_two(label) -> None:
    for system, lam in make_weights(label):
        assert_agreement(system, lam, TABLES)


@pytest.mark.slow
@pytest.mark.parametrize("label", ["A2", "B2", "C2"])
def test_triangular_verdicts_hold_in_brute_force(label) -> None:
    for system, lam in make_weights(label):
        if check_vwu_triangular(system, lam).is_vwu:
            assert brute_force_vwu(system, lam).is_vwu, lam

from fractions import Fraction as Q

import pytest

from vwu_checker.errors import DimensionMismatchError, InadmissibleTypeError
from vwu_checker.lie.cartan import (
    CartanType,
    classify_cartan_matrix,
    parse_type_string,
    standard_cartan_matrix,
)
from vwu_checker.lie.rootsys import (
    FUNDAMENTAL,
    build_root_system,
    system_from_label,
    trivial_system,
    vector,
)


def make_system(label: str, coordinates: str | None = None):
    return system_from_label(label, coordinates)


def test_cartan_type_parse_and_validation() -> None:
    assert CartanType.parse(" b3 ") == CartanType("B", 3)
    assert [t.label for t in parse_type_string("A1xA1")] == ["A1", "A1"]
    with pytest.raises(InadmissibleTypeError):
        CartanType.parse("E5")
    with pytest.raises(InadmissibleTypeError):
        CartanType("G", 3)
    with pytest.raises(InadmissibleTypeError):
        parse_type_string("")


def test_g2_matrix_has_short_first_node() -> None:
    assert standard_cartan_matrix(CartanType("G", 2)) == ((2, -1), (-3, 2))
    system = make_system("G2")
    assert system.coordinates == FUNDAMENTAL
    assert system.cartan_matrix == ((2, -1), (-3, 2))
    assert len(system.positive) == 6


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"])
def test_classifier_recovers_standard_order(label) -> None:
    cartan_type = CartanType.parse(label)
    classified, order = classify_cartan_matrix(standard_cartan_matrix(cartan_type))
    assert classified == cartan_type
    assert order == list(range(cartan_type.rank))


def test_classifier_reorders_permuted_nodes() -> None:
    matrix = standard_cartan_matrix(CartanType("C", 3))
    permutation = [2, 1, 0]
    permuted = [[matrix[i][j] for j in permutation] for i in permutation]
    classified, order = classify_cartan_matrix(permuted, ["x", "y", "z"])
    assert classified == CartanType("C", 3)
    assert order == ["z", "y", "x"]


def test_classifier_rejects_cycles_and_products() -> None:
    with pytest.raises(InadmissibleTypeError):
        classify_cartan_matrix([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    with pytest.raises(InadmissibleTypeError):
        classify_cartan_matrix([[2, 0], [0, 2]])


@pytest.mark.parametrize(
    "label,count",
    [("A1", 1), ("A3", 6), ("B2", 4), ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36)],
)
def test_positive_root_counts(label, count) -> None:
    system = make_system(label)
    assert len(system.positive_coroots) == count
    assert CartanType.parse(label).positive_root_count == count


def test_b2_positive_coroots() -> None:
    system = make_system("B2")
    assert set(system.positive_coroots) == {
        vector([1, -1]),
        vector([1, 1]),
        vector([2, 0]),
        vector([0, 2]),
    }


def test_pairing_examples() -> None:
    b2 = make_system("B2")
    assert b2.pair(vector([2, 0]), vector(["1/4", "1/4"])) == Q(1, 2)
    assert b2.pair(vector([1, -1]), vector([0, 0])) == 0
    a3 = make_system("A3")
    for i in range(3):
        fundamental = a3.from_fundamental([1 if j == i else 0 for j in range(3)])
        assert a3.simple_pairings(fundamental) == tuple(1 if j == i else 0 for j in range(3))


def test_reflections() -> None:
    a2 = make_system("A2")
    assert a2.reflect(0, vector([1, 0, -1])) == vector([0, 1, -1])
    alpha = a2.simple_roots[0]
    assert a2.reflect(0, alpha) == tuple(-x for x in alpha)
    on_wall = vector([1, 1, -2])
    assert a2.reflect(0, on_wall) == on_wall
    with pytest.raises(DimensionMismatchError):
        a2.reflect(0, vector([1, 0]))


def test_dominant_representative() -> None:
    a2 = make_system("A2")
    dominant, word = a2.dominant_representative(vector([-1, 0, 1]))
    assert dominant == vector([1, 0, -1])
    assert a2.apply_word(word, vector([-1, 0, 1])) == dominant
    assert a2.dominant_representative(vector([2, 1, 0])) == (vector([2, 1, 0]), ())

    a1 = build_root_system(CartanType("A", 1), FUNDAMENTAL)
    assert a1.dominant_representative(vector([-3])) == (vector([3]), (0,))


def test_rho_and_weyl_length() -> None:
    a2 = make_system("A2")
    assert a2.rho == vector([1, 0, -1])
    assert a2.length((0, 1, 0)) == 3
    assert a2.length((0, 0)) == 0


def test_cone_membership() -> None:
    a1 = make_system("A1")
    assert a1.cone_membership((), vector([5, -5]))
    assert a1.cone_membership((0,), vector([-1, 1]))
    assert not a1.cone_membership((0,), vector([1, -1]))
    assert not a1.cone_membership((0,), vector([0, 0]))


def test_integral_subsystem_regular_integral() -> None:
    b3 = make_system("B3")
    split = b3.integral_coroot_subsystem(b3.rho)
    assert split.labels == ["C3"]
    assert len(split.coroots) == 9


def test_integral_factor_system_is_labelled_by_its_roots() -> None:
    b3 = make_system("B3")
    factor = b3.integral_coroot_subsystem(b3.rho).factors[0]
    assert factor.label == "C3"
    assert factor.system.label == "B3@B3"
    assert factor.system.components == (CartanType("B", 3),)
    assert factor.system.cartan_matrix == standard_cartan_matrix(CartanType("B", 3))


def test_dual_type_swaps_b_and_c() -> None:
    assert CartanType("B", 4).dual == CartanType("C", 4)
    assert CartanType("C", 3).dual == CartanType("B", 3)
    assert CartanType("B", 2).dual == CartanType("B", 2)
    assert CartanType("G", 2).dual == CartanType("G", 2)


def test_integral_subsystem_b2_quarter() -> None:
    b2 = make_system("B2")
    split = b2.integral_coroot_subsystem(vector(["1/4", "1/4"]))
    assert split.labels == ["A1"]
    assert split.factors[0].system.simple_coroots == (vector([1, -1]),)
    assert split.factors[0].pairings == (0,)


def test_integral_subsystem_b3_mixed() -> None:
    b3 = make_system("B3")
    split = b3.integral_coroot_subsystem(vector([1, "1/2", "1/4"]))
    assert split.labels == ["A1", "A1"]
    assert {f.system.simple_coroots[0] for f in split.factors} == {
        vector([2, 0, 0]),
        vector([0, 2, 0]),
    }


def test_direct_sum_and_trivial() -> None:
    system = make_system("A1xA1")
    assert system.rank == 2
    assert system.ambient_dim == 4
    assert system.cartan_matrix == ((2, 0), (0, 2))
    assert trivial_system().rank == 0

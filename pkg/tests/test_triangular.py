from fractions import Fraction as Q

import pytest

from vwu_checker.combinatorics.partitions import Partition, partitions_of, star_partitions
from vwu_checker.combinatorics.triangular import (
    EPS,
    HALF,
    QUARTER,
    RESIDUAL,
    Z,
    SortedSequence,
    decompose_concatenation,
    eps_residue,
    is_eps_triangular,
    is_triangular,
    is_z_triangular,
    norm_shell,
    p_eps,
    p_half,
    p_quarter,
    p_z,
    triangular_parameters,
    v_eps,
    v_half,
    v_quarter,
    v_z,
)
from vwu_checker.errors import SequenceClassError


def seq(*values) -> tuple[Q, ...]:
    return tuple(Q(v) for v in values)


def test_v_eps_examples() -> None:
    assert v_eps(Partition((3, 2)), Q(0)).values == seq(0, 0, 0, -1, -1)
    assert v_eps(Partition((1,)), Q(0)).values == seq(0)
    assert v_eps(Partition((2, 1, 1)), Q(1, 4)).values == seq("5/4", "1/4", "1/4", "-3/4")


def test_v_eps_negative_branch_goes_up_first() -> None:
    assert v_eps(Partition((2, 1, 1)), Q(-1, 4)).values == seq("3/4", "-1/4", "-1/4", "-5/4")


def test_p_eps_examples() -> None:
    assert p_eps(seq(0, 0, 0, -1, -1), Q(0)) == Partition((3, 2))
    assert p_eps(seq("2/5", "2/5", "2/5"), Q(2, 5)) == Partition((3,))
    assert p_eps(seq(1, -1), Q(0)) == Partition((1, 1))
    with pytest.raises(SequenceClassError):
        p_eps(seq("1/2"), Q(0))
    with pytest.raises(SequenceClassError):
        v_eps(Partition((1,)), Q(1, 2))


def test_eps_triangularity() -> None:
    assert is_eps_triangular(v_eps(Partition((3, 2)), Q(0)), Q(0))
    assert not is_eps_triangular(seq(2, 0), Q(0))
    assert is_eps_triangular((), Q(0))


def test_z_maps() -> None:
    star = next(s for s in star_partitions(3) if s.underlying == Partition((2, 2, 2)))
    assert v_z(star).values == seq(1, 1, 0)
    assert p_z(seq(1, 1, 0)) == Partition((2, 2, 2))
    assert is_z_triangular(seq(1, 1, 0))
    assert not is_z_triangular(seq(2, 0))


def test_half_and_quarter_maps() -> None:
    assert v_half(Partition((2, 1))).values == seq("3/2", "1/2", "1/2")
    assert p_half(seq("3/2", "1/2", "1/2")) == Partition((2, 1))
    assert v_quarter(Partition((4,))).values == seq("1/4", "1/4", "1/4", "1/4")
    assert p_quarter(seq("3/4", "1/4")) == Partition((1, 1))
    with pytest.raises(SequenceClassError):
        p_half(seq(1))


def test_round_trips() -> None:
    for n in range(1, 7):
        for p in partitions_of(n):
            for eps in (Q(0), Q(1, 4), Q(-2, 5)):
                assert p_eps(v_eps(p, eps), eps) == p
            assert p_half(v_half(p)) == p
            assert p_quarter(v_quarter(p)) == p
        for star in star_partitions(n):
            assert p_z(v_z(star)) == star.underlying


def test_eps_residue_boundary() -> None:
    assert eps_residue(Q(3, 4)) == (EPS, Q(-1, 4))
    assert eps_residue(Q(-5, 2)) == (HALF, None)
    assert eps_residue(Q(2)) == (EPS, Q(0))


def test_decompose_type_b() -> None:
    blocks = decompose_concatenation(seq(1, "1/2", 0), "B")
    assert [(b.kind, b.values) for b in blocks] == [(Z, seq(1, 0)), (HALF, seq("1/2"))]


def test_decompose_folds_signs_and_flags_residue() -> None:
    blocks = decompose_concatenation(seq("3/4", "-1/4", "1/3"), "C")
    assert [(b.kind, b.values) for b in blocks] == [
        (QUARTER, seq("3/4", "1/4")),
        (RESIDUAL, seq("1/3")),
    ]


def test_decompose_type_a() -> None:
    assert len(decompose_concatenation(seq(1, 0, -1), "A")) == 1
    blocks = decompose_concatenation(seq("1/4", "1/5"), "A")
    assert {b.eps for b in blocks} == {Q(1, 4), Q(1, 5)}
    assert decompose_concatenation(seq("1/2", "-1/2"), "A")[0].kind == RESIDUAL


def test_sorted_sequence_validation() -> None:
    with pytest.raises(SequenceClassError):
        SortedSequence(seq(0, 1), Z)
    with pytest.raises(SequenceClassError):
        SortedSequence(seq("1/2"), Z)
    assert SortedSequence.of([0, 1], Z).values == seq(1, 0)


def test_norm_shell_is_strictly_inside() -> None:
    shell = list(norm_shell(HALF, 2, Q(5)))
    assert shell
    assert all(v.norm_sq < 5 for v in shell)
    assert SortedSequence(seq("3/2", "1/2"), HALF) in shell


def test_generated_parameters_are_triangular() -> None:
    for family, rank in (("A", 3), ("B", 3), ("C", 2), ("D", 3)):
        for parameter in triangular_parameters(family, rank):
            assert all(is_triangular(block) for block in parameter.blocks)

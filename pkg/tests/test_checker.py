import random
from fractions import Fraction as Q
from itertools import product

import pytest

from vwu_checker.checker.direct import check_vwu_direct
from vwu_checker.checker.fast import check_vwu_triangular
from vwu_checker.checker.models import BOTH, DIRECT, TRIANGULAR, Verdict
from vwu_checker.checker.processor import (
    CheckProcessor,
    Checker,
    CompositeChecker,
    check_vwu,
    make_checker,
)
from vwu_checker.combinatorics.partitions import Partition
from vwu_checker.combinatorics.triangular import triangular_parameters, v_eps
from vwu_checker.config import PACKAGED_TABLES_DIR
from vwu_checker.errors import (
    CheckerInvariantError,
    InadmissibleTypeError,
    UnsupportedFactorError,
)
from vwu_checker.lie.rootsys import FUNDAMENTAL, system_from_label, vector
from vwu_checker.orbits.tables import TableRegistry, load_tables

TABLES = load_tables(PACKAGED_TABLES_DIR)


def a1_pairing(k: int | Q):
    system = system_from_label("A1")
    return system, system.from_fundamental([k])


class FixedChecker(Checker):
    def __init__(self, is_vwu) -> None:
        super().__init__(name="fixed")
        self.is_vwu = is_vwu

    def check(self, system, lam) -> Verdict:
        return Verdict(is_vwu=self.is_vwu, method="fixed", system=system.label, dominant=lam)


@pytest.mark.parametrize("k,expected", [(1, True), (2, True), (4, False)])
def test_a1_examples(k, expected) -> None:
    system, lam = a1_pairing(k)
    verdict = check_vwu_direct(system, lam)
    assert verdict.is_vwu is expected
    assert verdict.method == DIRECT


def test_a1_pairing_one_has_empty_dcirc() -> None:
    verdict = check_vwu_direct(*a1_pairing(1))
    assert verdict.dcirc_size == 0
    assert verdict.factor_reports[0].dcirc_size == 0
    assert verdict.witnesses == []


def test_a1_pairing_four_witness() -> None:
    verdict = check_vwu_direct(*a1_pairing(4))
    (witness,) = verdict.witnesses
    assert witness.gamma == vector([1, -1])
    assert witness.member == vector([1, -1])
    assert witness.root_coefficients == (1,)
    assert witness.factors == ("A1",)
    assert witness.equal_orbits
    assert [str(o) for o in witness.orbits_lambda] == ["[2]"]
    assert witness.norm_sq_gamma == 2
    assert witness.norm_sq_lambda == 8
    assert any("O∨_γ = O∨_λ" in note for note in verdict.notes)


def test_a1_half_integral_pairing_fails_through_the_other_coset() -> None:
    system, lam = a1_pairing(Q(3, 2))
    verdict = check_vwu_direct(system, lam)
    assert verdict.is_vwu is False
    assert verdict.factor_reports == []
    assert verdict.cosets == 2
    (witness,) = verdict.witnesses
    assert witness.gamma == vector(["1/4", "-1/4"])
    assert witness.member == vector(["-1/4", "1/4"])
    assert witness.factors == ()
    assert check_vwu_triangular(system, lam).is_vwu is None


def test_first_failure_stops_early() -> None:
    system, lam = a1_pairing(6)
    assert len(check_vwu_direct(system, lam).witnesses) == 2
    verdict = check_vwu_direct(system, lam, first_failure=True)
    assert len(verdict.witnesses) == 1
    assert verdict.is_vwu is False
    assert "stopped at the first failing γ" in verdict.notes


def test_a2_examples() -> None:
    system = system_from_label("A2")
    assert check_vwu_direct(system, vector([1, 0, -1])).is_vwu is True
    assert check_vwu_direct(system, vector([2, 0, -2])).is_vwu is False
    assert check_vwu_direct(system, vector([0, 0, 0])).is_vwu is True


def test_zero_weight_is_vwu_everywhere() -> None:
    for label in ("A3", "B2", "C3", "D4"):
        system = system_from_label(label)
        verdict = check_vwu(system, vector([0] * system.ambient_dim), mode="direct")
        assert verdict.is_vwu is True


WEYL_INVARIANCE_CASES = [
    ("B2", [["1/2", 2], [2, "1/2"], [1, 1], ["3/4", "1/4"], [0, "3/2"]]),
    ("C3", [["1/2", "1/4", 1], [1, 0, "1/2"], ["3/4", 1, "1/4"], [1, 1, 1]]),
    ("G2", [["1/2", 1], [1, 1], [2, 2], ["1/4", "1/2"], [0, "3/4"]]),
]


@pytest.mark.parametrize("label,weights", WEYL_INVARIANCE_CASES)
def test_verdict_is_weyl_invariant(label, weights) -> None:
    rng = random.Random(label)
    system = system_from_label(label)
    for values in weights:
        lam = system.from_fundamental([Q(v) for v in values])
        expected = check_vwu_direct(system, lam, TABLES)
        for _ in range(4):
            word = tuple(rng.randrange(system.rank) for _ in range(rng.randint(1, 9)))
            moved = check_vwu_direct(system, system.apply_word(word, lam), TABLES)
            assert moved.dominant == expected.dominant, (values, word)
            assert moved.is_vwu is expected.is_vwu, (values, word)
            assert len(moved.witnesses) == len(expected.witnesses), (values, word)


def test_factor_split_reports_each_factor() -> None:
    system = system_from_label("B3")
    verdict = check_vwu_direct(system, vector([1, "1/2", "1/4"]))
    assert [f.label for f in verdict.factor_reports] == ["A1", "A1"]
    assert all(f.orbit_lambda is not None for f in verdict.factor_reports)


@pytest.mark.parametrize(
    "label,values,expected",
    [("B3", [1, "1/2", "1/4"], True), ("C3", [2, "1/2", 0], False)],
)
def test_factor_reports_match_standalone_factor_checks(label, values, expected) -> None:
    system = system_from_label(label)
    verdict = check_vwu_direct(system, vector(values))
    decomposition = system.integral_coroot_subsystem(verdict.dominant)
    assert len(decomposition.factors) == len(verdict.factor_reports)
    for factor, report in zip(decomposition.factors, verdict.factor_reports):
        standalone = check_vwu_direct(factor.system, verdict.dominant)
        assert standalone.is_vwu is report.local_vwu, factor.label
        assert standalone.dcirc_size == report.dcirc_size
    assert verdict.is_vwu is expected
    assert verdict.is_vwu is all(report.local_vwu for report in verdict.factor_reports)


def test_split_product_verdict_is_the_conjunction() -> None:
    system = system_from_label("A1xA1")
    for left, right in product((1, 2, 4), repeat=2):
        verdict = check_vwu_direct(system, system.from_fundamental([left, right]))
        assert verdict.is_vwu is all(r.local_vwu for r in verdict.factor_reports)
        assert verdict.is_vwu is (left != 4 and right != 4)


def test_joint_comparison_is_stricter_than_each_factor() -> None:
    a2 = system_from_label("A2")
    verdict = check_vwu_direct(a2, a2.from_fundamental([Q(3, 2), 2]))
    assert [r.local_vwu for r in verdict.factor_reports] == [True]
    assert verdict.is_vwu is False
    assert (Q(1, 2), Q(1)) in {a2.simple_pairings(w.gamma) for w in verdict.witnesses}
    assert any("passes on its own lattice" in note for note in verdict.notes)


def test_witness_outside_the_dominant_chamber_of_lambda() -> None:
    b2 = system_from_label("B2")
    verdict = check_vwu_direct(b2, vector(["3/2", 1]))
    assert sorted(r.local_vwu for r in verdict.factor_reports) == [False, True]
    assert verdict.is_vwu is False
    members = {w.gamma: w.member for w in verdict.witnesses}
    assert members[vector([1, "1/2"])] == vector(["1/2", 1])


def test_g2_uses_packaged_table() -> None:
    system = system_from_label("G2")
    assert check_vwu(system, vector([1, 1]), tables=TABLES).is_vwu is True
    assert check_vwu(system, vector([2, 2]), tables=TABLES).is_vwu is False
    with pytest.raises(UnsupportedFactorError):
        check_vwu(system, vector([1, 1]))


def test_e8_without_tables_is_unsupported() -> None:
    system = system_from_label("E8", FUNDAMENTAL)
    with pytest.raises(UnsupportedFactorError) as info:
        check_vwu(system, vector([1] * 8), tables=TableRegistry())
    assert "E8" in str(info.value)


def test_triangular_examples() -> None:
    a4 = system_from_label("A4")
    lam = v_eps(Partition((3, 2)), Q(0)).values
    verdict = check_vwu_triangular(a4, lam)
    assert verdict.is_vwu is True
    assert verdict.method == TRIANGULAR

    a2 = system_from_label("A2")
    assert check_vwu_triangular(a2, vector([1, 0, -1])).is_vwu is True
    inconclusive = check_vwu_triangular(a2, vector([2, 0, -2]))
    assert inconclusive.is_vwu is None
    assert not inconclusive.conclusive
    assert inconclusive.notes

    with pytest.raises(InadmissibleTypeError):
        check_vwu_triangular(system_from_label("G2"), vector([1, 1]))


def test_auto_falls_back_to_direct() -> None:
    a2 = system_from_label("A2")
    fast = check_vwu(a2, vector([1, 0, -1]), mode="auto")
    assert fast.method == TRIANGULAR
    slow = check_vwu(a2, vector([2, 0, -2]), mode="auto")
    assert slow.method == DIRECT
    assert slow.is_vwu is False
    assert slow.blocks


def test_both_mode_reports_both() -> None:
    verdict = check_vwu(system_from_label("A2"), vector([2, 0, -2]), mode="both")
    assert verdict.method == BOTH
    assert verdict.is_vwu is False
    assert "triangular check: inconclusive" in verdict.notes


def test_both_mode_detects_inconsistency() -> None:
    checker = CompositeChecker(FixedChecker(True), FixedChecker(False))
    with pytest.raises(CheckerInvariantError):
        checker.check(system_from_label("A1"), vector([1, -1]))


def test_unknown_mode_rejected() -> None:
    with pytest.raises(ValueError):
        make_checker("sometimes")


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("C", 2), ("D", 3)])
def test_triangular_parameters_pass_both_mode(family, rank) -> None:
    system = system_from_label(f"{family}{rank}")
    for parameter in triangular_parameters(family, rank):
        verdict = check_vwu(system, parameter.values, mode="both")
        assert verdict.is_vwu is True, parameter.values


@pytest.mark.slow
@pytest.mark.parametrize("family,rank", [("A", 3), ("A", 4), ("B", 3), ("C", 3), ("D", 4)])
def test_triangular_parameters_pass_both_mode_rank_three(family, rank) -> None:
    system = system_from_label(f"{family}{rank}")
    for parameter in triangular_parameters(family, rank):
        assert check_vwu(system, parameter.values, mode="both").is_vwu is True


def test_processor_builds_reports() -> None:
    processor = CheckProcessor(tables=TABLES, first_failure=False)
    report = processor.run_text("A1", "4", coordinates="pairing")
    assert report.verdict is False
    assert report.exit_code == 1
    assert report.inputs["lambda"] == "4"
    assert report.witnesses[0].gamma == ["1", "-1"]

    batch = processor.run_record({"type": "G2", "lambda": "1,1", "coords": "fundamental"})
    assert batch.verdict is True
    assert batch.command == "check --batch"
    assert batch.tables["files"] == ["G2.txt"]


def test_table_provenance_is_per_record() -> None:
    processor = CheckProcessor(tables=load_tables(PACKAGED_TABLES_DIR), first_failure=False)
    first = processor.run_record({"type": "G2", "lambda": "1,1", "coords": "fundamental"})
    second = processor.run_record({"type": "A1", "lambda": "2", "coords": "pairing"})
    assert first.tables["files"] == ["G2.txt"]
    assert second.tables["files"] == []


RANDOM_PAIRINGS = tuple(Q(v) for v in ("0", "1/4", "1/2", "3/4", "1", "3/2"))


@pytest.mark.slow
@pytest.mark.parametrize("label", ["C3", "D4"])
def test_both_mode_on_random_weights(label) -> None:
    rng = random.Random(f"both-{label}")
    system = system_from_label(label)
    for _ in range(20):
        lam = system.from_fundamental([rng.choice(RANDOM_PAIRINGS) for _ in range(system.rank)])
        verdict = check_vwu(system, lam, mode="both")
        assert verdict.method == BOTH
        assert verdict.is_vwu is check_vwu_direct(system, lam).is_vwu, lam

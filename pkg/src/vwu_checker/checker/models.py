"""Verdict structures shared by the checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from vwu_checker.combinatorics.triangular import SortedSequence
from vwu_checker.lie.rootsys import Vector, Weight
from vwu_checker.orbits.models import OrbitLabel

DIRECT = "direct"
TRIANGULAR = "triangular-fast"
BOTH = "both"

ORBIT_CRITERION_NOTE = (
    "translation-functor vanishing is replaced by the orbit criterion: "
    "λ passes when no γ in D°(λ) has O∨_λ inside the closure of O∨_γ on every factor"
)


@dataclass(slots=True)
class Witness:
    """A class of D°(λ) whose orbits contain O∨_λ in their closures on every factor.

    ``gamma`` is the W-dominant point of the class and ``member`` its
    W_λ-dominant point in ``λ + ZΦ``, the one the factor orbits are read from.
    """

    gamma: Weight
    member: Weight
    factors: tuple[str, ...]
    orbits_lambda: tuple[OrbitLabel, ...]
    orbits_gamma: tuple[OrbitLabel, ...]
    root_coefficients: tuple[Fraction, ...]
    norm_sq_gamma: Optional[Fraction] = None
    norm_sq_lambda: Optional[Fraction] = None

    @property
    def equal_orbits(self) -> bool:
        return self.orbits_lambda == self.orbits_gamma


@dataclass(slots=True)
class FactorReport:
    """Per-factor data, with the check run on the factor alone as a diagnostic."""

    label: str
    simple_coroots: tuple[Vector, ...]
    pairings: tuple[Fraction, ...]
    zero_nodes: tuple[int, ...]
    orbit_lambda: Optional[OrbitLabel] = None
    dcirc_size: int = 0
    local_witnesses: int = 0

    @property
    def local_vwu(self) -> bool:
        return self.local_witnesses == 0


@dataclass(slots=True)
class Verdict:
    """Outcome of a check; ``is_vwu`` is ``None`` when a fast check is inconclusive."""

    is_vwu: Optional[bool]
    method: str
    system: str
    dominant: Weight
    witnesses: list[Witness] = field(default_factory=list)
    factor_reports: list[FactorReport] = field(default_factory=list)
    blocks: list[SortedSequence] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    dcirc_size: Optional[int] = None
    cosets: int = 1

    @property
    def conclusive(self) -> bool:
        return self.is_vwu is not None

"""Triangular sequences: the maps v_ε/p_ε and v_Z, v_{½Z}, v_{¼Z} with their inverses.

Sequences are weakly decreasing tuples of exact rationals tagged with the lattice
class they live in:

* ``eps``      values in ε + Z, ε ∈ (-1/2, 1/2)
* ``Z``        values in Z≥0
* ``half``     values in 1/2 + Z≥0
* ``quarter``  values in 1/4 + (1/2)Z≥0
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Optional, Sequence

from vwu_checker.combinatorics.partitions import (
    Partition,
    StarPartition,
    parse_star,
    partitions_of,
    star_partitions,
)
from vwu_checker.errors import PartitionError, SequenceClassError

EPS = "eps"
Z = "Z"
HALF = "half"
QUARTER = "quarter"
RESIDUAL = "residual"
LATTICE_KINDS = (EPS, Z, HALF, QUARTER)

HALF_VALUE = Fraction(1, 2)


def _check_eps(eps: Fraction) -> Fraction:
    eps = Fraction(eps)
    if not -HALF_VALUE < eps < HALF_VALUE:
        raise SequenceClassError(f"ε = {eps} is outside (-1/2, 1/2)")
    return eps


def in_class(value: Fraction, kind: str, eps: Optional[Fraction] = None) -> bool:
    if kind == EPS:
        return eps is not None and (value - eps).denominator == 1
    if kind == Z:
        return value.denominator == 1 and value >= 0
    if kind == HALF:
        return value > 0 and (2 * value).denominator == 1 and (2 * value).numerator % 2 == 1
    if kind == QUARTER:
        return value > 0 and (4 * value).denominator == 1 and (4 * value).numerator % 2 == 1
    return kind == RESIDUAL


@dataclass(frozen=True, slots=True)
class SortedSequence:
    values: tuple[Fraction, ...]
    kind: str
    eps: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.kind == EPS:
            _check_eps(self.eps if self.eps is not None else Fraction(1))
        elif self.kind not in LATTICE_KINDS and self.kind != RESIDUAL:
            raise SequenceClassError(f"unknown lattice class {self.kind!r}")
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise SequenceClassError(f"sequence is not weakly decreasing: {self.values}")
        bad = [v for v in self.values if not in_class(v, self.kind, self.eps)]
        if bad:
            raise SequenceClassError(f"values {bad} are not in class {self.label}")

    @classmethod
    def of(
        cls, values: Iterable[Fraction | int], kind: str, eps: Optional[Fraction] = None
    ) -> SortedSequence:
        return cls(
            tuple(sorted((Fraction(v) for v in values), reverse=True)),
            kind,
            None if eps is None else Fraction(eps),
        )

    @property
    def label(self) -> str:
        return f"{self.eps}+Z" if self.kind == EPS else self.kind

    @property
    def norm_sq(self) -> Fraction:
        return sum((v * v for v in self.values), Fraction(0))

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


def _multiplicity_partition(values: Sequence[Fraction]) -> Partition:
    return Partition.of(Counter(values).values())


def _eps_offset(j: int, eps: Fraction) -> int:
    # ε, ε-1, ε+1, ε-2, ε+2, ... for ε ≥ 0 and the mirror order for ε < 0
    if j == 0:
        return 0
    k = (j + 1) // 2
    sign = -1 if j % 2 == 1 else 1
    return sign * k if eps >= 0 else -sign * k


def v_eps(p: Partition, eps: Fraction) -> SortedSequence:
    eps = _check_eps(eps)
    values = [eps + _eps_offset(j, eps) for j, part in enumerate(p.parts) for _ in range(part)]
    return SortedSequence.of(values, EPS, eps)


def p_eps(v: SortedSequence | Sequence[Fraction], eps: Fraction) -> Partition:
    eps = _check_eps(eps)
    values = v.values if isinstance(v, SortedSequence) else tuple(Fraction(x) for x in v)
    if any((x - eps).denominator != 1 for x in values):
        raise SequenceClassError(f"{values} is not in class {eps}+Z")
    return _multiplicity_partition(values)


def is_eps_triangular(v: SortedSequence | Sequence[Fraction], eps: Fraction) -> bool:
    values = v.values if isinstance(v, SortedSequence) else tuple(Fraction(x) for x in v)
    return v_eps(p_eps(values, eps), eps).values == tuple(sorted(values, reverse=True))


def _as_star(p: Partition | StarPartition) -> StarPartition:
    if isinstance(p, StarPartition):
        return p
    parsed = parse_star(p)
    if parsed is None:
        raise PartitionError(f"{p} is not of the form [μ_1^(2), ..., 2μ_0, ..., μ_r^(2)]")
    return parsed


def v_z(p: Partition | StarPartition) -> SortedSequence:
    star = _as_star(p)
    values: list[Fraction] = [Fraction(0)] * star.mu0
    for j, mu in enumerate(star.pairs, start=1):
        values.extend([Fraction(j)] * mu)
    return SortedSequence.of(values, Z)


def p_z(v: SortedSequence | Sequence[Fraction]) -> Partition:
    values = v.values if isinstance(v, SortedSequence) else tuple(Fraction(x) for x in v)
    if any(not in_class(x, Z) for x in values):
        raise SequenceClassError(f"{values} is not in Z≥0")
    counts = Counter(values)
    parts = [2 * counts.get(Fraction(0), 0)]
    for value, count in counts.items():
        if value:
            parts.extend([count, count])
    return Partition.of(parts)


def is_z_triangular(v: SortedSequence | Sequence[Fraction]) -> bool:
    values = v.values if isinstance(v, SortedSequence) else tuple(Fraction(x) for x in v)
    star = parse_star(p_z(values))
    if star is None or not star.is_double_star:
        return False
    return v_z(star).values == tuple(sorted(values, reverse=True))


def _v_odd_fraction(p: Partition, denominator: int, kind: str) -> SortedSequence:
    values = [
        Fraction(2 * s - 1, denominator) for s, nu in enumerate(p.parts, start=1) for _ in range(nu)
    ]
    return SortedSequence.of(values, kind)


def _p_odd_fraction(v: SortedSequence | Sequence[Fraction], kind: str) -> Partition:
    values = v.values if isinstance(v, SortedSequence) else tuple(Fraction(x) for x in v)
    if any(not in_class(x, kind) for x in values):
        raise SequenceClassError(f"{values} is not in class {kind}")
    return _multiplicity_partition(values)


def v_half(p: Partition) -> SortedSequence:
    return _v_odd_fraction(p, 2, HALF)


def p_half(v: SortedSequence | Sequence[Fraction]) -> Partition:
    return _p_odd_fraction(v, HALF)


def v_quarter(p: Partition) -> SortedSequence:
    return _v_odd_fraction(p, 4, QUARTER)


def p_quarter(v: SortedSequence | Sequence[Fraction]) -> Partition:
    return _p_odd_fraction(v, QUARTER)


def is_half_triangular(v: SortedSequence | Sequence[Fraction]) -> bool:
    values = v.values if isinstance(v, SortedSequence) else tuple(Fraction(x) for x in v)
    return v_half(p_half(values)).values == tuple(sorted(values, reverse=True))


def is_quarter_triangular(v: SortedSequence | Sequence[Fraction]) -> bool:
    values = v.values if isinstance(v, SortedSequence) else tuple(Fraction(x) for x in v)
    return v_quarter(p_quarter(values)).values == tuple(sorted(values, reverse=True))


def sequence_partition(v: SortedSequence) -> Partition:
    """The multiplicity partition of ``v`` for its own lattice class."""
    if v.kind == EPS:
        assert v.eps is not None
        return p_eps(v, v.eps)
    if v.kind == Z:
        return p_z(v)
    if v.kind == HALF:
        return p_half(v)
    if v.kind == QUARTER:
        return p_quarter(v)
    raise SequenceClassError("residual sequences have no partition")


def is_triangular(v: SortedSequence) -> bool:
    if v.kind == EPS:
        assert v.eps is not None
        return is_eps_triangular(v, v.eps)
    if v.kind == Z:
        return is_z_triangular(v)
    if v.kind == HALF:
        return is_half_triangular(v)
    if v.kind == QUARTER:
        return is_quarter_triangular(v)
    return False


def eps_residue(x: Fraction) -> tuple[str, Optional[Fraction]]:
    """Canonical residue of ``x`` mod Z in (-1/2, 1/2); 1/2 itself is the half kind."""
    r = x - math.floor(x)
    if r == HALF_VALUE:
        return HALF, None
    return EPS, r if r < HALF_VALUE else r - 1


def classify_folded(x: Fraction) -> str:
    a = abs(x)
    for kind in (Z, HALF, QUARTER):
        if in_class(a, kind):
            return kind
    return RESIDUAL


def decompose_concatenation(values: Sequence[Fraction], family: str) -> list[SortedSequence]:
    """Split ``values`` into its lattice-class blocks.

    Type A groups by residue mod Z; types B/C/D fold signs first and group into
    the Z, half and quarter classes.  Anything else lands in a residual block.
    """

    groups: dict[tuple[str, Optional[Fraction]], list[Fraction]] = {}
    for raw in values:
        x = Fraction(raw)
        if family == "A":
            key = eps_residue(x)
            groups.setdefault(key, []).append(x)
        else:
            kind = classify_folded(x)
            groups.setdefault((kind, None), []).append(abs(x))
    order = {EPS: 0, Z: 1, HALF: 2, QUARTER: 3, RESIDUAL: 4}
    blocks = []
    for (kind, eps), members in sorted(
        groups.items(), key=lambda item: (order[item[0][0]], item[0][1] or 0)
    ):
        if family == "A" and kind == HALF:
            kind = RESIDUAL
        blocks.append(SortedSequence.of(members, kind, eps))
    return blocks


def _class_values(kind: str, bound: Fraction, eps: Optional[Fraction]) -> list[Fraction]:
    limit = math.isqrt(math.ceil(bound)) + 1
    if kind == EPS:
        assert eps is not None
        candidates = [eps + k for k in range(-limit - 1, limit + 2)]
    elif kind == Z:
        candidates = [Fraction(k) for k in range(limit + 1)]
    elif kind == HALF:
        candidates = [Fraction(2 * k + 1, 2) for k in range(limit + 1)]
    elif kind == QUARTER:
        candidates = [Fraction(2 * k + 1, 4) for k in range(2 * limit + 2)]
    else:
        raise SequenceClassError(f"cannot enumerate class {kind!r}")
    return sorted((c for c in candidates if c * c < bound), reverse=True)


def norm_shell(
    kind: str, length: int, bound: Fraction, eps: Optional[Fraction] = None
) -> Iterator[SortedSequence]:
    """All weakly decreasing sequences of the class with squared norm below ``bound``."""

    values = _class_values(kind, Fraction(bound), eps)
    for combo in combinations_with_replacement(values, length):
        if sum((x * x for x in combo), Fraction(0)) < bound:
            yield SortedSequence(tuple(combo), kind, eps)


EPS_CHOICES = (Fraction(0), Fraction(1, 4), Fraction(-1, 4), Fraction(2, 5), Fraction(-2, 5))


@dataclass(frozen=True, slots=True)
class TriangularParameter:
    """A concatenation of triangular blocks, sorted into dominant form."""

    values: tuple[Fraction, ...]
    blocks: tuple[SortedSequence, ...]


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def triangular_parameters(family: str, rank: int) -> Iterator[TriangularParameter]:
    """Concatenated triangular λ for a classical family.

    Type A uses ``rank + 1`` coordinates split into blocks with distinct ε from
    :data:`EPS_CHOICES`.  Types B, C and D use x ⊔ y ⊔ z of lengths r + s + t = rank.
    """

    if family == "A":
        yield from _type_a_parameters(rank + 1)
        return
    for r, s, t in _compositions(rank, 3):
        xs = (
            [v_z(star) for star in star_partitions(r, double_star=True)]
            if r
            else [SortedSequence((), Z)]
        )
        ys = [v_half(p) for p in partitions_of(s)]
        zs = [v_quarter(p) for p in partitions_of(t)]
        for x in xs:
            for y in ys:
                for z in zs:
                    blocks = tuple(b for b in (x, y, z) if len(b))
                    values = tuple(sorted(x.values + y.values + z.values, reverse=True))
                    yield TriangularParameter(values, blocks)


def _type_a_parameters(length: int) -> Iterator[TriangularParameter]:
    for sizes in partitions_of(length):
        if len(sizes) > len(EPS_CHOICES):
            continue
        choices: list[list[SortedSequence]] = [[]]
        for size, eps in zip(sizes.parts, EPS_CHOICES):
            choices = [
                prefix + [v_eps(p, eps)] for prefix in choices for p in partitions_of(size)
            ]
        for blocks in choices:
            values = tuple(sorted((v for b in blocks for v in b.values), reverse=True))
            yield TriangularParameter(values, tuple(blocks))

"""Induction of the zero orbit from Levi subalgebras, closure order and duality."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from vwu_checker.combinatorics.partitions import (
    Partition,
    add_one_box,
    collapse,
    dominance_leq,
    remove_one_box,
    transpose,
)
from vwu_checker.errors import ClosureTableError, InadmissibleTypeError, UnsupportedFactorError
from vwu_checker.lie.cartan import CartanType
from vwu_checker.orbits.models import LeviDatum, OrbitLabel, natural_dimension
from vwu_checker.orbits.tables import TableRegistry


def zero_orbit(cartan_type: CartanType) -> OrbitLabel:
    return OrbitLabel(cartan_type, Partition((1,) * natural_dimension(cartan_type)))


def _runs(count: int, joined: Iterable[int]) -> list[int]:
    """Sizes of the runs of ``count`` coordinates glued by the ``joined`` gaps."""
    glue = set(joined)
    sizes, current = [], 1
    for gap in range(count - 1):
        if gap in glue:
            current += 1
        else:
            sizes.append(current)
            current = 1
    if count:
        sizes.append(current)
    return sizes


def levi_from_nodes(cartan_type: CartanType, nodes: Iterable[int]) -> LeviDatum:
    """The Levi whose simple roots are the canonical 0-based ``nodes``."""

    J = frozenset(nodes)
    n, family = cartan_type.rank, cartan_type.family
    if any(not 0 <= i < n for i in J):
        raise IndexError(f"Levi nodes {sorted(J)} out of range for {cartan_type}")
    if not cartan_type.is_classical:
        return LeviDatum(cartan_type, nodes=J)
    if family == "A":
        blocks = _runs(n + 1, J)
        return LeviDatum(cartan_type, tuple(sorted(blocks, reverse=True)))

    if family in ("B", "C"):
        special = n - 1
        chain = range(n - 1)
        if special in J:
            j = special
            while j - 1 >= 0 and (j - 1) in J:
                j -= 1
            remainder = n - j
        else:
            remainder = 0
        free = n - remainder
        blocks = _runs(free, (i for i in chain if i in J and i < free - 1))
        return LeviDatum(cartan_type, tuple(sorted(blocks, reverse=True)), remainder)

    # type D: nodes 0..n-3 form the chain, n-2 = e_{n-1}-e_n and n-1 = e_{n-1}+e_n
    forks = {n - 2, n - 1} & J
    chain_in_J = {i for i in J if i < n - 2}
    if len(forks) == 2:
        j = n - 2
        while j - 1 >= 0 and (j - 1) in chain_in_J:
            j -= 1
        remainder = n - j
        free = n - remainder
        blocks = _runs(free, (i for i in chain_in_J if i < free - 1))
        return LeviDatum(cartan_type, tuple(sorted(blocks, reverse=True)), remainder)
    if len(forks) == 1:
        # either fork glues the last two coordinates into one gl block
        blocks = _runs(n, chain_in_J | {n - 2})
    else:
        blocks = _runs(n, chain_in_J)
    return LeviDatum(cartan_type, tuple(sorted(blocks, reverse=True)), 0)


def _collapse_kind(cartan_type: CartanType) -> str:
    return cartan_type.family


def induce_zero(levi: LeviDatum, tables: Optional[TableRegistry] = None) -> OrbitLabel:
    """The Richardson orbit ``Ind_l^g {0}`` of a parabolic with Levi ``levi``."""

    ambient = levi.ambient
    if not ambient.is_classical:
        table = tables.get(ambient) if tables is not None else None
        if table is None:
            raise UnsupportedFactorError(ambient.label)
        assert levi.nodes is not None
        try:
            return table.induced_from_nodes(levi.nodes)
        except ClosureTableError as exc:
            raise UnsupportedFactorError(ambient.label, str(exc)) from exc
    if ambient.family == "A":
        return OrbitLabel(ambient, transpose(Partition.of(levi.gl_blocks)))

    kind = _collapse_kind(ambient)
    m = levi.classical_remainder
    start = 2 * m + 1 if ambient.family == "B" else 2 * m
    parts = Partition((1,) * start)
    for a in levi.gl_blocks:
        padded = list(parts.parts) + [0] * max(0, a - len(parts))
        for i in range(a):
            padded[i] += 2
        parts = collapse(Partition.of(padded), kind)
    return OrbitLabel(ambient, parts)


def orbit_from_coordinates(cartan_type: CartanType, values: Sequence[Fraction | int]) -> OrbitLabel:
    """Orbit induced from the Levi on which the factor coordinates ``values`` vanish.

    ``values`` are the Bourbaki coordinates of the restriction of λ to a
    classical factor, read against that factor's roots.
    """

    if not cartan_type.is_classical:
        raise UnsupportedFactorError(
            cartan_type.label, "coordinate formula needs a classical factor"
        )
    family = cartan_type.family
    expected = cartan_type.rank + 1 if family == "A" else cartan_type.rank
    if len(values) != expected:
        raise InadmissibleTypeError(f"{cartan_type} factor coordinates have length {expected}")
    coords = [Fraction(v) for v in values]
    if family == "A":
        return OrbitLabel(cartan_type, transpose(Partition.of(Counter(coords).values())))
    folded = Counter(abs(v) for v in coords)
    zeros = folded.pop(Fraction(0), 0)
    pivot = 2 * zeros + 1 if family == "B" else 2 * zeros
    parts = [pivot]
    for count in folded.values():
        parts.extend([count, count])
    return OrbitLabel(cartan_type, collapse(transpose(Partition.of(parts)), family))


def closure_leq(a: OrbitLabel, b: OrbitLabel, tables: Optional[TableRegistry] = None) -> bool:
    """``a`` lies in the closure of ``b``."""

    if a.cartan_type != b.cartan_type:
        raise InadmissibleTypeError(f"cannot compare orbits of {a.cartan_type} and {b.cartan_type}")
    if a.partition is not None and b.partition is not None:
        return dominance_leq(a.partition, b.partition)
    table = tables.get(a.cartan_type) if tables is not None else None
    if table is None:
        raise UnsupportedFactorError(a.cartan_type.label)
    assert a.name is not None and b.name is not None
    return table.leq(a.name, b.name)


_DUAL_FAMILY = {"A": "A", "B": "C", "C": "B", "D": "D"}


def dual_type(cartan_type: CartanType) -> CartanType:
    family = _DUAL_FAMILY.get(cartan_type.family)
    if family is None:
        return cartan_type
    return CartanType(family, cartan_type.rank)


def bv_dual(orbit: OrbitLabel) -> OrbitLabel:
    """Barbasch–Vogan dual orbit in the Langlands dual classical algebra."""

    source = orbit.cartan_type
    if orbit.partition is None:
        raise UnsupportedFactorError(
            source.label, "duality for exceptional orbits is not tabulated"
        )
    p = orbit.partition
    target = dual_type(source)
    if source.family == "A":
        return OrbitLabel(target, transpose(p))
    if source.family == "B":
        return OrbitLabel(target, collapse(remove_one_box(transpose(p)), "C"))
    if source.family == "C":
        return OrbitLabel(target, collapse(add_one_box(transpose(p)), "B"))
    return OrbitLabel(target, collapse(transpose(p), "D"))

"""Value types for nilpotent orbits and Levi data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from vwu_checker.combinatorics.partitions import Partition, is_type
from vwu_checker.errors import InadmissibleTypeError, PartitionError
from vwu_checker.lie.cartan import CartanType


def natural_dimension(cartan_type: CartanType) -> int:
    """Size of the defining matrix representation of a classical type."""

    family, n = cartan_type.family, cartan_type.rank
    if family == "A":
        return n + 1
    if family == "B":
        return 2 * n + 1
    if family in ("C", "D"):
        return 2 * n
    raise InadmissibleTypeError(f"{cartan_type} has no classical matrix model")


@dataclass(frozen=True, slots=True)
class OrbitLabel:
    """A nilpotent orbit: a partition for classical types, a table label otherwise."""

    cartan_type: CartanType
    partition: Optional[Partition] = None
    name: Optional[str] = None

    def __post_init__(self) -> None:
        if (self.partition is None) == (self.name is None):
            raise PartitionError("an orbit carries either a partition or an exceptional label")
        if self.partition is None:
            if self.cartan_type.is_classical:
                raise PartitionError(f"classical type {self.cartan_type} needs a partition")
            return
        if not self.cartan_type.is_classical:
            raise PartitionError(f"exceptional type {self.cartan_type} orbits are table labels")
        size = natural_dimension(self.cartan_type)
        if self.partition.size != size:
            raise PartitionError(
                f"{self.cartan_type} orbits are partitions of {size}, got {self.partition}"
            )
        if self.cartan_type.family != "A" and not is_type(self.partition, self.cartan_type.family):
            raise PartitionError(
                f"{self.partition} is not a type {self.cartan_type.family} partition"
            )

    @property
    def is_classical(self) -> bool:
        return self.partition is not None

    def __str__(self) -> str:
        return str(self.partition) if self.partition is not None else str(self.name)


@dataclass(frozen=True, slots=True)
class LeviDatum:
    """A Levi subalgebra ``gl(a_1) x ... x gl(a_k) x g(m)`` of a classical ambient.

    For type A the blocks cover all ``rank + 1`` coordinates and ``m`` is 0.  For
    exceptional ambients only ``nodes`` (0-based simple roots of the Levi) is used.
    """

    ambient: CartanType
    gl_blocks: tuple[int, ...] = ()
    classical_remainder: int = 0
    nodes: Optional[frozenset[int]] = None

    def __post_init__(self) -> None:
        if any(a <= 0 for a in self.gl_blocks) or self.classical_remainder < 0:
            raise PartitionError(
                f"invalid Levi blocks {self.gl_blocks}, m={self.classical_remainder}"
            )
        if not self.ambient.is_classical:
            if self.nodes is None:
                raise InadmissibleTypeError(f"Levi data for {self.ambient} need simple nodes")
            return
        total = sum(self.gl_blocks)
        if self.ambient.family == "A":
            if self.classical_remainder or total != self.ambient.rank + 1:
                raise PartitionError(
                    f"type A Levi blocks must sum to {self.ambient.rank + 1}: {self.gl_blocks}"
                )
        elif total + self.classical_remainder != self.ambient.rank:
            raise PartitionError(
                f"Levi blocks {self.gl_blocks} with m={self.classical_remainder} "
                f"do not fill rank {self.ambient.rank}"
            )

    @classmethod
    def whole(cls, ambient: CartanType) -> LeviDatum:
        if not ambient.is_classical:
            return cls(ambient, nodes=frozenset(range(ambient.rank)))
        if ambient.family == "A":
            return cls(ambient, (ambient.rank + 1,))
        return cls(ambient, (), ambient.rank)

    def __str__(self) -> str:
        if not self.ambient.is_classical:
            nodes = ",".join(str(i + 1) for i in sorted(self.nodes or ())) or "-"
            return f"{self.ambient.label}[{nodes}]"
        blocks = ",".join(str(a) for a in self.gl_blocks)
        return f"{self.ambient.label}(blocks={blocks}; m={self.classical_remainder})"

"""Partition calculus: dominance, transpose, collapses, P*(2n) and P**(2n)."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import accumulate, zip_longest
from typing import Iterable, Iterator, Optional

from sympy.utilities.iterables import partitions as _sympy_partitions

from vwu_checker.errors import PartitionError

CLASSICAL_KINDS = ("B", "C", "D")
_TOKEN = re.compile(r"^(\d+)(?:\^\(?(\d+)\)?)?$")


@dataclass(frozen=True, slots=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(not isinstance(part, int) or part <= 0 for part in self.parts):
            raise PartitionError(f"parts must be positive integers: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise PartitionError(f"parts must be weakly decreasing: {self.parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        """Sort ``parts`` and drop zeros."""
        return cls(tuple(sorted((int(p) for p in parts if p), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"[3,2,2,1]"``, ``"[3,2^(2),1]"`` or ``"3,2,2,1"``."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        parts: list[int] = []
        for token in (t.strip() for t in body.split(",")):
            if not token:
                continue
            match = _TOKEN.match(token)
            if match is None:
                raise PartitionError(f"cannot parse partition token {token!r} in {text!r}")
            value = int(match.group(1))
            parts.extend([value] * int(match.group(2) or 1))
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def multiplicities(self) -> Counter[int]:
        return Counter(self.parts)

    def part(self, index: int) -> int:
        """1-based part lookup; missing parts are 0."""
        return self.parts[index - 1] if 0 < index <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __str__(self) -> str:
        chunks = []
        i = 0
        while i < len(self.parts):
            value = self.parts[i]
            j = i
            while j < len(self.parts) and self.parts[j] == value:
                j += 1
            count = j - i
            chunks.append(str(value) if count == 1 else f"{value}^({count})")
            i = j
        return "[" + ",".join(chunks) + "]"

    def plain(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


EMPTY = Partition()


def partitions_of(n: int) -> Iterator[Partition]:
    if n < 0:
        return
    if n == 0:
        yield EMPTY
        return
    for counts in _sympy_partitions(n):
        # sympy reuses the yielded dict
        yield Partition(
            tuple(part for part in sorted(counts, reverse=True) for _ in range(counts[part]))
        )


def dominance_leq(p: Partition, q: Partition) -> bool:
    """``p <= q`` in the dominance order."""
    if p.size != q.size:
        raise PartitionError(f"dominance needs equal sizes: {p} has {p.size}, {q} has {q.size}")
    return all(
        a <= b
        for a, b in zip(
            accumulate(x for x, _ in zip_longest(p.parts, q.parts, fillvalue=0)),
            accumulate(y for _, y in zip_longest(p.parts, q.parts, fillvalue=0)),
        )
    )


def transpose(p: Partition) -> Partition:
    if not p.parts:
        return EMPTY
    return Partition(tuple(sum(1 for part in p.parts if part > i) for i in range(p.parts[0])))


def concat(p: Partition, q: Partition) -> Partition:
    if p.parts and q.parts and p.parts[-1] < q.parts[0]:
        raise PartitionError(f"cannot concatenate {p} and {q}: {p.parts[-1]} < {q.parts[0]}")
    return Partition(p.parts + q.parts)


def _check_kind(p: Partition, kind: str) -> None:
    if kind not in CLASSICAL_KINDS:
        raise PartitionError(f"unknown partition type {kind!r}")
    expected = 1 if kind == "B" else 0
    if p.size % 2 != expected:
        parity = "odd" if expected else "even"
        raise PartitionError(f"type {kind} partitions have {parity} size, {p} has size {p.size}")


def _bad_parity(kind: str) -> int:
    # type C forbids odd parts of odd multiplicity, B and D forbid even ones
    return 1 if kind == "C" else 0


def is_type(p: Partition, kind: str) -> bool:
    _check_kind(p, kind)
    bad = _bad_parity(kind)
    return all(count % 2 == 0 for value, count in p.multiplicities().items() if value % 2 == bad)


def collapse(p: Partition, kind: str) -> Partition:
    """The largest type-``kind`` partition dominated by ``p``."""

    _check_kind(p, kind)
    bad = _bad_parity(kind)
    parts = list(p.parts)
    while True:
        counts = Counter(parts)
        offenders = [v for v, c in counts.items() if v % 2 == bad and c % 2 == 1]
        if not offenders:
            return Partition.of(parts)
        q = max(offenders)
        last = len(parts) - 1 - parts[::-1].index(q)
        parts[last] -= 1
        target = next((i for i in range(last + 1, len(parts)) if parts[i] < q - 1), None)
        if target is None:
            parts.append(1)
        else:
            parts[target] += 1
        parts = [x for x in parts if x]


def collapse_brute_force(p: Partition, kind: str) -> Partition:
    """Maximum over the dominance down-set; a test oracle for :func:`collapse`."""

    _check_kind(p, kind)
    below = [q for q in partitions_of(p.size) if is_type(q, kind) and dominance_leq(q, p)]
    maximal = [q for q in below if not any(r != q and dominance_leq(q, r) for r in below)]
    if len(maximal) != 1:
        raise PartitionError(f"no unique maximal type {kind} partition below {p}: {maximal}")
    return maximal[0]


def add_one_box(p: Partition) -> Partition:
    """``p^+``: one more box in the first row."""
    if not p.parts:
        return Partition((1,))
    return Partition((p.parts[0] + 1,) + p.parts[1:])


def remove_one_box(p: Partition) -> Partition:
    """``p^-``: one box less in the last row."""
    if not p.parts:
        raise PartitionError("cannot remove a box from the empty partition")
    return Partition.of(p.parts[:-1] + (p.parts[-1] - 1,))


@dataclass(frozen=True, slots=True)
class StarPartition:
    """A partition of 2n read as ``[μ_1^(2), ..., 2μ_0, ..., μ_r^(2)]``.

    ``pivot_index`` points at the part ``2μ_0``; it is ``None`` when μ_0 = 0.
    """

    underlying: Partition
    pivot_index: Optional[int] = None

    def __post_init__(self) -> None:
        rest = list(self.underlying.parts)
        if self.pivot_index is not None:
            if not 0 <= self.pivot_index < len(rest):
                raise PartitionError(
                    f"pivot index {self.pivot_index} out of range for {self.underlying}"
                )
            pivot = rest.pop(self.pivot_index)
            if pivot % 2:
                raise PartitionError(f"pivot part {pivot} of {self.underlying} is odd")
        if any(count % 2 for count in Counter(rest).values()):
            raise PartitionError(f"{self.underlying} is not of the form [μ^(2), ..., 2μ_0, ...]")

    @property
    def mu0(self) -> int:
        if self.pivot_index is None:
            return 0
        return self.underlying.parts[self.pivot_index] // 2

    @property
    def pairs(self) -> tuple[int, ...]:
        """μ_1 ≥ μ_2 ≥ ... ≥ μ_r, one entry per doubled part."""
        rest = list(self.underlying.parts)
        if self.pivot_index is not None:
            rest.pop(self.pivot_index)
        return tuple(rest[::2])

    @property
    def is_double_star(self) -> bool:
        pairs = self.pairs
        return not pairs or 2 * self.mu0 >= pairs[0]

    def __str__(self) -> str:
        if self.pivot_index is None:
            return f"{self.underlying}"
        return f"{self.underlying} (pivot {2 * self.mu0})"


def star_parses(p: Partition) -> list[StarPartition]:
    """Every parse of ``p`` as a member of P*; empty when ``p`` has none."""

    if p.size % 2:
        return []
    odd = [value for value, count in p.multiplicities().items() if count % 2]
    if not odd:
        return [StarPartition(p, None)]
    if len(odd) > 1 or odd[0] % 2:
        return []
    return [StarPartition(p, i) for i, part in enumerate(p.parts) if part == odd[0]]


def parse_star(p: Partition) -> Optional[StarPartition]:
    """The canonical parse (first occurrence of the pivot value)."""
    parses = star_parses(p)
    return parses[0] if parses else None


def is_star(p: Partition, double_star: bool = False) -> bool:
    parsed = parse_star(p)
    if parsed is None:
        return False
    return parsed.is_double_star if double_star else True


def star_partitions(n: int, double_star: bool = False) -> list[StarPartition]:
    """P*(2n), or P**(2n) when ``double_star``; one canonical parse per partition."""

    result = []
    for p in partitions_of(2 * n):
        parsed = parse_star(p)
        if parsed is None or (double_star and not parsed.is_double_star):
            continue
        result.append(parsed)
    return result


def in_p_prime(r: Partition) -> bool:
    if r.size % 2 or not is_type(r, "C"):
        return False
    for i in range(1, len(r) + 1):
        value = r.part(i)
        if value % 2:
            continue
        if i % 2 == 1 and r.part(i + 1) % 2:
            return False
        if i % 2 == 0 and value < r.part(i + 1) + 1:
            return False
    return True


def tilde(r: Partition) -> Partition:
    """Undo the type-C collapse of a partition with only odd parts."""

    if not in_p_prime(r):
        raise PartitionError(f"{r} does not satisfy the parity conditions required by tilde")
    parts = []
    for i, value in enumerate(r.parts, start=1):
        if value % 2 == 0:
            value = value + 1 if i % 2 == 1 else value - 1
        parts.append(value)
    return Partition(tuple(parts))

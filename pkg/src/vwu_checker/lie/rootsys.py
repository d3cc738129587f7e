"""Root data with exact rational arithmetic.

Weights and coroots are plain tuples of :class:`fractions.Fraction`; the pairing
between a coroot and a weight is the dot product of their coordinate vectors.
Classical types live in Bourbaki ambient coordinates, exceptional types in
fundamental-weight coordinates (simple coroots are then the unit vectors).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx
import sympy
import structlog

from vwu_checker.errors import DimensionMismatchError, InadmissibleTypeError
from vwu_checker.lie.cartan import (
    CartanMatrix,
    CartanType,
    classify_cartan_matrix,
    standard_cartan_matrix,
)

logger = structlog.get_logger(__name__)

Vector = tuple[Q, ...]
Weight = Vector
WeylWord = tuple[int, ...]

BOURBAKI = "bourbaki"
FUNDAMENTAL = "fundamental"


def vector(values: Iterable[int | Q | str]) -> Vector:
    return tuple(Q(value) for value in values)


def zero(dimension: int) -> Vector:
    return tuple(Q(0) for _ in range(dimension))


def dot(x: Sequence[Q], y: Sequence[Q]) -> Q:
    """Return the exact rational inner product of two vectors."""
    return sum((a * b for a, b in zip(x, y)), Q(0))


def add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def scale(c: Q | int, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def combine(coefficients: Sequence[Q | int], basis: Sequence[Vector], dimension: int) -> Vector:
    result = zero(dimension)
    for c, b in zip(coefficients, basis):
        if c:
            result = add(result, scale(c, b))
    return result


def format_vector(x: Sequence[Q]) -> str:
    return "(" + ",".join(str(value) for value in x) + ")"


def _to_fraction(value: sympy.Basic) -> Q:
    rational = sympy.Rational(value)
    return Q(int(rational.p), int(rational.q))


def exact_inverse(matrix: Sequence[Sequence[Q | int]]) -> tuple[tuple[Q, ...], ...]:
    if not matrix:
        return ()
    inverse = sympy.Matrix(
        [
            [sympy.Rational(Q(entry).numerator, Q(entry).denominator) for entry in row]
            for row in matrix
        ]
    ).inv()
    return tuple(
        tuple(_to_fraction(inverse[i, j]) for j in range(inverse.cols)) for i in range(inverse.rows)
    )


@dataclass(frozen=True, slots=True)
class PositiveRoot:
    """A positive root together with its coroot and simple-root coefficients."""

    root: Vector
    coroot: Vector
    coefficients: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coefficients)


@dataclass(frozen=True)
class RootSystem:
    """Simple roots and coroots in a fixed ambient space."""

    label: str
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    ambient_dim: int
    cartan_type: CartanType | None = None
    coordinates: str = BOURBAKI
    components: tuple[CartanType, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.simple_roots) != len(self.simple_coroots):
            raise DimensionMismatchError("simple roots and coroots differ in number")
        for v in (*self.simple_roots, *self.simple_coroots):
            if len(v) != self.ambient_dim:
                raise DimensionMismatchError(
                    f"vector {format_vector(v)} does not have dimension {self.ambient_dim}"
                )

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def is_classical_bourbaki(self) -> bool:
        return self.coordinates == BOURBAKI and all(t.is_classical for t in self.components)

    @cached_property
    def cartan_matrix(self) -> CartanMatrix:
        """Bourbaki convention: entry ``(i, j)`` is ``<alpha_i, alpha_j^vee>``."""
        rows = []
        for root in self.simple_roots:
            row = []
            for coroot in self.simple_coroots:
                value = dot(coroot, root)
                if value.denominator != 1:
                    raise InadmissibleTypeError(
                        f"non-integral Cartan entry {value} in {self.label}"
                    )
                row.append(int(value))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def _inverse_transpose(self) -> tuple[tuple[Q, ...], ...]:
        n = self.rank
        transpose = [[self.cartan_matrix[j][i] for j in range(n)] for i in range(n)]
        return exact_inverse(transpose)

    @cached_property
    def positive(self) -> tuple[PositiveRoot, ...]:
        """Positive roots with coroots, enumerated by simple reflections."""
        n = self.rank
        matrix = self.cartan_matrix
        start = []
        for i in range(n):
            unit = tuple(1 if j == i else 0 for j in range(n))
            start.append((unit, unit))
        seen = {c for c, _ in start}
        queue = deque(start)
        found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        while queue:
            c, d = queue.popleft()
            found.append((c, d))
            for i in range(n):
                if c[i] == 1 and sum(c) == 1:
                    continue
                root_pairing = sum(c[j] * matrix[j][i] for j in range(n))
                coroot_pairing = sum(d[j] * matrix[i][j] for j in range(n))
                new_c = tuple(c[j] - (root_pairing if j == i else 0) for j in range(n))
                new_d = tuple(d[j] - (coroot_pairing if j == i else 0) for j in range(n))
                if min(new_c) < 0 or new_c in seen:
                    continue
                seen.add(new_c)
                queue.append((new_c, new_d))
        found.sort(key=lambda item: (sum(item[0]), tuple(-x for x in item[0])))
        return tuple(
            PositiveRoot(
                root=combine(c, self.simple_roots, self.ambient_dim),
                coroot=combine(d, self.simple_coroots, self.ambient_dim),
                coefficients=c,
            )
            for c, d in found
        )

    @property
    def positive_roots(self) -> list[Vector]:
        return [p.root for p in self.positive]

    @property
    def positive_coroots(self) -> list[Vector]:
        return [p.coroot for p in self.positive]

    @cached_property
    def rho(self) -> Weight:
        """Half the sum of the positive roots."""
        total = zero(self.ambient_dim)
        for p in self.positive:
            total = add(total, p.root)
        return scale(Q(1, 2), total)

    def check_dimension(self, mu: Sequence[Q]) -> None:
        if len(mu) != self.ambient_dim:
            raise DimensionMismatchError(
                f"{self.label} weights have {self.ambient_dim} coordinates, got {len(mu)}"
            )

    def pair(self, coroot: Sequence[Q], weight: Sequence[Q]) -> Q:
        self.check_dimension(coroot)
        self.check_dimension(weight)
        return dot(coroot, weight)

    def simple_pairings(self, mu: Weight) -> tuple[Q, ...]:
        self.check_dimension(mu)
        return tuple(dot(coroot, mu) for coroot in self.simple_coroots)

    def _check_index(self, index: int) -> None:
        if not 0 <= index < self.rank:
            raise IndexError(f"simple index {index} out of range for {self.label}")

    def reflect(self, index: int, mu: Weight) -> Weight:
        """Return ``s_i(mu) = mu - <alpha_i^vee, mu> alpha_i``."""
        self._check_index(index)
        self.check_dimension(mu)
        c = dot(self.simple_coroots[index], mu)
        if not c:
            return tuple(mu)
        return sub(tuple(mu), scale(c, self.simple_roots[index]))

    def reflect_coroot(self, index: int, x: Vector) -> Vector:
        self._check_index(index)
        c = dot(x, self.simple_roots[index])
        if not c:
            return x
        return sub(x, scale(c, self.simple_coroots[index]))

    def apply_word(self, word: WeylWord, mu: Weight) -> Weight:
        """Apply ``w = s_{i1} ... s_{ik}``; the rightmost letter acts first."""
        result = tuple(mu)
        for index in reversed(word):
            result = self.reflect(index, result)
        return result

    def apply_word_coroot(self, word: WeylWord, x: Vector) -> Vector:
        result = x
        for index in reversed(word):
            result = self.reflect_coroot(index, result)
        return result

    def is_dominant(self, mu: Weight) -> bool:
        return all(p >= 0 for p in self.simple_pairings(mu))

    def dominant_representative(self, mu: Weight) -> tuple[Weight, WeylWord]:
        """Ascend by the lowest-index negative simple reflection until dominant.

        The returned word ``w`` satisfies ``apply_word(w, mu) == dominant``.
        """
        current = tuple(mu)
        self.check_dimension(current)
        applied: list[int] = []
        while True:
            pairings = self.simple_pairings(current)
            negative = next((i for i, p in enumerate(pairings) if p < 0), None)
            if negative is None:
                return current, tuple(reversed(applied))
            current = self.reflect(negative, current)
            applied.append(negative)

    def projected_root_coefficients(self, x: Vector) -> tuple[Q, ...]:
        """Simple-root coefficients of the projection of ``x`` to the root span."""
        pairings = self.simple_pairings(x)
        return tuple(
            sum((row[j] * pairings[j] for j in range(self.rank)), Q(0))
            for row in self._inverse_transpose
        )

    def root_coefficients(self, x: Vector) -> tuple[Q, ...] | None:
        """Coefficients of ``x`` in the simple roots, or ``None`` off their span."""
        self.check_dimension(x)
        coefficients = self.projected_root_coefficients(x)
        if combine(coefficients, self.simple_roots, self.ambient_dim) != tuple(x):
            return None
        return coefficients

    def from_fundamental(self, coordinates: Sequence[Q | int]) -> Weight:
        """The weight in the root span with the given simple-coroot pairings."""
        if len(coordinates) != self.rank:
            raise DimensionMismatchError(
                f"{self.label} has rank {self.rank}, got {len(coordinates)} coordinates"
            )
        pairings = [Q(c) for c in coordinates]
        coefficients = [
            sum((row[j] * pairings[j] for j in range(self.rank)), Q(0))
            for row in self._inverse_transpose
        ]
        return combine(coefficients, self.simple_roots, self.ambient_dim)

    def to_fundamental(self, mu: Weight) -> tuple[Q, ...]:
        return self.simple_pairings(mu)

    def is_positive_root(self, x: Vector) -> bool | None:
        coefficients = self.root_coefficients(x)
        if coefficients is None or not any(coefficients):
            return None
        if all(c >= 0 for c in coefficients):
            return True
        if all(c <= 0 for c in coefficients):
            return False
        return None

    def inversion_set(self, word: WeylWord) -> list[PositiveRoot]:
        """Positive roots sent to negative roots by ``w``."""
        return [
            p
            for p in self.positive
            if self.is_positive_root(self.apply_word(word, p.root)) is False
        ]

    def length(self, word: WeylWord) -> int:
        return len(self.inversion_set(word))

    def cone_membership(self, word: WeylWord, mu: Weight) -> bool:
        """True iff ``<mu, alpha^vee> < 0`` for every positive root inverted by ``w``."""
        self.check_dimension(mu)
        return all(dot(p.coroot, mu) < 0 for p in self.inversion_set(word))

    def integral_coroot_subsystem(self, mu: Weight) -> SubsystemDecomposition:
        return integral_coroot_subsystem(self, mu)


def _unit(dimension: int, index: int, value: int = 1) -> Vector:
    return tuple(Q(value) if j == index else Q(0) for j in range(dimension))


def _bourbaki_simple_data(cartan_type: CartanType) -> tuple[list[Vector], list[Vector], int]:
    family, n = cartan_type.family, cartan_type.rank
    if family == "A":
        dim = n + 1
        roots = [sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n)]
        return roots, list(roots), dim
    dim = n
    chain = [sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n - 1)]
    if family == "B":
        return chain + [_unit(dim, n - 1)], chain + [_unit(dim, n - 1, 2)], dim
    if family == "C":
        return chain + [_unit(dim, n - 1, 2)], chain + [_unit(dim, n - 1)], dim
    if family == "D":
        fork = add(_unit(dim, n - 2), _unit(dim, n - 1))
        return chain + [fork], chain + [fork], dim
    raise InadmissibleTypeError(f"no Bourbaki coordinates for exceptional type {cartan_type}")


def build_root_system(cartan_type: CartanType, coordinates: str | None = None) -> RootSystem:
    """Build the root system of a simple type.

    Classical types default to Bourbaki coordinates, exceptional types to
    fundamental-weight coordinates.
    """

    if coordinates is None:
        coordinates = BOURBAKI if cartan_type.is_classical else FUNDAMENTAL
    if coordinates == BOURBAKI:
        roots, coroots, dim = _bourbaki_simple_data(cartan_type)
    elif coordinates == FUNDAMENTAL:
        matrix = standard_cartan_matrix(cartan_type)
        dim = cartan_type.rank
        coroots = [_unit(dim, i) for i in range(dim)]
        roots = [tuple(Q(entry) for entry in matrix[j]) for j in range(dim)]
    else:
        raise InadmissibleTypeError(f"unknown coordinate convention {coordinates!r}")
    return RootSystem(
        label=cartan_type.label,
        simple_roots=tuple(roots),
        simple_coroots=tuple(coroots),
        ambient_dim=dim,
        cartan_type=cartan_type,
        coordinates=coordinates,
        components=(cartan_type,),
    )


def direct_sum(*systems: RootSystem) -> RootSystem:
    """Orthogonal direct sum, e.g. ``A1xA1``."""

    if len(systems) == 1:
        return systems[0]
    dim = sum(s.ambient_dim for s in systems)
    roots: list[Vector] = []
    coroots: list[Vector] = []
    offset = 0
    for system in systems:
        pad_left = zero(offset)
        pad_right = zero(dim - offset - system.ambient_dim)
        roots.extend(pad_left + r + pad_right for r in system.simple_roots)
        coroots.extend(pad_left + c + pad_right for c in system.simple_coroots)
        offset += system.ambient_dim
    coordinate_kinds = {s.coordinates for s in systems}
    return RootSystem(
        label="x".join(s.label for s in systems),
        simple_roots=tuple(roots),
        simple_coroots=tuple(coroots),
        ambient_dim=dim,
        cartan_type=None,
        coordinates=coordinate_kinds.pop() if len(coordinate_kinds) == 1 else FUNDAMENTAL,
        components=tuple(t for s in systems for t in s.components),
    )


def trivial_system() -> RootSystem:
    return RootSystem(
        label="trivial",
        simple_roots=(),
        simple_coroots=(),
        ambient_dim=0,
        coordinates=FUNDAMENTAL,
    )


def system_from_label(text: str, coordinates: str | None = None) -> RootSystem:
    from vwu_checker.lie.cartan import parse_type_string

    return direct_sum(*(build_root_system(t, coordinates) for t in parse_type_string(text)))


@dataclass(frozen=True)
class SubsystemFactor:
    """One simple factor of the integral coroot system.

    ``cartan_type`` is the type of the coroot factor, i.e. of the corresponding
    simple factor of the dual integral subalgebra.  ``system`` holds the roots
    of g and their coroots in canonical node order, so it is labelled by
    ``cartan_type.dual`` (``B3@B3`` for the ``C3`` factor of an integral B3 weight)
    while ``label`` names the coroot type.
    """

    cartan_type: CartanType
    system: RootSystem
    pairings: tuple[Q, ...]

    @property
    def label(self) -> str:
        return self.cartan_type.label

    def zero_nodes(self, mu: Weight) -> frozenset[int]:
        return frozenset(
            index for index, coroot in enumerate(self.system.simple_coroots) if dot(coroot, mu) == 0
        )


@dataclass(frozen=True)
class SubsystemDecomposition:
    coroots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    factors: tuple[SubsystemFactor, ...]

    @property
    def labels(self) -> list[str]:
        return [factor.label for factor in self.factors]


def integral_coroot_subsystem(system: RootSystem, mu: Weight) -> SubsystemDecomposition:
    """Split the coroots pairing integrally with ``mu`` into simple factors."""

    system.check_dimension(mu)
    integral = [p for p in system.positive if dot(p.coroot, mu).denominator == 1]
    coroot_set = {p.coroot for p in integral}
    simple = [
        p
        for p in integral
        if not any(sub(p.coroot, q.coroot) in coroot_set for q in integral if q.coroot != p.coroot)
    ]
    size = len(simple)
    matrix = [
        [int(dot(simple[i].coroot, simple[j].root)) for j in range(size)] for i in range(size)
    ]

    graph = nx.Graph()
    graph.add_nodes_from(range(size))
    graph.add_edges_from(
        (i, j) for i in range(size) for j in range(i + 1, size) if matrix[i][j] != 0
    )
    components = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])

    factors = []
    for component in components:
        sub_matrix = [[matrix[i][j] for j in component] for i in component]
        cartan_type, order = classify_cartan_matrix(sub_matrix, component)
        roots = tuple(simple[i].root for i in order)
        coroots = tuple(simple[i].coroot for i in order)
        # the factor keeps g's roots, whose type is dual to the coroot type
        factor_system = RootSystem(
            label=f"{cartan_type.dual.label}@{system.label}",
            simple_roots=roots,
            simple_coroots=coroots,
            ambient_dim=system.ambient_dim,
            coordinates=system.coordinates,
            components=(cartan_type.dual,),
        )
        factors.append(
            SubsystemFactor(
                cartan_type=cartan_type,
                system=factor_system,
                pairings=tuple(dot(c, mu) for c in coroots),
            )
        )
    logger.debug(
        "factor_split",
        system=system.label,
        integral=len(integral),
        factors=[f.label for f in factors],
    )
    return SubsystemDecomposition(
        coroots=tuple(p.coroot for p in integral),
        simple_coroots=tuple(p.coroot for p in simple),
        factors=tuple(factors),
    )

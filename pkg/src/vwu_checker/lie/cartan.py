"""Cartan types, standard Cartan matrices and Dynkin-diagram classification.

Cartan matrices follow Bourbaki: entry ``(i, j)`` is ``<alpha_i, alpha_j^vee>``.
A ``-2`` or ``-3`` in row ``i`` and column ``j`` therefore means that node ``j``
is the short end of a multiple bond.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from vwu_checker.errors import InadmissibleTypeError

CartanMatrix = tuple[tuple[int, ...], ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")
CLASSICAL_FAMILIES = ("A", "B", "C", "D")
_TYPE_PATTERN = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")

# Bourbaki edges of E8; E6 and E7 use the edges among their first nodes.
_E_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


@dataclass(frozen=True, slots=True)
class CartanType:
    """Simple Cartan type such as ``B3`` or ``E8``."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InadmissibleTypeError(f"unknown Cartan family {self.family!r}")
        if self.rank < 1:
            raise InadmissibleTypeError(f"rank must be positive, got {self.rank}")
        if self.family == "D" and self.rank < 2:
            raise InadmissibleTypeError("type D requires rank >= 2")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise InadmissibleTypeError(f"type E requires rank 6, 7 or 8, got {self.rank}")
        if self.family == "F" and self.rank != 4:
            raise InadmissibleTypeError("type F only exists in rank 4")
        if self.family == "G" and self.rank != 2:
            raise InadmissibleTypeError("type G only exists in rank 2")

    @classmethod
    def parse(cls, text: str) -> CartanType:
        match = _TYPE_PATTERN.match(text)
        if match is None:
            raise InadmissibleTypeError(f"cannot parse Cartan type {text!r}")
        return cls(match.group(1).upper(), int(match.group(2)))

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def dual(self) -> CartanType:
        """Type of the dual root system; B and C swap, the rest are self-dual."""
        swap = {"B": "C", "C": "B"}
        if self.rank < 3 or self.family not in swap:
            return self
        return CartanType(swap[self.family], self.rank)

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL_FAMILIES

    @property
    def positive_root_count(self) -> int:
        n = self.rank
        counts = {
            "A": n * (n + 1) // 2,
            "B": n * n,
            "C": n * n,
            "D": n * (n - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
            "F": 24,
            "G": 6,
        }
        return counts[self.family]

    def __str__(self) -> str:
        return self.label


def standard_cartan_matrix(cartan_type: CartanType) -> CartanMatrix:
    """Return the Bourbaki Cartan matrix in Bourbaki node order."""

    n = cartan_type.rank
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int) -> None:
        rows[i][j] = -1
        rows[j][i] = -1

    family = cartan_type.family
    if family in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B" and n >= 2:
            rows[n - 2][n - 1] = -2
        if family == "C" and n >= 2:
            rows[n - 1][n - 2] = -2
    elif family == "D":
        if n == 2:
            pass
        else:
            for i in range(n - 2):
                bond(i, i + 1)
            bond(n - 3, n - 1)
    elif family == "E":
        for a, b in _E_EDGES:
            if a <= n and b <= n:
                bond(a - 1, b - 1)
    elif family == "F":
        for i in range(3):
            bond(i, i + 1)
        rows[1][2] = -2
    elif family == "G":
        rows[0][1] = -1
        rows[1][0] = -3
    return tuple(tuple(row) for row in rows)


def parse_type_string(text: str) -> list[CartanType]:
    """Parse ``"B3"`` or products such as ``"A1xA1"`` into simple factors."""

    pieces = [piece for piece in re.split(r"[x×*]", text.strip()) if piece.strip()]
    if not pieces:
        raise InadmissibleTypeError(f"cannot parse Cartan type {text!r}")
    return [CartanType.parse(piece) for piece in pieces]


def _submatrix(matrix: Sequence[Sequence[int]], order: Sequence[int]) -> CartanMatrix:
    return tuple(tuple(int(matrix[i][j]) for j in order) for i in order)


def _path_from(graph: nx.Graph, start: int) -> list[int]:
    order = [start]
    previous = None
    current = start
    while True:
        nxt = [node for node in graph.neighbors(current) if node != previous]
        if not nxt:
            return order
        previous, current = current, nxt[0]
        order.append(current)


def _arm(graph: nx.Graph, center: int, first: int) -> list[int]:
    arm = [first]
    previous, current = center, first
    while True:
        nxt = [node for node in graph.neighbors(current) if node != previous]
        if not nxt:
            return arm
        previous, current = current, nxt[0]
        arm.append(current)


def classify_cartan_matrix(
    matrix: Sequence[Sequence[int]], nodes: Sequence[int] | None = None
) -> tuple[CartanType, list[int]]:
    """Classify a connected Cartan matrix.

    Returns the Cartan type and the given node labels rearranged into Bourbaki
    order, so that the permuted matrix equals :func:`standard_cartan_matrix`.
    """

    size = len(matrix)
    labels = list(nodes) if nodes is not None else list(range(size))
    graph = nx.Graph()
    graph.add_nodes_from(range(size))
    for i in range(size):
        for j in range(i + 1, size):
            if matrix[i][j] != 0 or matrix[j][i] != 0:
                graph.add_edge(i, j, weight=int(matrix[i][j]) * int(matrix[j][i]))
    if size == 0 or not nx.is_connected(graph):
        raise InadmissibleTypeError("Cartan matrix is empty or decomposable")
    if not nx.is_tree(graph):
        raise InadmissibleTypeError("Dynkin diagram contains a cycle")

    multiple = [(i, j, w) for i, j, w in graph.edges(data="weight") if w > 1]
    cartan_type: CartanType
    order: list[int]

    if size == 1:
        cartan_type, order = CartanType("A", 1), [0]
    elif multiple:
        if len(multiple) > 1:
            raise InadmissibleTypeError("more than one multiple bond")
        i, j, weight = multiple[0]
        long_node, short_node = (i, j) if matrix[i][j] < -1 else (j, i)
        if weight == 3:
            if size != 2:
                raise InadmissibleTypeError("triple bond outside rank 2")
            cartan_type, order = CartanType("G", 2), [short_node, long_node]
        elif weight == 2:
            if max(degree for _, degree in graph.degree()) > 2:
                raise InadmissibleTypeError("branched diagram with a double bond")
            ends = sorted(node for node, degree in graph.degree() if degree == 1)
            if size == 2:
                cartan_type, order = CartanType("B", 2), [long_node, short_node]
            elif graph.degree(short_node) == 1:
                other = ends[0] if ends[0] != short_node else ends[1]
                cartan_type, order = CartanType("B", size), _path_from(graph, other)
            elif graph.degree(long_node) == 1:
                other = ends[0] if ends[0] != long_node else ends[1]
                cartan_type, order = CartanType("C", size), _path_from(graph, other)
            elif size == 4:
                path = _path_from(graph, ends[0])
                if path.index(long_node) > path.index(short_node):
                    path.reverse()
                cartan_type, order = CartanType("F", 4), path
            else:
                raise InadmissibleTypeError("double bond in the middle of a long chain")
        else:
            raise InadmissibleTypeError(f"bond of multiplicity {weight} is not finite type")
    else:
        branch = [node for node, degree in graph.degree() if degree >= 3]
        if not branch:
            ends = sorted(node for node, degree in graph.degree() if degree == 1)
            cartan_type, order = CartanType("A", size), _path_from(graph, ends[0])
        else:
            if len(branch) > 1 or graph.degree(branch[0]) != 3:
                raise InadmissibleTypeError("diagram is not of finite type")
            center = branch[0]
            arms = [_arm(graph, center, first) for first in graph.neighbors(center)]
            arms.sort(key=lambda arm: (len(arm), arm[-1]))
            lengths = tuple(len(arm) for arm in arms)
            if lengths == (1, 1, 1):
                # D4: keep the lowest label on the chain end so the standard order is fixed
                long_arm = min(arms, key=lambda arm: labels[arm[0]])
                leaves = sorted(arm[0] for arm in arms if arm is not long_arm)
                cartan_type = CartanType("D", size)
                order = long_arm + [center] + leaves
            elif lengths[0] == 1 and lengths[1] == 1:
                long_arm = arms[2]
                leaves = sorted([arms[0][0], arms[1][0]])
                cartan_type = CartanType("D", size)
                order = list(reversed(long_arm)) + [center] + leaves
            elif lengths in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
                short_leaf = arms[0][0]
                first_arm, second_arm = arms[1], arms[2]
                cartan_type = CartanType("E", size)
                order = [first_arm[1], short_leaf, first_arm[0], center] + second_arm
            else:
                raise InadmissibleTypeError(f"branched diagram with arms {lengths}")

    expected = standard_cartan_matrix(cartan_type)
    if _submatrix(matrix, order) != expected:
        raise InadmissibleTypeError(f"matrix does not match classified type {cartan_type}")
    return cartan_type, [labels[index] for index in order]

"""Closure-order tables for exceptional nilpotent orbits.

A table file is line oriented; ``#`` starts a comment::

    type G2
    orbit 0 dim 0
    orbit G2(a1) dim 10
    cover 0 G2(a1)
    richardson 1 G2(a1)
    richardson - G2

``richardson`` maps the simple roots of a Levi (1-based, comma separated, ``-``
for the torus) to the orbit induced from its zero orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterator, Optional

import networkx as nx
import structlog

from vwu_checker.errors import ClosureTableError, InadmissibleTypeError
from vwu_checker.lie.cartan import CartanType
from vwu_checker.orbits.models import OrbitLabel

logger = structlog.get_logger(__name__)

TABLE_SUFFIX = ".txt"


@dataclass(slots=True)
class ClosureTable:
    cartan_type: CartanType
    dimensions: dict[str, int] = field(default_factory=dict)
    covers: list[tuple[str, str]] = field(default_factory=list)
    richardson: dict[frozenset[int], str] = field(default_factory=dict)
    source: Optional[Path] = None
    graph: nx.DiGraph = field(default_factory=nx.DiGraph)

    @property
    def labels(self) -> list[str]:
        return sorted(self.dimensions, key=lambda label: (self.dimensions[label], label))

    def orbit(self, label: str) -> OrbitLabel:
        if label not in self.dimensions:
            raise ClosureTableError(f"orbit {label!r} is not in the {self.cartan_type} table")
        return OrbitLabel(self.cartan_type, name=label)

    def leq(self, smaller: str, larger: str) -> bool:
        for label in (smaller, larger):
            if label not in self.dimensions:
                raise ClosureTableError(f"orbit {label!r} is not in the {self.cartan_type} table")
        return smaller == larger or nx.has_path(self.graph, smaller, larger)

    def induced_from_nodes(self, nodes: frozenset[int]) -> OrbitLabel:
        """Richardson orbit for the Levi spanned by ``nodes`` (0-based)."""
        try:
            return self.orbit(self.richardson[frozenset(nodes)])
        except KeyError as exc:
            shown = sorted(i + 1 for i in nodes)
            raise ClosureTableError(
                f"no richardson entry for nodes {shown} in {self.cartan_type}"
            ) from exc

    def validate(self) -> None:
        if not self.dimensions:
            raise ClosureTableError(f"{self._where()}: no orbits declared")
        for smaller, larger in self.covers:
            for label in (smaller, larger):
                if label not in self.dimensions:
                    raise ClosureTableError(
                        f"{self._where()}: cover uses undeclared orbit {label!r}"
                    )
            if self.dimensions[smaller] >= self.dimensions[larger]:
                raise ClosureTableError(
                    f"{self._where()}: cover {smaller} < {larger} does not increase dimension"
                )
        if not nx.is_directed_acyclic_graph(self.graph):
            raise ClosureTableError(f"{self._where()}: cover relation has a cycle")
        rank = self.cartan_type.rank
        for size in range(rank + 1):
            for subset in combinations(range(rank), size):
                label = self.richardson.get(frozenset(subset))
                if label is None:
                    nodes = ",".join(str(i + 1) for i in subset) or "-"
                    raise ClosureTableError(
                        f"{self._where()}: missing richardson entry for {nodes}"
                    )
                if label not in self.dimensions:
                    raise ClosureTableError(
                        f"{self._where()}: richardson uses undeclared orbit {label!r}"
                    )

    def _where(self) -> str:
        return str(self.source) if self.source else f"{self.cartan_type} table"


def _parse_nodes(token: str, rank: int, where: str) -> frozenset[int]:
    if token == "-":
        return frozenset()
    try:
        nodes = frozenset(int(piece) - 1 for piece in token.split(","))
    except ValueError as exc:
        raise ClosureTableError(f"{where}: bad node list {token!r}") from exc
    if any(not 0 <= node < rank for node in nodes):
        raise ClosureTableError(f"{where}: node list {token!r} out of range for rank {rank}")
    return nodes


def parse_table(text: str, source: Optional[Path] = None) -> ClosureTable:
    table: Optional[ClosureTable] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source or '<table>'}:{number}"
        words = line.split()
        keyword = words[0]
        if keyword == "type":
            if table is not None or len(words) != 2:
                raise ClosureTableError(f"{where}: a single 'type <label>' header is required")
            try:
                table = ClosureTable(CartanType.parse(words[1]), source=source)
            except InadmissibleTypeError as exc:
                raise ClosureTableError(f"{where}: {exc}") from exc
            continue
        if table is None:
            raise ClosureTableError(f"{where}: 'type' header must come first")
        if keyword == "orbit" and len(words) == 4 and words[2] == "dim":
            label = words[1]
            if label in table.dimensions:
                raise ClosureTableError(f"{where}: orbit {label!r} declared twice")
            try:
                table.dimensions[label] = int(words[3])
            except ValueError as exc:
                raise ClosureTableError(f"{where}: bad dimension {words[3]!r}") from exc
            table.graph.add_node(label)
        elif keyword == "cover" and len(words) == 3:
            table.covers.append((words[1], words[2]))
            table.graph.add_edge(words[1], words[2])
        elif keyword == "richardson" and len(words) == 3:
            nodes = _parse_nodes(words[1], table.cartan_type.rank, where)
            if nodes in table.richardson:
                raise ClosureTableError(f"{where}: duplicate richardson entry {words[1]}")
            table.richardson[nodes] = words[2]
        else:
            raise ClosureTableError(f"{where}: cannot parse {line!r}")
    if table is None:
        raise ClosureTableError(f"{source or '<table>'}: empty table")
    table.validate()
    return table


def load_table(path: Path) -> ClosureTable:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ClosureTableError(f"cannot read {path}: {exc}") from exc
    table = parse_table(text, source=path)
    logger.info(
        "table_loaded",
        path=str(path),
        type=table.cartan_type.label,
        orbits=len(table.dimensions),
    )
    return table


@dataclass(slots=True)
class TableRegistry:
    """Loaded closure tables keyed by type label."""

    tables: dict[str, ClosureTable] = field(default_factory=dict)
    directory: Optional[Path] = None
    consulted: set[str] = field(default_factory=set)

    def get(self, cartan_type: CartanType) -> Optional[ClosureTable]:
        table = self.tables.get(cartan_type.label)
        if table is not None:
            self.consulted.add(cartan_type.label)
        return table

    def __contains__(self, label: object) -> bool:
        return label in self.tables

    def __iter__(self) -> Iterator[ClosureTable]:
        return iter(self.tables.values())

    def provenance(self) -> dict[str, object]:
        files = sorted(
            str(self.tables[label].source.name)
            for label in self.consulted
            if self.tables[label].source is not None
        )
        return {"directory": str(self.directory) if self.directory else None, "files": files}


def load_tables(directory: Optional[Path]) -> TableRegistry:
    registry = TableRegistry(directory=directory)
    if directory is None or not directory.is_dir():
        if directory is not None:
            logger.warning("tables_dir_missing", path=str(directory))
        return registry
    for path in sorted(directory.glob(f"*{TABLE_SUFFIX}")):
        table = load_table(path)
        label = table.cartan_type.label
        if label in registry.tables:
            raise ClosureTableError(f"{path}: second table for {label}")
        registry.tables[label] = table
    return registry

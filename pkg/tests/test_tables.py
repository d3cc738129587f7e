import pytest

from vwu_checker.config import PACKAGED_TABLES_DIR
from vwu_checker.errors import ClosureTableError
from vwu_checker.lie.cartan import CartanType
from vwu_checker.orbits.tables import load_table, load_tables, parse_table

CHAIN = """
type G2
orbit 0 dim 0   # zero orbit
orbit G2(a1) dim 10
orbit G2 dim 12
cover 0 G2(a1)
cover G2(a1) G2
richardson - G2
richardson 1 G2(a1)
richardson 2 G2(a1)
richardson 1,2 0
"""


def test_parse_minimal_table() -> None:
    table = parse_table(CHAIN)
    assert table.cartan_type == CartanType("G", 2)
    assert table.labels == ["0", "G2(a1)", "G2"]
    assert table.leq("0", "G2")
    assert not table.leq("G2", "G2(a1)")
    assert str(table.induced_from_nodes(frozenset({0}))) == "G2(a1)"


def test_packaged_g2_table() -> None:
    table = load_table(PACKAGED_TABLES_DIR / "G2.txt")
    assert table.labels == ["0", "A1", "A1~", "G2(a1)", "G2"]
    assert table.leq("A1", "A1~")
    assert table.source is not None


@pytest.mark.parametrize(
    "text",
    [
        "",
        "orbit 0 dim 0",
        "type G2\ntype G2",
        "type Q7",
        CHAIN.replace("cover 0 G2(a1)", "cover 0 X"),
        CHAIN.replace("dim 10", "dim 0"),
        CHAIN.replace("richardson 2 G2(a1)\n", ""),
        CHAIN.replace("richardson 2 G2(a1)", "richardson 3 G2(a1)"),
        CHAIN.replace("richardson 1,2 0", "richardson 1,2 E8"),
        CHAIN + "cover G2 0\n",
        CHAIN + "orbit G2 dim 12\n",
        CHAIN + "richardson 1 G2\n",
        CHAIN + "bogus line\n",
        CHAIN.replace("dim 12", "dim twelve"),
    ],
)
def test_malformed_tables_rejected(text) -> None:
    with pytest.raises(ClosureTableError):
        parse_table(text)


def test_unknown_orbit_lookup() -> None:
    table = parse_table(CHAIN)
    with pytest.raises(ClosureTableError):
        table.leq("A1", "G2")
    with pytest.raises(ClosureTableError):
        table.orbit("A1")


def test_registry_records_consulted_tables(tmp_path) -> None:
    (tmp_path / "G2.txt").write_text(CHAIN, encoding="utf-8")
    registry = load_tables(tmp_path)
    assert "G2" in registry
    assert registry.provenance() == {"directory": str(tmp_path), "files": []}
    assert registry.get(CartanType("F", 4)) is None
    assert registry.get(CartanType("G", 2)) is not None
    assert registry.provenance()["files"] == ["G2.txt"]


def test_registry_rejects_duplicate_types(tmp_path) -> None:
    (tmp_path / "a.txt").write_text(CHAIN, encoding="utf-8")
    (tmp_path / "b.txt").write_text(CHAIN, encoding="utf-8")
    with pytest.raises(ClosureTableError):
        load_tables(tmp_path)


def test_missing_directory_gives_empty_registry(tmp_path) -> None:
    registry = load_tables(tmp_path / "absent")
    assert list(registry) == []
    assert list(load_tables(None)) == []

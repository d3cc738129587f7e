"""Nilpotent orbits: partitions for classical types, closure tables otherwise."""

from vwu_checker.orbits.induction import (
    bv_dual,
    closure_leq,
    dual_type,
    induce_zero,
    levi_from_nodes,
    orbit_from_coordinates,
    zero_orbit,
)
from vwu_checker.orbits.models import LeviDatum, OrbitLabel
from vwu_checker.orbits.richardson import richardson_oracle
from vwu_checker.orbits.tables import ClosureTable, TableRegistry, load_tables

__all__ = [
    "ClosureTable",
    "LeviDatum",
    "OrbitLabel",
    "TableRegistry",
    "bv_dual",
    "closure_leq",
    "dual_type",
    "induce_zero",
    "levi_from_nodes",
    "load_tables",
    "orbit_from_coordinates",
    "richardson_oracle",
    "zero_orbit",
]

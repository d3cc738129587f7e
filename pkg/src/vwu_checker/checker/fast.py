"""Sufficient check through triangular sequences, classical types only."""

from __future__ import annotations

import structlog

from vwu_checker.checker.models import TRIANGULAR, Verdict
from vwu_checker.combinatorics.triangular import RESIDUAL, decompose_concatenation, is_triangular
from vwu_checker.errors import InadmissibleTypeError
from vwu_checker.lie.rootsys import RootSystem, Weight

logger = structlog.get_logger(__name__)


def supports_triangular(system: RootSystem) -> bool:
    return (
        system.cartan_type is not None
        and system.cartan_type.is_classical
        and system.is_classical_bourbaki
    )


def check_vwu_triangular(system: RootSystem, lam: Weight) -> Verdict:
    """``True`` when every lattice-class block of the dominant form is triangular.

    A non-triangular block does not refute very weak unipotence, so the verdict
    is ``None`` (inconclusive) rather than ``False`` in that case.
    """

    if not supports_triangular(system):
        raise InadmissibleTypeError(
            "the triangular check needs a simple classical type in Bourbaki coordinates, "
            f"got {system.label}"
        )
    assert system.cartan_type is not None
    system.check_dimension(lam)
    dominant, _ = system.dominant_representative(lam)
    blocks = decompose_concatenation(dominant, system.cartan_type.family)
    failing = [block for block in blocks if block.kind == RESIDUAL or not is_triangular(block)]
    verdict = Verdict(
        is_vwu=None if failing else True,
        method=TRIANGULAR,
        system=system.label,
        dominant=dominant,
        blocks=blocks,
    )
    for block in failing:
        verdict.notes.append(f"block {block} in class {block.label} is not triangular")
    logger.debug(
        "triangular_checked",
        system=system.label,
        blocks=[f"{block.label}:{block}" for block in blocks],
        conclusive=verdict.conclusive,
    )
    return verdict

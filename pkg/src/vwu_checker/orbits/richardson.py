"""Matrix oracle for Richardson orbits of classical parabolics.

Nilradical elements are sampled in the defining representation and their
Jordan type is read off from exact ranks of powers.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
import structlog
from sympy import Matrix
from sympy.polys.matrices import DomainMatrix

from vwu_checker.combinatorics.partitions import Partition, dominance_leq, transpose
from vwu_checker.errors import UnsupportedFactorError
from vwu_checker.orbits.models import LeviDatum, OrbitLabel, natural_dimension

logger = structlog.get_logger(__name__)

ENTRY_BOUND = 5
MAX_RANK = 8


def _antidiagonal(size: int) -> np.ndarray:
    return np.fliplr(np.eye(size, dtype=np.int64))


def invariant_form(family: str, size: int) -> Optional[np.ndarray]:
    """Antidiagonal form preserved by the classical algebra; ``None`` for gl."""

    if family == "A":
        return None
    if family == "C":
        half = size // 2
        k = _antidiagonal(half)
        zero = np.zeros((half, half), dtype=np.int64)
        return np.block([[zero, k], [-k, zero]])
    return _antidiagonal(size)


def block_sizes(levi: LeviDatum) -> list[int]:
    """Diagonal block sizes ``(a_1..a_k, middle, a_k..a_1)`` of the parabolic."""

    if levi.ambient.family == "A":
        return list(levi.gl_blocks)
    middle = 2 * levi.classical_remainder + (1 if levi.ambient.family == "B" else 0)
    blocks = list(levi.gl_blocks)
    return blocks + ([middle] if middle else []) + blocks[::-1]


def _strict_block_upper_mask(sizes: list[int]) -> np.ndarray:
    owner = np.repeat(np.arange(len(sizes)), sizes)
    return owner[:, None] < owner[None, :]


def sample_nilradical(levi: LeviDatum, rng: np.random.Generator) -> np.ndarray:
    family = levi.ambient.family
    size = natural_dimension(levi.ambient)
    mask = _strict_block_upper_mask(block_sizes(levi))
    x = rng.integers(-ENTRY_BOUND, ENTRY_BOUND + 1, size=(size, size)) * mask
    form = invariant_form(family, size)
    if form is None:
        return x
    # X - J^{-1} X^T J lies in the algebra and stays block upper for symmetric blocks
    inverse = form if family != "C" else -form
    return x - inverse @ x.T @ form


def jordan_type(x: np.ndarray) -> Partition:
    """Jordan type of a nilpotent integer matrix via exact ranks of its powers."""

    size = x.shape[0]
    if size == 0:
        return Partition()
    base = DomainMatrix.from_Matrix(Matrix(x.tolist())).to_field()
    ranks = [size]
    power = base
    while ranks[-1] > 0:
        rank = power.rank()
        if rank == ranks[-1]:
            raise ValueError("matrix is not nilpotent")
        ranks.append(rank)
        power = power.matmul(base)
    column_heights = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)]
    return transpose(Partition.of(column_heights))


def richardson_oracle(levi: LeviDatum, trials: int = 50, seed: int = 0) -> OrbitLabel:
    """Dominance-maximal Jordan type over ``trials`` random nilradical elements."""

    ambient = levi.ambient
    if not ambient.is_classical:
        raise UnsupportedFactorError(ambient.label, "the matrix oracle needs a classical ambient")
    if ambient.rank > MAX_RANK:
        raise UnsupportedFactorError(ambient.label, f"the matrix oracle stops at rank {MAX_RANK}")
    rng = np.random.default_rng(seed)
    best: Optional[Partition] = None
    for trial in range(max(trials, 1)):
        current = jordan_type(sample_nilradical(levi, rng))
        if best is None or (current != best and dominance_leq(best, current)):
            best = current
        logger.debug("oracle_trial", levi=str(levi), trial=trial, jordan=str(current))
    assert best is not None
    return OrbitLabel(ambient, best)

"""Geometry of Weyl-orbit polytopes: hull membership and the set D°(λ)_+."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterator

import structlog

from vwu_checker.errors import NotDominantError, VWUError
from vwu_checker.lie.rootsys import RootSystem, Weight, WeylWord, combine, dot, sub

logger = structlog.get_logger(__name__)


@dataclass(frozen=True, slots=True)
class DCircClass:
    """One W_λ-orbit of D°(λ), seen through its W-dominant point.

    ``dominant`` is the W-dominant point δ, ``member`` a point of λ + ZΦ in the
    W-orbit of δ, and ``root_coefficients`` solve ``λ - δ = Σ k_i α_i``; they are
    integers only when δ lies in the coset of λ itself.
    """

    dominant: Weight
    member: Weight
    root_coefficients: tuple[Q, ...]
    coset: int = 0


@dataclass(slots=True)
class DCircSet:
    base: Weight
    classes: list[DCircClass] = field(default_factory=list)
    cosets: int = 1

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[DCircClass]:
        return iter(self.classes)

    @property
    def members_plus(self) -> list[Weight]:
        return [c.dominant for c in self.classes]


def _require_dominant(system: RootSystem, lam: Weight) -> None:
    if not system.is_dominant(lam):
        raise NotDominantError(f"λ = {lam} is not dominant for {system.label}")


def in_hull(system: RootSystem, gamma: Weight, lam: Weight) -> bool:
    """Membership of ``gamma`` in Conv(W·λ) by the dominance criterion."""

    system.check_dimension(gamma)
    _require_dominant(system, lam)
    gamma_plus, _ = system.dominant_representative(gamma)
    coefficients = system.root_coefficients(sub(lam, gamma_plus))
    return coefficients is not None and all(c >= 0 for c in coefficients)


def _coset_key(system: RootSystem, lam: Weight, mu: Weight) -> tuple[Q, ...]:
    return tuple(c - math.floor(c) for c in system.projected_root_coefficients(sub(lam, mu)))


def coset_representatives(system: RootSystem, lam: Weight) -> list[tuple[Weight, WeylWord]]:
    """One point ``wλ`` for each coset ``wλ + ZΦ``, with ``apply_word(w, λ) == wλ``.

    The search runs over cosets rather than orbit points: ``s_i`` moves a coset
    by ``<μ, α_i^vee>`` mod 1, which every point of the coset shares.
    """

    start = tuple(lam)
    found = [(start, ())]
    seen = {_coset_key(system, lam, start)}
    queue: deque[tuple[Weight, WeylWord]] = deque(found)
    while queue:
        mu, word = queue.popleft()
        for i in range(system.rank):
            if dot(system.simple_coroots[i], mu).denominator == 1:
                continue
            nxt = system.reflect(i, mu)
            key = _coset_key(system, lam, nxt)
            if key not in seen:
                seen.add(key)
                entry = (nxt, (i, *word))
                found.append(entry)
                queue.append(entry)
    return found


def enumerate_d_circ_plus(system: RootSystem, lam: Weight) -> DCircSet:
    """The W-dominant points of D°(λ) = (Conv(W·λ) ∖ W·λ) ∩ (λ + ZΦ).

    A W-dominant δ belongs to the hull exactly when ``λ - δ`` is a nonnegative
    combination of simple roots, so each coset ``wλ + ZΦ`` contributes the box
    of shifts ``k`` keeping ``λ - δ`` between zero and the coefficients of λ.
    """

    _require_dominant(system, lam)
    result = DCircSet(base=tuple(lam))
    rank = system.rank
    if rank == 0:
        return result
    bounds = system.projected_root_coefficients(lam)
    if min(bounds) < 0:
        raise VWUError(f"negative coefficient bound for dominant λ = {lam}")
    base_pairings = system.simple_pairings(lam)
    matrix = system.cartan_matrix

    cosets = coset_representatives(system, lam)
    result.cosets = len(cosets)
    for index, (mu, word) in enumerate(cosets):
        offset = system.projected_root_coefficients(sub(lam, mu))
        ranges = [
            range(math.ceil(-offset[i]), math.floor(bounds[i] - offset[i]) + 1)
            for i in range(rank)
        ]
        for k in itertools.product(*ranges):
            total = tuple(offset[i] + k[i] for i in range(rank))
            if not any(total):
                continue
            # <α_j^vee, λ - Σ t_i α_i> = p_j - Σ_i t_i <α_i, α_j^vee>
            if any(
                base_pairings[j] - sum(total[i] * matrix[i][j] for i in range(rank)) < 0
                for j in range(rank)
            ):
                continue
            delta = sub(lam, combine(total, system.simple_roots, system.ambient_dim))
            member = system.apply_word(tuple(reversed(word)), delta)
            result.classes.append(
                DCircClass(dominant=delta, member=member, root_coefficients=total, coset=index)
            )
    result.classes.sort(key=lambda c: (sum(c.root_coefficients), c.root_coefficients))
    logger.debug("dcirc_enumerated", system=system.label, size=len(result), cosets=len(cosets))
    return result


def euclidean_norm_sq(system: RootSystem, mu: Weight) -> Q:
    """Squared Euclidean norm in Bourbaki coordinates."""

    if not system.is_classical_bourbaki:
        raise VWUError(f"norms are only defined on classical Bourbaki data, not {system.label}")
    system.check_dimension(mu)
    return dot(mu, mu)


def orbit_points(system: RootSystem, lam: Weight) -> set[Weight]:
    """Breadth-first enumeration of the Weyl orbit of ``lam``."""

    start = tuple(lam)
    seen = {start}
    queue = deque([start])
    while queue:
        mu = queue.popleft()
        for i in range(system.rank):
            nxt = system.reflect(i, mu)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen

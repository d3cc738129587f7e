"""Brute-force reference decision used to cross-check the direct check.

Nothing here relies on the dominance description of the hull, on coset words
or on the factor split of D°: the Weyl orbit is enumerated in full, candidates
are all lattice points of ``λ + ZΦ`` in a bounding box, hull membership is an
exact linear program, and each candidate's orbit data is recomputed from its
own integral coroots.  One point per W_λ-orbit is kept, the one on which every
positive integral coroot is nonnegative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

import structlog
from sympy import Matrix, Rational, eye, zeros
from sympy.solvers.simplex import InfeasibleLPError, linprog

from vwu_checker.checker.direct import factor_orbit
from vwu_checker.errors import CheckerInvariantError
from vwu_checker.lie.rootsys import RootSystem, Weight, combine, dot, sub
from vwu_checker.lie.weightgeom import orbit_points
from vwu_checker.orbits.induction import closure_leq
from vwu_checker.orbits.models import OrbitLabel
from vwu_checker.orbits.tables import TableRegistry

logger = structlog.get_logger(__name__)


@dataclass(slots=True)
class OracleResult:
    is_vwu: bool
    dominant: Weight
    candidates: int = 0
    members: list[Weight] = field(default_factory=list)
    witnesses: list[tuple[Weight, tuple[OrbitLabel, ...], tuple[OrbitLabel, ...]]] = field(
        default_factory=list
    )


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def lp_in_hull(point: Sequence[Fraction], vertices: Sequence[Sequence[Fraction]]) -> bool:
    """Exact LP test for ``point`` in the convex hull of ``vertices``."""

    count = len(vertices)
    dimension = len(point)
    a_eq = Matrix(
        [[_rational(vertices[v][d]) for v in range(count)] for d in range(dimension)]
        + [[1] * count]
    )
    b_eq = Matrix([_rational(x) for x in point] + [1])
    try:
        linprog(zeros(1, count), A=-eye(count), b=zeros(count, 1), A_eq=a_eq, b_eq=b_eq)
    except InfeasibleLPError:
        return False
    return True


def invariant_norm(system: RootSystem, mu: Weight) -> Fraction:
    """``Σ_{α>0} <μ, α^vee>²``, a W-invariant form in any coordinates."""

    return sum((dot(p.coroot, mu) ** 2 for p in system.positive), Fraction(0))


def _orbit_map(
    system: RootSystem, mu: Weight, tables: Optional[TableRegistry]
) -> dict[frozenset, OrbitLabel]:
    decomposition = system.integral_coroot_subsystem(mu)
    return {
        frozenset(factor.system.simple_coroots): factor_orbit(factor, mu, tables)
        for factor in decomposition.factors
    }


def brute_force_vwu(
    system: RootSystem, lam: Weight, tables: Optional[TableRegistry] = None
) -> OracleResult:
    dominant, _ = system.dominant_representative(lam)
    orbit = sorted(orbit_points(system, dominant))
    result = OracleResult(is_vwu=True, dominant=dominant)

    ranges = []
    for i in range(system.rank):
        spread = [system.projected_root_coefficients(sub(dominant, v))[i] for v in orbit]
        ranges.append(range(math.ceil(min(spread)), math.floor(max(spread)) + 1))

    orbit_set = set(orbit)
    lambda_norm = invariant_norm(system, dominant)
    integral = [p.coroot for p in system.positive if dot(p.coroot, dominant).denominator == 1]
    lambda_orbits = _orbit_map(system, dominant, tables)
    keys = sorted(lambda_orbits, key=lambda key: sorted(key))
    for coefficients in product(*ranges):
        gamma = sub(dominant, combine(coefficients, system.simple_roots, system.ambient_dim))
        result.candidates += 1
        if gamma in orbit_set:
            continue
        # strict convexity of the norm: hull points off the vertices are strictly shorter
        if invariant_norm(system, gamma) >= lambda_norm:
            continue
        if any(dot(coroot, gamma) < 0 for coroot in integral):
            continue
        if not lp_in_hull(gamma, orbit):
            continue
        result.members.append(gamma)
        gamma_orbits = _orbit_map(system, gamma, tables)
        if set(gamma_orbits) != set(lambda_orbits):
            raise CheckerInvariantError(
                f"γ = {gamma} and λ = {dominant} have different integral coroot systems"
            )
        if all(closure_leq(lambda_orbits[key], gamma_orbits[key], tables) for key in keys):
            result.witnesses.append(
                (
                    gamma,
                    tuple(lambda_orbits[key] for key in keys),
                    tuple(gamma_orbits[key] for key in keys),
                )
            )
    result.is_vwu = not result.witnesses
    logger.debug(
        "oracle_checked",
        system=system.label,
        candidates=result.candidates,
        members=len(result.members),
        witnesses=len(result.witnesses),
    )
    return result

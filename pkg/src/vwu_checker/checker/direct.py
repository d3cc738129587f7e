"""Direct orbit-comparison check of very weak unipotence."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

import structlog

from vwu_checker.checker.models import DIRECT, ORBIT_CRITERION_NOTE, FactorReport, Verdict, Witness
from vwu_checker.errors import CheckerInvariantError
from vwu_checker.lie.rootsys import (
    RootSystem,
    SubsystemDecomposition,
    SubsystemFactor,
    Weight,
    dot,
    format_vector,
)
from vwu_checker.lie.weightgeom import enumerate_d_circ_plus
from vwu_checker.metrics import record_dcirc
from vwu_checker.orbits.induction import closure_leq, induce_zero, levi_from_nodes
from vwu_checker.orbits.models import OrbitLabel
from vwu_checker.orbits.tables import TableRegistry

logger = structlog.get_logger(__name__)


def factor_orbit(
    factor: SubsystemFactor, mu: Weight, tables: Optional[TableRegistry] = None
) -> OrbitLabel:
    """O∨_μ in the factor: induced from the zero orbit of the Levi where μ vanishes."""

    levi = levi_from_nodes(factor.cartan_type, factor.zero_nodes(mu))
    return induce_zero(levi, tables)


def integral_dominant(decomposition: SubsystemDecomposition, mu: Weight) -> Weight:
    """The W_λ-dominant point of the W_λ-orbit of ``mu``.

    Factors are mutually orthogonal, so each one is made dominant in turn.
    """

    for factor in decomposition.factors:
        mu, _ = factor.system.dominant_representative(mu)
    return mu


def _norm_guard(
    system: RootSystem, gamma: Weight, lam: Weight
) -> tuple[Optional[Fraction], Optional[Fraction]]:
    if not system.is_classical_bourbaki:
        return None, None
    norm_gamma, norm_lam = dot(gamma, gamma), dot(lam, lam)
    if norm_gamma >= norm_lam:
        raise CheckerInvariantError(
            f"D° member {format_vector(gamma)} has |γ|² = {norm_gamma} >= |λ|² = {norm_lam}"
        )
    return norm_gamma, norm_lam


def _factor_report(
    factor: SubsystemFactor,
    dominant: Weight,
    orbit_lambda: OrbitLabel,
    tables: Optional[TableRegistry],
) -> FactorReport:
    local = enumerate_d_circ_plus(factor.system, dominant)
    record_dcirc(factor.label, len(local))
    report = FactorReport(
        label=factor.label,
        simple_coroots=factor.system.simple_coroots,
        pairings=factor.pairings,
        zero_nodes=tuple(sorted(factor.zero_nodes(dominant))),
        orbit_lambda=orbit_lambda,
        dcirc_size=len(local),
    )
    report.local_witnesses = sum(
        1
        for member in local
        if closure_leq(orbit_lambda, factor_orbit(factor, member.dominant, tables), tables)
    )
    return report


def check_vwu_direct(
    system: RootSystem,
    lam: Weight,
    tables: Optional[TableRegistry] = None,
    *,
    first_failure: bool = False,
) -> Verdict:
    """Decide very weak unipotence of ``lam`` by comparing orbits over all of D°(λ).

    Every factor's O∨_λ is computed before any enumeration, so an exceptional
    factor without table data fails fast with ``UnsupportedFactorError``.  A
    class of D°(λ) is a witness when its W_λ-dominant member gives an orbit
    containing O∨_λ in its closure on every factor at once.  The factor reports
    also carry the check restricted to each factor's own lattice; a factor that
    fails there always yields a witness of the full check.
    """

    system.check_dimension(lam)
    dominant, _ = system.dominant_representative(lam)
    decomposition = system.integral_coroot_subsystem(dominant)
    factors = decomposition.factors
    orbits = tuple(factor_orbit(factor, dominant, tables) for factor in factors)
    labels = tuple(factor.label for factor in factors)

    verdict = Verdict(is_vwu=True, method=DIRECT, system=system.label, dominant=dominant)
    verdict.notes.append(ORBIT_CRITERION_NOTE)
    verdict.factor_reports = [
        _factor_report(factor, dominant, orbit, tables) for factor, orbit in zip(factors, orbits)
    ]

    dcirc = enumerate_d_circ_plus(system, dominant)
    record_dcirc(system.label, len(dcirc))
    verdict.dcirc_size = len(dcirc)
    verdict.cosets = dcirc.cosets
    for cls in dcirc:
        norm_gamma, norm_lam = _norm_guard(system, cls.dominant, dominant)
        member = integral_dominant(decomposition, cls.member)
        orbits_gamma = tuple(factor_orbit(factor, member, tables) for factor in factors)
        if not all(closure_leq(ol, og, tables) for ol, og in zip(orbits, orbits_gamma)):
            continue
        verdict.witnesses.append(
            Witness(
                gamma=cls.dominant,
                member=member,
                factors=labels,
                orbits_lambda=orbits,
                orbits_gamma=orbits_gamma,
                root_coefficients=cls.root_coefficients,
                norm_sq_gamma=norm_gamma,
                norm_sq_lambda=norm_lam,
            )
        )
        logger.info(
            "witness_found",
            system=system.label,
            gamma=format_vector(cls.dominant),
            member=format_vector(member),
            orbits_lambda=[str(o) for o in orbits],
            orbits_gamma=[str(o) for o in orbits_gamma],
        )
        if first_failure:
            verdict.notes.append("stopped at the first failing γ")
            break

    failing = [report.label for report in verdict.factor_reports if not report.local_vwu]
    if failing and not verdict.witnesses:
        raise CheckerInvariantError(
            f"factors {failing} of {system.label} fail on their own lattices "
            f"but λ = {format_vector(dominant)} has no witness"
        )
    verdict.is_vwu = not verdict.witnesses
    if verdict.witnesses and not failing:
        verdict.notes.append(
            "every factor passes on its own lattice; the witnesses come from other cosets "
            "or from comparing the factors jointly"
        )
    if any(w.equal_orbits for w in verdict.witnesses):
        verdict.notes.append(
            "some witnesses have O∨_γ = O∨_λ; strict containment would exclude them"
        )
    return verdict

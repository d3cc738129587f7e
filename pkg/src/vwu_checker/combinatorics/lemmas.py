"""Exhaustive verification of the combinatorial lemmas behind the fast check."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import structlog

from vwu_checker.combinatorics.partitions import (
    Partition,
    collapse,
    dominance_leq,
    partitions_of,
    star_partitions,
    tilde,
    transpose,
)
from vwu_checker.combinatorics.triangular import (
    EPS_CHOICES,
    SortedSequence,
    norm_shell,
    sequence_partition,
    v_eps,
    v_half,
    v_quarter,
    v_z,
)

logger = structlog.get_logger(__name__)

MAX_REPORTED_VIOLATIONS = 20


@dataclass(slots=True)
class LemmaResult:
    name: str
    cases: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, message: str) -> None:
        if len(self.violations) < MAX_REPORTED_VIOLATIONS:
            self.violations.append(message)
        else:
            logger.debug("violation_dropped", lemma=self.name, detail=message)


def _norm(v: SortedSequence) -> Fraction:
    return v.norm_sq


def check_monotonicity_a(
    n_max: int = 8, eps_values: Sequence[Fraction] = EPS_CHOICES
) -> LemmaResult:
    """p' ≤ p implies |v_ε(p)| ≤ |v_ε(p')|, strictly when ε < 0 and p' ≠ p."""

    result = LemmaResult("monotonicity-A")
    for n in range(1, n_max + 1):
        parts = list(partitions_of(n))
        for eps in eps_values:
            norms = {p: _norm(v_eps(p, eps)) for p in parts}
            for p in parts:
                for q in parts:
                    if q == p or not dominance_leq(q, p):
                        continue
                    result.cases += 1
                    if norms[p] > norms[q] or (eps < 0 and norms[p] == norms[q]):
                        result.fail(
                            f"ε={eps}: {q} ≤ {p} but |v(p)|²={norms[p]}, |v(p')|²={norms[q]}"
                        )
    logger.info(
        "lemma_checked",
        lemma=result.name,
        cases=result.cases,
        violations=len(result.violations),
    )
    return result


def check_monotonicity_bcd(two_n_max: int = 12, n_max: int = 8) -> LemmaResult:
    """The Z branch on P**(2n) × P*(2n) and the half and quarter branches on P(n)."""

    result = LemmaResult("monotonicity-BCD")
    for n in range(1, two_n_max // 2 + 1):
        double = star_partitions(n, double_star=True)
        single = star_partitions(n, double_star=False)
        norms = {s.underlying: _norm(v_z(s)) for s in single}
        for p in double:
            for q in single:
                if q.underlying == p.underlying or not dominance_leq(q.underlying, p.underlying):
                    continue
                result.cases += 1
                if norms[p.underlying] > norms[q.underlying]:
                    result.fail(f"Z: {q.underlying} ≤ {p.underlying} but norms decrease")
    for name, mapping in (("half", v_half), ("quarter", v_quarter)):
        for n in range(1, n_max + 1):
            parts = list(partitions_of(n))
            norms = {p: _norm(mapping(p)) for p in parts}
            for p in parts:
                for q in parts:
                    if q == p or not dominance_leq(q, p):
                        continue
                    result.cases += 1
                    if norms[p] > norms[q]:
                        result.fail(f"{name}: {q} ≤ {p} but norms decrease")
    logger.info(
        "lemma_checked",
        lemma=result.name,
        cases=result.cases,
        violations=len(result.violations),
    )
    return result


def _separation(
    result: LemmaResult,
    triangular: Iterable[SortedSequence],
) -> None:
    for v in triangular:
        p = sequence_partition(v)
        for w in norm_shell(v.kind, len(v), v.norm_sq, v.eps):
            result.cases += 1
            if dominance_leq(sequence_partition(w), p):
                result.fail(f"{v.label}: |{w}| < |{v}| but p(v') ≤ p(v)")


def check_triangular_separation(
    length_max: int = 6, eps_values: Sequence[Fraction] = EPS_CHOICES
) -> LemmaResult:
    """For triangular v and same-class v' with |v'| < |v|: p(v') is not ≤ p(v)."""

    result = LemmaResult("triangular-separation")
    for n in range(1, length_max + 1):
        shapes = list(partitions_of(n))
        for eps in eps_values:
            _separation(result, (v_eps(p, eps) for p in shapes))
        _separation(result, (v_z(s) for s in star_partitions(n, double_star=True)))
        _separation(result, (v_half(p) for p in shapes))
        _separation(result, (v_quarter(p) for p in shapes))
    logger.info(
        "lemma_checked",
        lemma=result.name,
        cases=result.cases,
        violations=len(result.violations),
    )
    return result


def check_type_c_injectivity(n_max: int = 6) -> LemmaResult:
    """(p^t)_C ≤ (p'^t)_C implies p' ≤ p on P**(2n); tilde undoes the collapse."""

    result = LemmaResult("type-C-injectivity")
    for n in range(1, n_max + 1):
        members = [s.underlying for s in star_partitions(n, double_star=True)]
        collapsed: dict[Partition, Partition] = {p: collapse(transpose(p), "C") for p in members}
        for p in members:
            result.cases += 1
            restored = tilde(collapsed[p])
            if restored != transpose(p):
                result.fail(f"tilde({collapsed[p]}) = {restored}, expected {transpose(p)}")
            for q in members:
                result.cases += 1
                if dominance_leq(collapsed[p], collapsed[q]) and not dominance_leq(q, p):
                    result.fail(f"({p}^t)_C ≤ ({q}^t)_C but {q} is not ≤ {p}")
    logger.info(
        "lemma_checked",
        lemma=result.name,
        cases=result.cases,
        violations=len(result.violations),
    )
    return result


LemmaSuite = Callable[[], LemmaResult]


def lemma_suites(quick: bool = False) -> list[LemmaSuite]:
    if quick:
        return [
            lambda: check_monotonicity_a(5),
            lambda: check_monotonicity_bcd(8, 5),
            lambda: check_triangular_separation(3),
            lambda: check_type_c_injectivity(4),
        ]
    return [
        check_monotonicity_a,
        check_monotonicity_bcd,
        check_triangular_separation,
        check_type_c_injectivity,
    ]


def run_lemma_suites(quick: bool = False) -> list[LemmaResult]:
    return [suite() for suite in lemma_suites(quick)]


__all__ = [
    "LemmaResult",
    "check_monotonicity_a",
    "check_monotonicity_bcd",
    "check_triangular_separation",
    "check_type_c_injectivity",
    "run_lemma_suites",
]

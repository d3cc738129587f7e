"""Checks of the Bernstein presentation and of the intertwiner inverse pairs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional

import numpy as np
import structlog

from vwu_checker.hecke.algebra import AffineHeckeAlgebra, HeckeElement, specialize_at_one
from vwu_checker.hecke.laurent import U, LaurentPoly
from vwu_checker.metrics import record_hecke_check

logger = structlog.get_logger(__name__)

SHRIEK = "shriek"
STAR = "star"


@dataclass(slots=True)
class CheckOutcome:
    check: str
    passed: bool
    detail: str = ""


@dataclass(slots=True)
class VerificationReport:
    system: str
    outcomes: list[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)

    @property
    def failures(self) -> list[CheckOutcome]:
        return [outcome for outcome in self.outcomes if not outcome.passed]

    def summary(self) -> dict[str, dict[str, int]]:
        counts: dict[str, Counter[str]] = {}
        for outcome in self.outcomes:
            counts.setdefault(outcome.check, Counter())["pass" if outcome.passed else "fail"] += 1
        return {check: dict(counter) for check, counter in counts.items()}

    def record(self, check: str, passed: bool, detail: str = "") -> None:
        self.outcomes.append(CheckOutcome(check, passed, detail))
        record_hecke_check(check, passed)
        if not passed:
            logger.warning("hecke_check_failed", system=self.system, check=check, detail=detail)


def random_element(
    algebra: AffineHeckeAlgebra,
    rng: np.random.Generator,
    *,
    terms: int = 3,
    max_length: int = 3,
    mu_bound: int = 2,
) -> HeckeElement:
    """A sum of at most ``terms`` monomials ``±c u^e t_μ T_w``."""

    keys = algebra.weyl.elements(max_length)
    result = algebra.zero()
    for _ in range(int(rng.integers(1, terms + 1))):
        mu = tuple(int(x) for x in rng.integers(-mu_bound, mu_bound + 1, size=algebra.rank))
        key = keys[int(rng.integers(0, len(keys)))]
        coefficient = int(rng.choice([-2, -1, 1, 2]))
        exponent = int(rng.integers(-1, 2))
        result = result + algebra.basis(mu, key, LaurentPoly.monomial(exponent, coefficient))
    return result


def _generators_along(algebra: AffineHeckeAlgebra, word: Iterable[int]) -> HeckeElement:
    result = algebra.one()
    for index in word:
        result = result * algebra.basis(algebra.zero_weight, algebra.weyl.key((index,)))
    return result


def verify_presentation(
    algebra: AffineHeckeAlgebra,
    *,
    depth: int = 4,
    samples: int = 500,
    mu_bound: int = 3,
    seed: int = 0,
) -> VerificationReport:
    """Identity, quadratic, braid, Bernstein, associativity and specialization checks.

    Failures are collected in the report, nothing is raised.
    """

    report = VerificationReport(system=algebra.label)
    weyl = algebra.weyl
    one = algebra.one()

    report.record("identity", algebra.T(()) == one and algebra.t(algebra.zero_weight) == one)

    for i in range(algebra.rank):
        s = algebra.T((i,))
        expected = s * (U - 1) + algebra.u()
        report.record("quadratic", s * s == expected, f"s{i + 1}")

    for key in weyl.elements(depth):
        canonical = algebra.basis(algebra.zero_weight, key)
        words = list(weyl.reduced_words(key))
        agree = all(_generators_along(algebra, word) == canonical for word in words)
        label = ",".join(str(i + 1) for i in weyl.canonical_word(key)) or "e"
        report.record("braid", agree, f"w={label}, {len(words)} reduced words")

    for i in range(algebra.rank):
        s = algebra.T((i,))
        alpha = algebra.simple_roots[i]
        for mu in product(range(-mu_bound, mu_bound + 1), repeat=algebra.rank):
            k = int(algebra.system.pair(algebra.system.simple_coroots[i], mu))
            reflected = tuple(m - k * a for m, a in zip(mu, alpha))
            lhs = algebra.t(reflected) * s * algebra.t(tuple(-m for m in mu))
            # (lhs - T_s)(1 - t_α) must equal (1 - u)(1 - t_{-kα})
            rhs = (one - algebra.t(tuple(-k * a for a in alpha))) * (1 - U)
            passed = (lhs - s) * (one - algebra.t(alpha)) == rhs
            report.record("bernstein", passed, "" if passed else f"s{i + 1}, mu={list(mu)}")

    rng = np.random.default_rng(seed)
    for _ in range(samples):
        a, b, c = (random_element(algebra, rng) for _ in range(3))
        passed = (a * b) * c == a * (b * c)
        report.record("associativity", passed, "" if passed else f"{a} | {b} | {c}")
    for _ in range(samples):
        a, b = random_element(algebra, rng), random_element(algebra, rng)
        passed = specialize_at_one(a * b) == specialize_at_one(a) * specialize_at_one(b)
        report.record("specialization", passed, "" if passed else f"{a} | {b}")

    logger.info(
        "hecke_presentation_checked",
        system=algebra.label,
        checks=len(report.outcomes),
        failures=len(report.failures),
    )
    return report


def intertwiner_class(
    algebra: AffineHeckeAlgebra, kind: str, index: int, k: int
) -> HeckeElement:
    if kind == SHRIEK:
        return algebra.shriek(index, k)
    if kind == STAR:
        return algebra.star(index, k)
    raise ValueError(f"unknown intertwiner kind {kind!r}")


@dataclass(slots=True)
class InversePair:
    k: int
    product: HeckeElement
    u_power: Optional[int]

    @property
    def is_unit(self) -> bool:
        return self.u_power is not None


def _unit_power(element: HeckeElement) -> Optional[int]:
    """``e`` when ``element == u^e``, else ``None``."""
    items = list(element.items())
    if len(items) != 1:
        return None
    (mu, key), coeff = items[0]
    if any(mu) or key != element.algebra.weyl.identity:
        return None
    pairs = list(coeff)
    if len(pairs) != 1 or pairs[0][1] != 1:
        return None
    return pairs[0][0]


def verify_inverse_pairs(
    algebra: AffineHeckeAlgebra, index: int, k_range: Iterable[int]
) -> tuple[VerificationReport, list[InversePair]]:
    """Multiply the shriek class at pairing ``-k`` by the star class at ``k``.

    A pair passes when the product is a power of ``u``; the exponent is
    reported as measured.  The rank-0 datum has no reflections and reports the
    single product ``1 * 1``.
    """

    report = VerificationReport(system=algebra.label)
    pairs: list[InversePair] = []
    if algebra.rank == 0:
        product_ = algebra.one() * algebra.one()
        pairs.append(InversePair(0, product_, _unit_power(product_)))
    else:
        for k in k_range:
            product_ = algebra.shriek(index, -k) * algebra.star(index, k)
            pairs.append(InversePair(k, product_, _unit_power(product_)))
    for pair in pairs:
        detail = f"k={pair.k}: {pair.product}"
        if pair.u_power is not None:
            detail += f" (u-power {pair.u_power})"
        report.record("inverse_pair", pair.is_unit, detail)
    return report, pairs

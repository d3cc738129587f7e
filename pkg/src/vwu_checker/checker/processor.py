"""Checkers and the processor that runs requests through them."""

from __future__ import annotations

import abc
import time
from typing import Any, Mapping, Optional, Sequence

import structlog

from vwu_checker.checker.direct import check_vwu_direct
from vwu_checker.checker.fast import check_vwu_triangular, supports_triangular
from vwu_checker.checker.models import BOTH, Verdict
from vwu_checker.config import get_settings, settings_dict
from vwu_checker.errors import CheckerInvariantError
from vwu_checker.lie.normalization import CheckRequest, WeightNormalizer
from vwu_checker.lie.rootsys import RootSystem, Weight
from vwu_checker.metrics import record_check, record_witnesses
from vwu_checker.orbits.tables import TableRegistry, load_tables
from vwu_checker.reports import CheckReport, build_check_report

logger = structlog.get_logger(__name__)


class Checker(abc.ABC):
    """Base interface for very-weak-unipotence checks."""

    name: str

    def __init__(self, name: str) -> None:
        self.name = name

    @abc.abstractmethod
    def check(self, system: RootSystem, lam: Weight) -> Verdict:
        """Decide one λ and return a verdict."""


class DirectChecker(Checker):
    def __init__(
        self, tables: Optional[TableRegistry] = None, *, first_failure: bool = False
    ) -> None:
        super().__init__(name="direct")
        self.tables = tables
        self.first_failure = first_failure

    def check(self, system: RootSystem, lam: Weight) -> Verdict:
        return check_vwu_direct(system, lam, self.tables, first_failure=self.first_failure)


class TriangularChecker(Checker):
    def __init__(self) -> None:
        super().__init__(name="triangular")

    def check(self, system: RootSystem, lam: Weight) -> Verdict:
        return check_vwu_triangular(system, lam)


class AutoChecker(Checker):
    """Fast check where it applies, the direct check whenever it is inconclusive."""

    def __init__(self, fast: Checker, direct: Checker) -> None:
        super().__init__(name="auto")
        self._fast = fast
        self._direct = direct

    def check(self, system: RootSystem, lam: Weight) -> Verdict:
        if supports_triangular(system):
            fast = self._fast.check(system, lam)
            if fast.conclusive:
                return fast
            verdict = self._direct.check(system, lam)
            verdict.blocks = fast.blocks
            verdict.notes.append("triangular check inconclusive; decided by the direct check")
            return verdict
        return self._direct.check(system, lam)


class CompositeChecker(Checker):
    """Run the fast and direct checks and require them to be consistent."""

    def __init__(self, fast: Checker, direct: Checker) -> None:
        super().__init__(name="both")
        self._fast = fast
        self._direct = direct

    def check(self, system: RootSystem, lam: Weight) -> Verdict:
        fast = self._fast.check(system, lam)
        verdict = self._direct.check(system, lam)
        # triangularity is only sufficient, so a direct True with an inconclusive fast check is fine
        if fast.is_vwu is True and verdict.is_vwu is False:
            raise CheckerInvariantError(
                f"λ = {verdict.dominant} in {system.label} is triangular "
                f"but has {len(verdict.witnesses)} witnesses"
            )
        verdict.method = BOTH
        verdict.blocks = fast.blocks
        verdict.notes.append(
            "triangular check: " + ("true" if fast.is_vwu else "inconclusive")
        )
        return verdict


def make_checker(
    mode: str, tables: Optional[TableRegistry] = None, *, first_failure: bool = False
) -> Checker:
    direct = DirectChecker(tables, first_failure=first_failure)
    if mode == "direct":
        return direct
    if mode == "triangular":
        return TriangularChecker()
    if mode == "both":
        return CompositeChecker(TriangularChecker(), direct)
    if mode == "auto":
        return AutoChecker(TriangularChecker(), direct)
    raise ValueError(f"unknown mode {mode!r}")


def check_vwu(
    system: RootSystem,
    lam: Weight,
    mode: str = "auto",
    tables: Optional[TableRegistry] = None,
    *,
    first_failure: bool = False,
) -> Verdict:
    return make_checker(mode, tables, first_failure=first_failure).check(system, lam)


class CheckProcessor:
    """Normalize, check, record metrics and assemble reports."""

    def __init__(
        self,
        *,
        normalizer: Optional[WeightNormalizer] = None,
        tables: Optional[TableRegistry] = None,
        first_failure: Optional[bool] = None,
    ) -> None:
        settings = get_settings()
        self.normalizer = normalizer or WeightNormalizer()
        self.tables = tables if tables is not None else load_tables(settings.resolved_tables_dir)
        self.first_failure = settings.first_failure if first_failure is None else first_failure
        self._checkers: dict[str, Checker] = {}

    def checker_for(self, mode: str) -> Checker:
        if mode not in self._checkers:
            self._checkers[mode] = make_checker(mode, self.tables, first_failure=self.first_failure)
        return self._checkers[mode]

    def process(self, request: CheckRequest) -> Verdict:
        verdict = self.checker_for(request.mode).check(request.system, request.weight)
        record_check(verdict.method, verdict.is_vwu)
        record_witnesses(len(verdict.witnesses))
        logger.info(
            "check_completed",
            system=request.type_label,
            mode=request.mode,
            method=verdict.method,
            verdict=verdict.is_vwu,
            witnesses=len(verdict.witnesses),
        )
        return verdict

    def run(self, request: CheckRequest, *, command: str = "check") -> CheckReport:
        started = time.perf_counter()
        # provenance is per record
        self.tables.consulted.clear()
        verdict = self.process(request)
        return build_check_report(
            request,
            verdict,
            command=command,
            elapsed_seconds=time.perf_counter() - started,
            tables=self.tables.provenance(),
            config=settings_dict(),
        )

    def run_text(
        self,
        type_label: str,
        values: Sequence[Any] | str,
        *,
        coordinates: Optional[str] = None,
        mode: Optional[str] = None,
    ) -> CheckReport:
        normalization = self.normalizer.normalize(
            type_label, values, coordinates=coordinates, mode=mode
        )
        return self.run(normalization.request)

    def run_record(self, raw: Mapping[str, Any]) -> CheckReport:
        normalization = self.normalizer.normalize_record(raw)
        if normalization.discarded_fields:
            logger.debug("record_fields_ignored", fields=sorted(normalization.discarded_fields))
        return self.run(normalization.request, command="check --batch")

"""Report models printed by the command-line interface.

Every report serializes to JSON with rationals written as strings (``"1/2"``)
and validates back through ``model_validate_json``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from pydantic import BaseModel, Field

from vwu_checker.checker.models import FactorReport, Verdict, Witness
from vwu_checker.combinatorics.triangular import SortedSequence
from vwu_checker.lie.normalization import CheckRequest


def package_version() -> str:
    import vwu_checker

    return str(vwu_checker.__version__)


def rational(value: Fraction | int) -> str:
    return str(Fraction(value))


def optional_rational(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else rational(value)


def rationals(values: Iterable[Fraction | int]) -> list[str]:
    return [rational(v) for v in values]


def _bracket(values: Sequence[str]) -> str:
    return "(" + ", ".join(values) + ")"


class ReportBase(BaseModel):
    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    elapsed_seconds: float = 0.0
    version: str = Field(default_factory=package_version)
    tables: dict[str, Any] = Field(default_factory=dict)
    config: dict[str, Any] = Field(default_factory=dict)

    def render_text(self) -> str:
        return self.model_dump_json(indent=2)


class WitnessModel(BaseModel):
    gamma: list[str]
    member: list[str]
    factors: list[str]
    orbits_lambda: list[str]
    orbits_gamma: list[str]
    root_coefficients: list[str]
    norm_sq_gamma: Optional[str] = None
    norm_sq_lambda: Optional[str] = None
    equal_orbits: bool = False

    @classmethod
    def from_witness(cls, witness: Witness) -> WitnessModel:
        return cls(
            gamma=rationals(witness.gamma),
            member=rationals(witness.member),
            factors=list(witness.factors),
            orbits_lambda=[str(o) for o in witness.orbits_lambda],
            orbits_gamma=[str(o) for o in witness.orbits_gamma],
            root_coefficients=rationals(witness.root_coefficients),
            norm_sq_gamma=optional_rational(witness.norm_sq_gamma),
            norm_sq_lambda=optional_rational(witness.norm_sq_lambda),
            equal_orbits=witness.equal_orbits,
        )


class FactorModel(BaseModel):
    label: str
    simple_coroots: list[list[str]]
    pairings: list[str]
    zero_nodes: list[int]
    orbit_lambda: Optional[str] = None
    dcirc_size: int = 0
    local_witnesses: int = 0
    local_verdict: bool = True

    @classmethod
    def from_factor(cls, factor: FactorReport) -> FactorModel:
        return cls(
            label=factor.label,
            simple_coroots=[rationals(c) for c in factor.simple_coroots],
            pairings=rationals(factor.pairings),
            zero_nodes=[i + 1 for i in factor.zero_nodes],
            orbit_lambda=None if factor.orbit_lambda is None else str(factor.orbit_lambda),
            dcirc_size=factor.dcirc_size,
            local_witnesses=factor.local_witnesses,
            local_verdict=factor.local_vwu,
        )


class BlockModel(BaseModel):
    kind: str
    values: list[str]

    @classmethod
    def from_block(cls, block: SortedSequence) -> BlockModel:
        return cls(kind=block.label, values=rationals(block.values))


class CheckReport(ReportBase):
    verdict: Optional[bool]
    method: str
    system: str
    dominant: list[str]
    factors: list[FactorModel] = Field(default_factory=list)
    witnesses: list[WitnessModel] = Field(default_factory=list)
    blocks: list[BlockModel] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)
    dcirc_size: Optional[int] = None
    cosets: int = 1

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict else 1

    def render_text(self) -> str:
        verdict = "inconclusive" if self.verdict is None else str(self.verdict).lower()
        lines = [
            f"type: {self.system}",
            f"lambda: {_bracket(self.dominant)}",
            f"verdict: {verdict}",
            f"method: {self.method}",
        ]
        for block in self.blocks:
            lines.append(f"block {block.kind}: {_bracket(block.values)}")
        for factor in self.factors:
            nodes = ",".join(str(i) for i in factor.zero_nodes) or "-"
            local = "true" if factor.local_verdict else "false"
            lines.append(
                f"factor {factor.label}: zero nodes {nodes}, O_lambda {factor.orbit_lambda}, "
                f"local |D°+| {factor.dcirc_size}, local verdict {local}"
            )
        if self.dcirc_size is not None:
            lines.append(f"|D°+| {self.dcirc_size} over {self.cosets} cosets")
        for witness in self.witnesses:
            marker = " (equal orbits)" if witness.equal_orbits else ""
            orbits = "; ".join(
                f"{label}: {ol} <= {og}"
                for label, ol, og in zip(
                    witness.factors, witness.orbits_lambda, witness.orbits_gamma
                )
            )
            lines.append(
                f"witness {_bracket(witness.gamma)} via {_bracket(witness.member)}: "
                f"{orbits or 'no integral coroots'}{marker}"
            )
        lines.extend(f"note: {note}" for note in self.notes)
        return "\n".join(lines)


def build_check_report(
    request: CheckRequest,
    verdict: Verdict,
    *,
    command: str = "check",
    elapsed_seconds: float = 0.0,
    tables: Optional[dict[str, Any]] = None,
    config: Optional[dict[str, Any]] = None,
) -> CheckReport:
    raw = request.raw if isinstance(request.raw, str) else None
    return CheckReport(
        command=command,
        inputs={
            "type": request.type_label,
            "lambda": raw if raw is not None else rationals(request.weight),
            "coords": request.coordinates,
            "mode": request.mode,
        },
        elapsed_seconds=elapsed_seconds,
        tables=tables or {},
        config=config or {},
        verdict=verdict.is_vwu,
        method=verdict.method,
        system=verdict.system,
        dominant=rationals(verdict.dominant),
        factors=[FactorModel.from_factor(f) for f in verdict.factor_reports],
        witnesses=[WitnessModel.from_witness(w) for w in verdict.witnesses],
        blocks=[BlockModel.from_block(b) for b in verdict.blocks],
        notes=list(verdict.notes),
        dcirc_size=verdict.dcirc_size,
        cosets=verdict.cosets,
    )


class DCircMember(BaseModel):
    gamma: list[str]
    member: list[str]
    root_coefficients: list[str]
    coset: int = 0
    norm_sq: Optional[str] = None


class DCircReport(ReportBase):
    system: str
    dominant: list[str]
    count: int
    cosets: int = 1
    members: list[DCircMember] = Field(default_factory=list)

    def render_text(self) -> str:
        lines = [
            f"type: {self.system}",
            f"lambda: {_bracket(self.dominant)}",
            f"count: {self.count}",
            f"cosets: {self.cosets}",
        ]
        for member in self.members:
            norm = f" |gamma|^2 = {member.norm_sq}" if member.norm_sq is not None else ""
            coefficients = ",".join(str(k) for k in member.root_coefficients)
            lines.append(
                f"{_bracket(member.gamma)} via {_bracket(member.member)} k=[{coefficients}]{norm}"
            )
        return "\n".join(lines)


class OrbitReport(ReportBase):
    query: str
    result: str | bool
    details: dict[str, Any] = Field(default_factory=dict)

    def render_text(self) -> str:
        result = str(self.result).lower() if isinstance(self.result, bool) else self.result
        lines = [f"{self.query}: {result}"]
        lines.extend(f"{key}: {value}" for key, value in self.details.items())
        return "\n".join(lines)


class HeckeCheckModel(BaseModel):
    check: str
    passed: bool
    detail: str = ""


class HeckeReport(ReportBase):
    system: str
    passed: bool
    checks: list[HeckeCheckModel] = Field(default_factory=list)
    summary: dict[str, dict[str, int]] = Field(default_factory=dict)
    product: Optional[str] = None

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def render_text(self) -> str:
        lines = [f"type: {self.system}"]
        if self.product is not None:
            lines.append(f"product: {self.product}")
        for name, counts in self.summary.items():
            lines.append(f"{name}: {counts.get('pass', 0)} pass, {counts.get('fail', 0)} fail")
        for check in self.checks:
            # passing checks are only listed for the inverse-pair table
            if not check.passed or check.check == "inverse_pair":
                status = "pass" if check.passed else "FAIL"
                lines.append(f"{status} {check.check}: {check.detail}")
        lines.append(f"result: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines)


class LemmaModel(BaseModel):
    name: str
    cases: int
    passed: bool
    violations: list[str] = Field(default_factory=list)


class LemmaReport(ReportBase):
    passed: bool
    lemmas: list[LemmaModel] = Field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def render_text(self) -> str:
        lines = []
        for lemma in self.lemmas:
            status = "pass" if lemma.passed else "FAIL"
            count = len(lemma.violations)
            lines.append(f"{status} {lemma.name}: {lemma.cases} cases, {count} violations")
            lines.extend(f"  {violation}" for violation in lemma.violations)
        lines.append(f"result: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines)

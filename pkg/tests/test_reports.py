from vwu_checker.checker.processor import CheckProcessor
from vwu_checker.config import PACKAGED_TABLES_DIR
from vwu_checker.orbits.tables import load_tables
from vwu_checker.reports import (
    CheckReport,
    HeckeCheckModel,
    HeckeReport,
    LemmaModel,
    LemmaReport,
    OrbitReport,
)


def make_check_report(label: str, values: str, **kwargs) -> CheckReport:
    processor = CheckProcessor(tables=load_tables(PACKAGED_TABLES_DIR), first_failure=False)
    return processor.run_text(label, values, **kwargs)


def test_check_report_round_trip() -> None:
    report = make_check_report("A1", "4", coordinates="pairing", mode="direct")
    restored = CheckReport.model_validate_json(report.model_dump_json())
    assert restored == report
    assert restored.dominant == ["2", "-2"]
    assert restored.witnesses[0].equal_orbits


def test_check_report_text() -> None:
    text = make_check_report("B3", "1,1/2,1/4", mode="direct").render_text()
    assert text.startswith("type: B3\nlambda: (1, 1/2, 1/4)\n")
    assert "factor A1" in text
    assert "note: " in text


def test_inconclusive_text_and_exit_code() -> None:
    report = make_check_report("A2", "2,0,-2", mode="triangular")
    assert report.verdict is None
    assert report.exit_code == 1
    assert "verdict: inconclusive" in report.render_text()
    assert report.blocks[0].kind


def test_hecke_report_lists_failures_and_inverse_pairs() -> None:
    report = HeckeReport(
        command="hecke verify",
        system="A1",
        passed=False,
        checks=[
            HeckeCheckModel(check="braid", passed=True, detail="w=1"),
            HeckeCheckModel(check="quadratic", passed=False, detail="s1"),
            HeckeCheckModel(check="inverse_pair", passed=True, detail="k=0: 1"),
        ],
        summary={"braid": {"pass": 1}, "quadratic": {"fail": 1}},
    )
    text = report.render_text()
    assert "FAIL quadratic: s1" in text
    assert "pass inverse_pair: k=0: 1" in text
    assert "w=1" not in text
    assert text.endswith("result: fail")
    assert report.exit_code == 1
    assert HeckeReport.model_validate_json(report.model_dump_json()) == report


def test_orbit_and_lemma_reports() -> None:
    orbit = OrbitReport(command="orbit leq", query="leq", result=True, details={"a": "[2,2]"})
    assert orbit.render_text() == "leq: true\na: [2,2]"
    lemma = LemmaReport(
        command="lemmas",
        passed=True,
        lemmas=[LemmaModel(name="monotonicity-A", cases=3, passed=True)],
    )
    assert lemma.exit_code == 0
    assert "pass monotonicity-A: 3 cases, 0 violations" in lemma.render_text()

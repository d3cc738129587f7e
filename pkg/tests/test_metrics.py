from vwu_checker.checker.processor import CheckProcessor
from vwu_checker.hecke.algebra import AffineHeckeAlgebra
from vwu_checker.hecke.verification import verify_inverse_pairs
from vwu_checker.metrics import (
    CHECK_COUNTER,
    DCIRC_GAUGE,
    HECKE_COUNTER,
    WITNESS_COUNTER,
    write_metrics,
)
from vwu_checker.orbits.tables import TableRegistry


def test_metrics_increment_on_checks() -> None:
    CHECK_COUNTER.clear()
    DCIRC_GAUGE.clear()
    witnesses_before = WITNESS_COUNTER._value.get()

    processor = CheckProcessor(tables=TableRegistry(), first_failure=False)
    processor.run_text("A1", "4", coordinates="pairing", mode="direct")
    processor.run_text("A1", "2", coordinates="pairing", mode="direct")
    processor.run_text("A2", "2,0,-2", mode="triangular")

    assert CHECK_COUNTER.labels(method="direct", verdict="false")._value.get() == 1.0
    assert CHECK_COUNTER.labels(method="direct", verdict="true")._value.get() == 1.0
    inconclusive = CHECK_COUNTER.labels(method="triangular-fast", verdict="inconclusive")
    assert inconclusive._value.get() == 1.0
    assert WITNESS_COUNTER._value.get() - witnesses_before == 1.0
    assert DCIRC_GAUGE.labels(factor="A1")._value.get() == 1.0


def test_hecke_counter_records_outcomes(tmp_path) -> None:
    HECKE_COUNTER.clear()
    verify_inverse_pairs(AffineHeckeAlgebra.from_label("A1"), 0, range(-2, 3))
    assert HECKE_COUNTER.labels(check="inverse_pair", outcome="pass")._value.get() == 5.0

    target = tmp_path / "metrics.prom"
    write_metrics(target)
    assert "vwu_hecke_checks_total" in target.read_text(encoding="utf-8")

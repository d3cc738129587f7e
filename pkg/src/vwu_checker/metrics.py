"""Prometheus metrics instrumentation."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from prometheus_client import REGISTRY, Counter, Gauge, write_to_textfile

CHECK_COUNTER = Counter(
    "vwu_checks_total",
    "Total number of very-weak-unipotence checks performed",
    labelnames=("method", "verdict"),
)

WITNESS_COUNTER = Counter(
    "vwu_witnesses_total",
    "Total number of failing D° members found",
)

DCIRC_GAUGE = Gauge(
    "vwu_dcirc_members",
    "Size of the most recent D°(λ)_+ enumeration",
    labelnames=("factor",),
)

HECKE_COUNTER = Counter(
    "vwu_hecke_checks_total",
    "Hecke presentation checks by outcome",
    labelnames=("check", "outcome"),
)


def record_check(method: str, verdict: Optional[bool]) -> None:
    label = "inconclusive" if verdict is None else str(verdict).lower()
    CHECK_COUNTER.labels(method=method, verdict=label).inc()


def record_witnesses(count: int) -> None:
    if count:
        WITNESS_COUNTER.inc(count)


def record_dcirc(factor: str, size: int) -> None:
    DCIRC_GAUGE.labels(factor=factor).set(size)


def record_hecke_check(check: str, passed: bool) -> None:
    HECKE_COUNTER.labels(check=check, outcome="pass" if passed else "fail").inc()


def write_metrics(path: Path) -> None:
    write_to_textfile(str(path), REGISTRY)

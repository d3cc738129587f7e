from fractions import Fraction as Q

import pytest

from vwu_checker.errors import NormalizationError
from vwu_checker.lie.normalization import WeightNormalizer, parse_rational_list


def test_parse_rational_list() -> None:
    assert parse_rational_list("1,1/2,-1/4") == (Q(1), Q(1, 2), Q(-1, 4))
    assert parse_rational_list("(3 -2)") == (Q(3), Q(-2))
    assert parse_rational_list(" ") == ()
    with pytest.raises(NormalizationError):
        parse_rational_list("1,a")
    with pytest.raises(NormalizationError):
        parse_rational_list("1/0")


def test_normalizer_success() -> None:
    normalizer = WeightNormalizer()
    result = normalizer.normalize("B3", "1,1/2,1/4")

    assert result.request.weight == (Q(1), Q(1, 2), Q(1, 4))
    assert result.request.coordinates == "bourbaki"
    assert result.request.mode == "auto"
    assert result.request.type_label == "B3"


def test_normalizer_pairing_coordinates() -> None:
    normalizer = WeightNormalizer(default_coordinates="pairing")
    request = normalizer.normalize("A1", [4]).request
    assert request.weight == (Q(2), Q(-2))
    assert request.system.simple_pairings(request.weight) == (4,)


def test_normalize_record_reports_extra_fields() -> None:
    normalizer = WeightNormalizer()
    raw = {"cartan_type": "G2", "lam": [1, 1], "coords": "fundamental", "id": 7}

    result = normalizer.normalize_record(raw)

    assert result.request.type_label == "G2"
    assert result.request.raw == raw
    assert result.discarded_fields == {"id": 7}


@pytest.mark.parametrize(
    "raw",
    [
        {"lambda": "1,0"},
        {"type": "A1"},
        {"type": "Q2", "lambda": "1"},
        {"type": "A2", "lambda": "1,0"},
        {"type": "A2", "lambda": "1,0,-1", "mode": "sometimes"},
        {"type": "A2", "lambda": "1,0,-1", "coords": "polar"},
        {"type": "A2", "lambda": {"x": 1}},
    ],
)
def test_normalizer_rejects_bad_records(raw) -> None:
    with pytest.raises(NormalizationError):
        WeightNormalizer().normalize_record(raw)


def test_unknown_default_coordinates() -> None:
    with pytest.raises(NormalizationError):
        WeightNormalizer(default_coordinates="polar")

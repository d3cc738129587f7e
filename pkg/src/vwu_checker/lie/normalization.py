"""Utilities for normalizing user-supplied λ into exact Bourbaki-frame weights."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, MutableMapping, Optional, Sequence

from vwu_checker.errors import DimensionMismatchError, InadmissibleTypeError, NormalizationError
from vwu_checker.lie.rootsys import RootSystem, Weight, system_from_label

COORDINATE_KINDS = ("bourbaki", "fundamental", "pairing")
MODES = ("auto", "direct", "triangular", "both")


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    """Parse ``"1,1/2,-1/4"`` (commas or whitespace) into exact rationals."""

    stripped = text.strip().strip("()[]")
    if not stripped:
        return ()
    tokens = [token for token in stripped.replace(",", " ").split() if token]
    values = []
    for token in tokens:
        try:
            values.append(Fraction(token))
        except (ValueError, ZeroDivisionError) as exc:
            raise NormalizationError(f"Invalid rational coordinate: {token!r}") from exc
    return tuple(values)


@dataclass(slots=True)
class CheckRequest:
    """A single normalized checker input."""

    system: RootSystem
    weight: Weight
    coordinates: str
    mode: str = "auto"
    raw: Any | None = None

    @property
    def type_label(self) -> str:
        return self.system.label


@dataclass(slots=True)
class NormalizationResult:
    request: CheckRequest
    discarded_fields: dict[str, Any] = field(default_factory=dict)


class WeightNormalizer:
    """Convert raw λ text or records into :class:`CheckRequest` objects."""

    TYPE_KEYS = ("type", "cartan_type", "system")
    LAMBDA_KEYS = ("lambda", "lam", "weight")
    COORDS_KEYS = ("coords", "coordinates")
    MODE_KEYS = ("mode",)

    def __init__(
        self, *, default_coordinates: str = "bourbaki", default_mode: str = "auto"
    ) -> None:
        if default_coordinates not in COORDINATE_KINDS:
            raise NormalizationError(f"Unknown coordinate kind: {default_coordinates}")
        self.default_coordinates = default_coordinates
        self.default_mode = default_mode

    def to_weight(
        self, system: RootSystem, values: Sequence[Fraction | int | str] | str, coordinates: str
    ) -> Weight:
        if isinstance(values, str):
            parsed = parse_rational_list(values)
        else:
            try:
                parsed = tuple(Fraction(value) for value in values)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise NormalizationError(f"Invalid coordinates: {values!r}") from exc
        if coordinates == "bourbaki":
            try:
                system.check_dimension(parsed)
            except DimensionMismatchError as exc:
                raise NormalizationError(str(exc)) from exc
            return parsed
        if coordinates in ("fundamental", "pairing"):
            # fundamental-weight coordinates of λ are exactly its simple-coroot pairings
            try:
                return system.from_fundamental(parsed)
            except DimensionMismatchError as exc:
                raise NormalizationError(str(exc)) from exc
        raise NormalizationError(f"Unknown coordinate kind: {coordinates}")

    def normalize(
        self,
        type_label: str,
        values: Sequence[Fraction | int | str] | str,
        *,
        coordinates: Optional[str] = None,
        mode: Optional[str] = None,
    ) -> NormalizationResult:
        try:
            system = system_from_label(type_label)
        except InadmissibleTypeError as exc:
            raise NormalizationError(str(exc)) from exc
        kind = coordinates or self.default_coordinates
        request = CheckRequest(
            system=system,
            weight=self.to_weight(system, values, kind),
            coordinates=kind,
            mode=self._check_mode(mode or self.default_mode),
            raw=values,
        )
        return NormalizationResult(request=request)

    def normalize_record(self, raw: Mapping[str, Any]) -> NormalizationResult:
        """Normalize one batch record such as ``{"type": "B3", "lambda": "1,1/2,1/4"}``."""

        payload = dict(raw)
        type_label = self._extract_str(payload, self.TYPE_KEYS)
        if type_label is None:
            raise NormalizationError("Cartan type field not found")
        values = self._extract_values(payload)
        coordinates = self._extract_str(payload, self.COORDS_KEYS)
        mode = self._extract_str(payload, self.MODE_KEYS)
        result = self.normalize(type_label, values, coordinates=coordinates, mode=mode)
        result.request.raw = raw
        result.discarded_fields = payload
        return result

    def _check_mode(self, mode: str) -> str:
        if mode not in MODES:
            raise NormalizationError(f"Unknown mode: {mode}")
        return mode

    def _extract_values(self, payload: MutableMapping[str, Any]) -> Sequence[Any] | str:
        for key in self.LAMBDA_KEYS:
            value = payload.pop(key, None)
            if value is None:
                continue
            if isinstance(value, (str, list, tuple)):
                return value
            if isinstance(value, (int, Fraction)):
                return [value]
            raise NormalizationError(f"Invalid λ for {key}: {value!r}")
        raise NormalizationError("λ field not found")

    def _extract_str(
        self, payload: MutableMapping[str, Any], keys: tuple[str, ...]
    ) -> Optional[str]:
        for key in keys:
            value = payload.pop(key, None)
            if value is None:
                continue
            return str(value).strip()
        return None

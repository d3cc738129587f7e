"""Integer Laurent polynomials in the Hecke parameter ``u``."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    """Finitely supported map ``exponent -> coefficient``; zero coefficients are never stored."""

    coefficients: tuple[tuple[int, int], ...] = field(default=())

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> LaurentPoly:
        return cls(tuple(sorted((e, c) for e, c in mapping.items() if c != 0)))

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls.from_mapping({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls.from_mapping({exponent: coefficient})

    def as_dict(self) -> dict[int, int]:
        return dict(self.coefficients)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __add__(self, other: Scalar) -> LaurentPoly:
        other = as_laurent(other)
        total: defaultdict[int, int] = defaultdict(int)
        for e, c in (*self.coefficients, *other.coefficients):
            total[e] += c
        return LaurentPoly.from_mapping(total)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.coefficients))

    def __sub__(self, other: Scalar) -> LaurentPoly:
        return self + (-as_laurent(other))

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return as_laurent(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        other = as_laurent(other)
        total: defaultdict[int, int] = defaultdict(int)
        for e1, c1 in self.coefficients:
            for e2, c2 in other.coefficients:
                total[e1 + e2] += c1 * c2
        return LaurentPoly.from_mapping(total)

    __rmul__ = __mul__

    def at_one(self) -> int:
        return sum(c for _, c in self.coefficients)

    @property
    def is_monomial(self) -> bool:
        return len(self.coefficients) == 1

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        pieces = []
        for e, c in reversed(self.coefficients):
            if e == 0:
                body = str(abs(c))
            else:
                power = "u" if e == 1 else f"u^{e}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


Scalar = Union[LaurentPoly, int]


def as_laurent(value: Scalar) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.constant(int(value))


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
U = LaurentPoly.monomial(1)
U_INV = LaurentPoly.monomial(-1)

"""Text form of Hecke algebra elements.

Elements read and print as sums of products, e.g.
``u^2*t[1,-1]*T[1,2] + (u-1)*T[]``.  ``t[...]`` takes fundamental-weight
coordinates, ``T[...]`` a 1-based word in the simple reflections; products are
evaluated in the algebra, so factors may appear in any order.
"""

from __future__ import annotations

import re
from typing import Optional

from vwu_checker.errors import HeckeSyntaxError, InadmissibleTypeError
from vwu_checker.hecke.algebra import AffineHeckeAlgebra, HeckeElement
from vwu_checker.hecke.laurent import LaurentPoly

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<gen>[tT])\s*\[(?P<args>[^\]]*)\]|(?P<op>[-+*^()u]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None:
            raise HeckeSyntaxError(f"unexpected input at {position}: {stripped[position:]!r}")
        position = match.end()
        if match.group("int") is not None:
            tokens.append(("int", match.group("int")))
        elif match.group("gen") is not None:
            tokens.append((match.group("gen"), match.group("args")))
        else:
            tokens.append(("op", match.group("op")))
    return tokens


def _integers(args: str) -> list[int]:
    pieces = [piece.strip() for piece in args.split(",")] if args.strip() else []
    try:
        return [int(piece) for piece in pieces]
    except ValueError as exc:
        raise HeckeSyntaxError(f"bad integer list [{args}]") from exc


class _Parser:
    def __init__(self, algebra: AffineHeckeAlgebra, text: str) -> None:
        self.algebra = algebra
        self.text = text
        self.tokens = _tokenize(text)
        self.position = 0

    def peek(self) -> Optional[tuple[str, str]]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        token = self.peek()
        if token is None:
            raise HeckeSyntaxError(f"unexpected end of {self.text!r}")
        self.position += 1
        return token

    def accept(self, op: str) -> bool:
        if self.peek() == ("op", op):
            self.position += 1
            return True
        return False

    def parse(self) -> HeckeElement:
        if not self.tokens:
            raise HeckeSyntaxError("empty Hecke element")
        element = self.expression()
        if self.peek() is not None:
            raise HeckeSyntaxError(f"trailing input in {self.text!r}")
        return element

    def expression(self) -> HeckeElement:
        negative = self.accept("-")
        if not negative:
            self.accept("+")
        result = self.term()
        if negative:
            result = -result
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> HeckeElement:
        result = self.factor()
        while self.accept("*"):
            result = result * self.factor()
        return result

    def factor(self) -> HeckeElement:
        kind, value = self.take()
        if kind == "int":
            return self.algebra.scalar(int(value))
        if kind == "t":
            try:
                return self.algebra.t(_integers(value))
            except InadmissibleTypeError as exc:
                raise HeckeSyntaxError(str(exc)) from exc
        if kind == "T":
            word = _integers(value)
            if any(not 1 <= i <= self.algebra.rank for i in word):
                raise HeckeSyntaxError(
                    f"T[{value}] uses a reflection outside 1..{self.algebra.rank}"
                )
            return self.algebra.T(i - 1 for i in word)
        if value == "u":
            exponent = 1
            if self.accept("^"):
                sign = -1 if self.accept("-") else 1
                kind, digits = self.take()
                if kind != "int":
                    raise HeckeSyntaxError(f"bad exponent in {self.text!r}")
                exponent = sign * int(digits)
            return self.algebra.scalar(LaurentPoly.monomial(exponent))
        if value == "(":
            inner = self.expression()
            if not self.accept(")"):
                raise HeckeSyntaxError(f"unbalanced parentheses in {self.text!r}")
            return inner
        if value == "-":
            return -self.factor()
        raise HeckeSyntaxError(f"unexpected {value!r} in {self.text!r}")


def parse_element(algebra: AffineHeckeAlgebra, text: str) -> HeckeElement:
    return _Parser(algebra, text).parse()


def _basis_text(mu: tuple[int, ...], word: tuple[int, ...]) -> str:
    parts = []
    if any(mu):
        parts.append("t[" + ",".join(str(x) for x in mu) + "]")
    if word:
        parts.append("T[" + ",".join(str(i + 1) for i in word) + "]")
    return "*".join(parts)


def _term_text(coeff: LaurentPoly, basis: str) -> str:
    if not basis:
        return str(coeff) if coeff.is_monomial else f"({coeff})"
    if coeff == LaurentPoly.constant(1):
        return basis
    if coeff == LaurentPoly.constant(-1):
        return "-" + basis
    if coeff.is_monomial:
        return f"{coeff}*{basis}"
    return f"({coeff})*{basis}"


def format_element(element: HeckeElement) -> str:
    terms = sorted(
        element.terms.items(), key=lambda item: (len(item[0][1]), item[0][1], item[0][0])
    )
    if not terms:
        return "0"
    pieces = [_term_text(coeff, _basis_text(mu, word)) for (mu, word), coeff in terms]
    text = pieces[0]
    for piece in pieces[1:]:
        text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return text

"""Weyl group elements keyed by their image of ρ, with canonical reduced words."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from vwu_checker.lie.rootsys import RootSystem, Weight, WeylWord

Lattice = tuple[int, ...]


def to_lattice(mu: Sequence[Fraction | int]) -> Lattice:
    values = tuple(Fraction(x) for x in mu)
    if any(x.denominator != 1 for x in values):
        raise ValueError(f"{values} is not an integral weight")
    return tuple(int(x) for x in values)


class WeylGroup:
    """The Weyl group of ``system``, acting on weights in its own coordinates.

    An element ``w`` is identified with ``w(ρ)``; ``ρ`` is regular, so the map
    is injective.  The canonical word of ``w`` is its lexicographically least
    reduced word, i.e. the smallest left descent followed recursively by the
    canonical word of the rest.
    """

    def __init__(self, system: RootSystem) -> None:
        self.system = system
        self.rank = system.rank
        self.identity: Weight = system.rho
        self._words: dict[Weight, WeylWord] = {self.identity: ()}
        self._levels: list[list[Weight]] = [[self.identity]]

    def key(self, word: WeylWord) -> Weight:
        for index in word:
            if not 0 <= index < self.rank:
                raise IndexError(
                    f"simple reflection {index + 1} out of range for {self.system.label}"
                )
        return self.system.apply_word(word, self.identity)

    def is_left_descent(self, index: int, key: Weight) -> bool:
        return self.system.pair(self.system.simple_coroots[index], key) < 0

    def left_multiply(self, index: int, key: Weight) -> Weight:
        return self.system.reflect(index, key)

    def length(self, key: Weight) -> int:
        coroots = self.system.positive_coroots
        return sum(1 for coroot in coroots if self.system.pair(coroot, key) < 0)

    def canonical_word(self, key: Weight) -> WeylWord:
        cached = self._words.get(key)
        if cached is not None:
            return cached
        descent = next(i for i in range(self.rank) if self.is_left_descent(i, key))
        word = (descent,) + self.canonical_word(self.left_multiply(descent, key))
        self._words[key] = word
        return word

    def canonical(self, word: WeylWord) -> WeylWord:
        return self.canonical_word(self.key(word))

    def compose(self, first: Weight, second: Weight) -> Weight:
        """Key of ``w v`` from the keys of ``w`` and ``v``."""
        return self.system.apply_word(self.canonical_word(first), second)

    def act(self, key: Weight, mu: Lattice) -> Lattice:
        return to_lattice(self.system.apply_word(self.canonical_word(key), mu))

    def reduced_words(self, key: Weight) -> Iterator[WeylWord]:
        """Every reduced word of the element, in lexicographic order."""
        if key == self.identity:
            yield ()
            return
        for index in range(self.rank):
            if self.is_left_descent(index, key):
                for rest in self.reduced_words(self.left_multiply(index, key)):
                    yield (index,) + rest

    def elements(self, max_length: int) -> list[Weight]:
        """Elements of length at most ``max_length`` in shortlex order of canonical words."""

        while len(self._levels) <= max_length and self._levels[-1]:
            # s w has length l(w) + 1 exactly when s is not a left descent of w
            nxt = {
                self.left_multiply(index, key)
                for key in self._levels[-1]
                for index in range(self.rank)
                if not self.is_left_descent(index, key)
            }
            self._levels.append(sorted(nxt, key=self.canonical_word))
        return [key for level in self._levels[: max_length + 1] for key in level]

"""Extended affine Hecke algebra over Z[u, u^-1] in the Bernstein presentation.

Elements are kept in the normal form ``Σ c(u) t_μ T_w`` with every lattice
generator to the left.  Products are reduced eagerly using

* ``T_s T_x = T_{sx}`` when the length goes up, ``(u-1) T_x + u T_{sx}`` otherwise,
* ``T_s t_ν = t_{sν} T_s + (1-u) t_{sν} G(-<ν, α^vee>)``,

where ``G(k)`` is the finite expansion of ``(1 - t_{-kα}) / (1 - t_α)``.
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from vwu_checker.errors import DatumMismatchError, InadmissibleTypeError
from vwu_checker.hecke.laurent import ONE, U, U_INV, ZERO, LaurentPoly, Scalar, as_laurent
from vwu_checker.hecke.weyl import Lattice, WeylGroup, to_lattice
from vwu_checker.lie.rootsys import (
    FUNDAMENTAL,
    RootSystem,
    Weight,
    WeylWord,
    system_from_label,
    trivial_system,
)

Key = tuple[Lattice, Weight]


def _shift(mu: Lattice, nu: Lattice) -> Lattice:
    return tuple(a + b for a, b in zip(mu, nu))


def _accumulate(target: dict, key: object, value: LaurentPoly) -> None:
    total = target.get(key, ZERO) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class HeckeElement:
    """A finite sum ``Σ c(u) t_μ T_w`` of one :class:`AffineHeckeAlgebra`."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: AffineHeckeAlgebra, terms: Mapping[Key, LaurentPoly]) -> None:
        self.algebra = algebra
        self._terms = {key: coeff for key, coeff in terms.items() if coeff}

    @property
    def terms(self) -> dict[tuple[Lattice, WeylWord], LaurentPoly]:
        """Coefficients keyed by ``(μ, canonical reduced word)``."""
        word = self.algebra.weyl.canonical_word
        return {(mu, word(w)): coeff for (mu, w), coeff in self._terms.items()}

    def items(self) -> Iterator[tuple[Key, LaurentPoly]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def _same_algebra(self, other: HeckeElement) -> None:
        if self.algebra.datum != other.algebra.datum:
            raise DatumMismatchError(
                f"elements of {self.algebra.label} and {other.algebra.label} cannot be combined"
            )

    def __add__(self, other: Union[HeckeElement, Scalar]) -> HeckeElement:
        other = self.algebra.coerce(other)
        self._same_algebra(other)
        total = dict(self._terms)
        for key, coeff in other._terms.items():
            _accumulate(total, key, coeff)
        return HeckeElement(self.algebra, total)

    __radd__ = __add__

    def __neg__(self) -> HeckeElement:
        return HeckeElement(self.algebra, {key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: Union[HeckeElement, Scalar]) -> HeckeElement:
        return self + (-self.algebra.coerce(other))

    def __rsub__(self, other: Scalar) -> HeckeElement:
        return self.algebra.coerce(other) - self

    def __mul__(self, other: Union[HeckeElement, Scalar]) -> HeckeElement:
        if isinstance(other, HeckeElement):
            return self.algebra.multiply(self, other)
        scalar = as_laurent(other)
        scaled = {key: coeff * scalar for key, coeff in self._terms.items()}
        return HeckeElement(self.algebra, scaled)

    def __rmul__(self, other: Scalar) -> HeckeElement:
        # scalars are central
        return self * other

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = self.algebra.coerce(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.algebra.datum == other.algebra.datum and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __len__(self) -> int:
        return len(self._terms)

    def __str__(self) -> str:
        from vwu_checker.hecke.syntax import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"HeckeElement({self.algebra.label}: {self})"


class AffineHeckeAlgebra:
    """The algebra attached to a root system given in fundamental-weight coordinates.

    ``X`` is the weight lattice, written as integer vectors of simple-coroot
    pairings.  The rank-0 datum gives the algebra ``Z[u, u^-1]`` itself.
    """

    def __init__(self, system: RootSystem) -> None:
        if system.rank and system.coordinates != FUNDAMENTAL:
            raise InadmissibleTypeError(
                f"the Hecke algebra needs fundamental-weight coordinates, got {system.coordinates}"
            )
        self.system = system
        self.weyl = WeylGroup(system)
        self.rank = system.rank
        self.simple_roots: tuple[Lattice, ...] = tuple(to_lattice(r) for r in system.simple_roots)
        self._ts_t_cache: dict[tuple[int, Lattice], dict[Key, LaurentPoly]] = {}
        self._tw_t_cache: dict[tuple[Weight, Lattice], dict[Key, LaurentPoly]] = {}

    @classmethod
    def from_label(cls, label: str) -> AffineHeckeAlgebra:
        if label.strip().lower() in ("trivial", "0", ""):
            return cls(trivial_system())
        return cls(system_from_label(label, FUNDAMENTAL))

    @property
    def label(self) -> str:
        return self.system.label

    @property
    def datum(self) -> tuple[str, tuple[tuple[int, ...], ...]]:
        matrix = tuple(tuple(int(x) for x in row) for row in self.system.cartan_matrix)
        return self.system.label, matrix

    # -- constructors -------------------------------------------------------

    @property
    def zero_weight(self) -> Lattice:
        return tuple(0 for _ in range(self.rank))

    def zero(self) -> HeckeElement:
        return HeckeElement(self, {})

    def scalar(self, value: Scalar) -> HeckeElement:
        return HeckeElement(self, {(self.zero_weight, self.weyl.identity): as_laurent(value)})

    def one(self) -> HeckeElement:
        return self.scalar(ONE)

    def u(self) -> HeckeElement:
        return self.scalar(U)

    def T(self, word: Iterable[int] = ()) -> HeckeElement:
        """``T_w`` for a 0-based word; non-reduced words are multiplied out."""
        result = self.one()
        for index in word:
            result = result * self.basis(self.zero_weight, self.weyl.key((index,)))
        return result

    def t(self, mu: Iterable[int | Fraction]) -> HeckeElement:
        weight = to_lattice(tuple(mu))
        if len(weight) != self.rank:
            raise InadmissibleTypeError(
                f"{self.label} lattice vectors have {self.rank} coordinates, got {len(weight)}"
            )
        return self.basis(weight, self.weyl.identity)

    def basis(self, mu: Lattice, key: Weight, coeff: LaurentPoly = ONE) -> HeckeElement:
        return HeckeElement(self, {(mu, key): coeff})

    def coerce(self, value: Union[HeckeElement, Scalar]) -> HeckeElement:
        if isinstance(value, HeckeElement):
            return value
        return self.scalar(value)

    # -- lattice part -------------------------------------------------------

    def geometric_sum(self, index: int, k: int) -> dict[Lattice, int]:
        """``G(k)``: the expansion of ``(1 - t_{-kα}) / (1 - t_α)`` for ``α = α_index``."""
        alpha = self.simple_roots[index]
        if k > 0:
            return {tuple(-j * a for a in alpha): -1 for j in range(1, k + 1)}
        if k < 0:
            return {tuple(j * a for a in alpha): 1 for j in range(0, -k)}
        return {}

    def G(self, index: int, k: int) -> HeckeElement:
        identity = self.weyl.identity
        return HeckeElement(
            self,
            {
                (mu, identity): LaurentPoly.constant(c)
                for mu, c in self.geometric_sum(index, k).items()
            },
        )

    # -- products -----------------------------------------------------------

    def _left_T(self, index: int, key: Weight) -> list[tuple[Weight, LaurentPoly]]:
        raised = self.weyl.left_multiply(index, key)
        if not self.weyl.is_left_descent(index, key):
            return [(raised, ONE)]
        return [(key, U - 1), (raised, U)]

    def _T_times_T(self, first: Weight, second: Weight) -> dict[Weight, LaurentPoly]:
        result: dict[Weight, LaurentPoly] = {second: ONE}
        for index in reversed(self.weyl.canonical_word(first)):
            nxt: dict[Weight, LaurentPoly] = {}
            for key, coeff in result.items():
                for target, factor in self._left_T(index, key):
                    _accumulate(nxt, target, coeff * factor)
            result = nxt
        return result

    def _Ts_t(self, index: int, nu: Lattice) -> dict[Key, LaurentPoly]:
        cached = self._ts_t_cache.get((index, nu))
        if cached is not None:
            return cached
        reflected = to_lattice(self.system.reflect(index, nu))
        pairing = int(self.system.pair(self.system.simple_coroots[index], nu))
        result: dict[Key, LaurentPoly] = {(reflected, self.weyl.key((index,))): ONE}
        for mu, c in self.geometric_sum(index, -pairing).items():
            _accumulate(result, (_shift(reflected, mu), self.weyl.identity), (1 - U) * c)
        self._ts_t_cache[(index, nu)] = result
        return result

    def _Tw_t(self, key: Weight, nu: Lattice) -> dict[Key, LaurentPoly]:
        """Normal form of ``T_w t_ν``."""
        cached = self._tw_t_cache.get((key, nu))
        if cached is not None:
            return cached
        word = self.weyl.canonical_word(key)
        if not word:
            result: dict[Key, LaurentPoly] = {(nu, key): ONE}
        else:
            head = word[0]
            inner = self._Tw_t(self.weyl.left_multiply(head, key), nu)
            result = {}
            for (x, y), c in inner.items():
                for (z, s), d in self._Ts_t(head, x).items():
                    for target, e in self._T_times_T(s, y).items():
                        _accumulate(result, (z, target), c * d * e)
        self._tw_t_cache[(key, nu)] = result
        return result

    def multiply(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        for element in (a, b):
            if element.algebra.datum != self.datum:
                raise DatumMismatchError(
                    f"element of {element.algebra.label} used in the {self.label} algebra"
                )
        result: dict[Key, LaurentPoly] = {}
        for (mu, w), c in a.items():
            for (nu, v), d in b.items():
                for (x, y), e in self._Tw_t(w, nu).items():
                    for z, f in self._T_times_T(y, v).items():
                        _accumulate(result, (_shift(mu, x), z), c * d * e * f)
        return HeckeElement(self, result)

    # -- intertwiner classes -------------------------------------------------

    def shriek(self, index: int, pairing: Fraction | int) -> HeckeElement:
        """``-T_s + (u-1) G(⌊p⌋)`` for the pairing ``p = <λ, α^vee>``."""
        k = math.floor(Fraction(pairing))
        return -self.T((index,)) + self.G(index, k) * (U - 1)

    def star(self, index: int, pairing: Fraction | int) -> HeckeElement:
        """``-u^-1 T_s + (1-u^-1) G(⌈p-1⌉)``."""
        k = math.ceil(Fraction(pairing) - 1)
        return -(self.T((index,)) * U_INV) + self.G(index, k) * (1 - U_INV)


class GroupAlgebraElement:
    """Element of the integral group algebra of ``W ⋉ X``."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AffineHeckeAlgebra, terms: Mapping[Key, int]) -> None:
        self.algebra = algebra
        self.terms = {key: c for key, c in terms.items() if c}

    def __mul__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        weyl = self.algebra.weyl
        result: defaultdict[Key, int] = defaultdict(int)
        for (mu, w), c in self.terms.items():
            for (nu, v), d in other.terms.items():
                # (μ, w)(ν, v) = (μ + wν, wv)
                result[(_shift(mu, weyl.act(w, nu)), weyl.compose(w, v))] += c * d
        return GroupAlgebraElement(self.algebra, result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]


def specialize_at_one(element: HeckeElement) -> GroupAlgebraElement:
    """The image under ``u -> 1``, ``t_μ T_w -> (μ, w)``."""
    return GroupAlgebraElement(
        element.algebra, {key: coeff.at_one() for key, coeff in element.items()}
    )


"""Extended affine Hecke algebra in the Bernstein presentation."""

from vwu_checker.hecke.algebra import (
    AffineHeckeAlgebra,
    GroupAlgebraElement,
    HeckeElement,
    specialize_at_one,
)
from vwu_checker.hecke.laurent import LaurentPoly
from vwu_checker.hecke.syntax import format_element, parse_element
from vwu_checker.hecke.verification import (
    intertwiner_class,
    random_element,
    verify_inverse_pairs,
    verify_presentation,
)
from vwu_checker.hecke.weyl import WeylGroup

__all__ = [
    "AffineHeckeAlgebra",
    "GroupAlgebraElement",
    "HeckeElement",
    "LaurentPoly",
    "WeylGroup",
    "format_element",
    "intertwiner_class",
    "parse_element",
    "random_element",
    "specialize_at_one",
    "verify_inverse_pairs",
    "verify_presentation",
]

"""Decision procedures for very weak unipotence.

``processor`` is imported explicitly by callers since it depends on the
report models, which in turn use the verdict types defined here.
"""

from vwu_checker.checker.direct import check_vwu_direct
from vwu_checker.checker.fast import check_vwu_triangular
from vwu_checker.checker.models import FactorReport, Verdict, Witness
from vwu_checker.checker.oracle import brute_force_vwu

__all__ = [
    "FactorReport",
    "Verdict",
    "Witness",
    "brute_force_vwu",
    "check_vwu_direct",
    "check_vwu_triangular",
]

"""Exact-arithmetic Krall-Laguerre systems.

All numbers cross the boundary as ``p/q`` strings; every computation in the
extension is exact rational arithmetic.
"""

from ._core import (
    genericity_report,
    hat_laguerre,
    k1_generator_report,
    laguerre_poly,
    operator_report,
    sobolev_report,
    system_report,
)

__all__ = [
    "genericity_report",
    "hat_laguerre",
    "k1_generator_report",
    "laguerre_poly",
    "operator_report",
    "sobolev_report",
    "system_report",
]

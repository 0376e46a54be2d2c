"""
Diagonal counts roughly double from one dimension to the next.
"""

from fractions import Fraction

from ..counting import build_table, growth_ratios
from ._base import BaseCheck

__all__ = ["Check"]

LOWER, UPPER = Fraction(19, 10), Fraction(21, 10)


class Check(BaseCheck):
    """
    Ω(N, N) / Ω(N - 1, N - 1) lies in [1.9, 2.1] for N in {9, 10}.
    """

    def _run(self) -> tuple[bool, str]:
        ratios = growth_ratios(build_table(10, 10))
        selected = {n: ratios[n] for n in (9, 10)}
        passed = all(LOWER <= ratio <= UPPER for ratio in selected.values())
        detail = ", ".join(f"N={n}: {float(ratio):.4f}" for n, ratio in selected.items())
        return passed, detail

"""
The F(j, r, c) recursion equals its convolution closed form, which is symmetric in (r, c).
"""

from ..counting import f_convolution, f_recursive
from ._base import BaseCheck

__all__ = ["Check"]

BOUND = 10


class Check(BaseCheck):
    def _run(self) -> tuple[bool, str]:
        asymmetric = 0
        for j in range(BOUND + 1):
            for r in range(BOUND + 1):
                for c in range(BOUND + 1):
                    value = f_recursive(j, r, c)
                    if value != f_convolution(j, r, c):
                        return False, (
                            f"F({j},{r},{c}) = {value}, convolution {f_convolution(j, r, c)}"
                        )
                    asymmetric += value != f_recursive(j, c, r)
        symmetric = "yes" if asymmetric == 0 else f"no ({asymmetric} cells)"
        return True, f"recursion equals convolution; symmetric in (r, c): {symmetric}"

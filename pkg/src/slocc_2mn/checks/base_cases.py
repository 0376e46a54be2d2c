"""
Base cases of the singular-part recursion and the restricted partition numbers.
"""

from ..counting import f_recursive, restricted_partition_count
from ..utils import int_partitions
from ._base import BaseCheck

__all__ = ["Check"]

BOUND = 10


class Check(BaseCheck):
    """
    F(0, r, c) = 1 and F(-j, r, c) = 0 for r, c, j <= 10, and f_n^(m) matches a
    direct listing of partitions with parts at most m.
    """

    def _run(self) -> tuple[bool, str]:
        for r in range(BOUND + 1):
            for c in range(BOUND + 1):
                if f_recursive(0, r, c) != 1:
                    return False, f"F(0,{r},{c}) = {f_recursive(0, r, c)}"
                for j in range(1, BOUND + 1):
                    if f_recursive(-j, r, c) != 0:
                        return False, f"F(-{j},{r},{c}) = {f_recursive(-j, r, c)}"
        for n in range(BOUND + 1):
            for m in range(BOUND + 1):
                listed = sum(1 for _ in int_partitions(n, max_part=m))
                if restricted_partition_count(n, m) != listed:
                    counted = restricted_partition_count(n, m)
                    return False, f"f_{n}^({m}) = {counted}, listed {listed}"
        return True, f"base cases hold for r, c, j <= {BOUND}"

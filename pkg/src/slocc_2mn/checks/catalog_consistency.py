"""
Enumerated class families add up to Ω(M, N) in every (i, j) cell.
"""

from pydantic import Field
from tqdm import tqdm

from ..catalog import count_check
from ._base import BaseCheck

__all__ = ["Check"]


class Check(BaseCheck):
    max_n: int = Field(default=10, ge=2)

    def _run(self) -> tuple[bool, str]:
        pairs = [
            (m, n)
            for m in range(2, self.max_n + 1)
            for n in range(m, min(2 * m, self.max_n) + 1)
        ]
        for m, n in tqdm(pairs, desc=self.name, disable=not self.progress):
            report = count_check(m, n)
            if not report.passed:
                return False, f"{m}x{n}: {report.actual} labels, expected {report.expected}"
        return True, f"{len(pairs)} dimension pairs consistent"

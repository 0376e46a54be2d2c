"""
Generated class counts reproduce the published table cell by cell.
"""

from pydantic import Field

from ..counting import build_table, omega_total, published_table
from ._base import BaseCheck

__all__ = ["Check"]


class Check(BaseCheck):
    """
    Compare Ω(M, N) for 2 <= M, N <= 10 with the published values and Ω(6, 7) with 61.
    """

    max_dim: int = Field(default=10, ge=2, le=10)

    def _run(self) -> tuple[bool, str]:
        expected = published_table()
        actual = build_table(self.max_dim, self.max_dim, progress=self.progress)
        mismatches = [
            f"({m},{n}): {actual.cells[(m, n)]} != {value}"
            for (m, n), value in sorted(expected.cells.items())
            if m <= self.max_dim and n <= self.max_dim and actual.cells[(m, n)] != value
        ]
        if omega_total(6, 7) != 61:
            mismatches.append(f"(6,7): {omega_total(6, 7)} != 61")
        if mismatches:
            return False, "; ".join(mismatches[:5])
        return True, f"{len(actual.cells)} cells match"

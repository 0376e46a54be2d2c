"""
Cross ratios are invariant under the Möbius action induced by the qubit operator.
"""

from ..nonlocal_params import cross_ratio
from ..pencil import ProjectivePoint, moebius_image
from ..utils import random_distinct_scalars, random_invertible_matrix
from ._base import BaseCheck

__all__ = ["Check"]


class Check(BaseCheck):
    def _run(self) -> tuple[bool, str]:
        rng = self.rng
        for trial in range(self.trials):
            finite = random_distinct_scalars(4, rng, gaussian=trial % 3 == 2)
            points = [ProjectivePoint.finite(value) for value in finite]
            if trial % 2:
                points[trial % 4] = ProjectivePoint.infinity()
            t = random_invertible_matrix(2, rng)
            before = cross_ratio(*points)
            after = cross_ratio(*(moebius_image(point, t) for point in points))
            if before != after:
                return False, f"trial {trial}: {before} became {after}"
        return True, f"{self.trials} random configurations keep their cross ratio"

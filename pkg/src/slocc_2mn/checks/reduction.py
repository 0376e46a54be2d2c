"""
The reducing operators map every diagonal family onto its normal form.
"""

from pydantic import Field
from tqdm import tqdm

from ..exactnum import ZERO
from ..nonlocal_params import (
    cross_ratio,
    family_state,
    normal_form_state,
    reduce_to_normal_form,
)
from ..pencil import ProjectivePoint, apply_ilo
from ..settings import SETTINGS
from ..utils import random_distinct_scalars
from ._base import BaseCheck

__all__ = ["Check"]


class Check(BaseCheck):
    """
    Random eigenvalue lists with m in 2..6 and N in m+1..m+3 reduce exactly,
    and each parameter equals the cross ratio (0, λ1, λ2, λ_k).
    """

    cases: int = Field(default_factory=lambda: SETTINGS.selftest.reduction_cases, ge=1)

    def _run(self) -> tuple[bool, str]:
        rng = self.rng
        for case in tqdm(range(self.cases), desc=self.name, disable=not self.progress):
            m = rng.randint(2, 6)
            n_dim = m + rng.randint(1, 3)
            eigs = random_distinct_scalars(m, rng, exclude=(ZERO,), gaussian=case % 2 == 1)
            params, op = reduce_to_normal_form(eigs, n_dim)
            if apply_ilo(family_state(eigs, n_dim), op) != normal_form_state(params, n_dim):
                return False, f"case {case}: m={m}, N={n_dim} does not reach the normal form"
            points = [ProjectivePoint.finite(value) for value in [ZERO, *eigs]]
            expected = [cross_ratio(*points[:3], point) for point in points[3:]]
            if list(params.values) != expected:
                return False, f"case {case}: parameters differ from the cross ratios"
        return True, f"{self.cases} families reduced"

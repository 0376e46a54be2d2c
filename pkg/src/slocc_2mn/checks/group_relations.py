"""
The parameter generators satisfy the Coxeter relations of a symmetric group.
"""

from pydantic import Field
from tqdm import tqdm

from ..nonlocal_params import verify_group_relations
from ..settings import SETTINGS
from ._base import BaseCheck

__all__ = ["Check"]


class Check(BaseCheck):
    """
    Involution, commutation and braid relations for m = 3..max_m, with and without H.
    """

    max_m: int = Field(default_factory=lambda: SETTINGS.selftest.group_max_m, ge=3)

    def _run(self) -> tuple[bool, str]:
        cases = [(m, extra_h) for m in range(3, self.max_m + 1) for extra_h in (False, True)]
        relations = 0
        for m, extra_h in tqdm(cases, desc=self.name, disable=not self.progress):
            df = verify_group_relations(m, extra_h, self.trials, seed=self.seed)
            failed = df.loc[~df["passed"]]
            if not failed.empty:
                row = failed.iloc[0]
                return False, f"m={m}, H={extra_h}: {row['left']} != {row['right']}"
            relations += len(df)
        return True, f"{relations} relations hold for m=3..{self.max_m}"

"""
The Segre-symbol generating function agrees with explicit enumeration.
"""

from pydantic import Field

from ..counting import segre_count, segre_enumerate
from ..settings import SETTINGS
from ._base import BaseCheck

__all__ = ["Check"]


class Check(BaseCheck):
    max_n: int = Field(default_factory=lambda: SETTINGS.selftest.segre_max, ge=1)

    def _run(self) -> tuple[bool, str]:
        for n in range(1, self.max_n + 1):
            counted, listed = segre_count(n), len(segre_enumerate(n))
            if counted != listed:
                return False, f"n={n}: generating function {counted}, enumeration {listed}"
        return True, f"n=1..{self.max_n} agree"

"""
A single cross ratio has the six-element anharmonic orbit and FG(λ) = 1/(1 - λ).
"""

from ..exactnum import ONE, ZERO
from ..nonlocal_params import ParamVector, anharmonic_orbit, apply_word, orbit
from ..utils import random_distinct_scalars
from ._base import BaseCheck

__all__ = ["Check"]


class Check(BaseCheck):
    def _run(self) -> tuple[bool, str]:
        values = random_distinct_scalars(self.trials, self.rng, exclude=(ZERO, ONE))
        generic = 0
        for value in values:
            v = ParamVector(values=[value], m=3)
            found = {w.values[0] for w in orbit(v)}
            expected = set(anharmonic_orbit(value))
            if found != expected:
                return False, f"λ={value}: orbit {len(found)} values, expected {len(expected)}"
            if apply_word(v, ["F", "G"]).values[0] != ONE / (ONE - value):
                return False, f"λ={value}: FG(λ) != 1/(1-λ)"
            generic += len(found) == 6
        return True, f"{len(values)} orbits match, {generic} with six elements"

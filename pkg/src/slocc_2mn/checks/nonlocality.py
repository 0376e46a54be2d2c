"""
Nonlocal parameters are SLOCC invariants: normal forms are equivalent exactly
when their parameters share an orbit.
"""

from ..nonlocal_params import (
    apply_word,
    canonical_params,
    normal_form_state,
    random_params,
    slocc_equivalent_params,
)
from ..pencil import class_label
from ._base import BaseCheck

__all__ = ["Check"]


class Check(BaseCheck):
    """
    Normal-form states for m = 3..5 classify with the canonical parameters,
    keep their label under random generator words and separate distinct orbits.
    """

    def _run(self) -> tuple[bool, str]:
        rng = self.rng
        for trial in range(self.trials):
            m = rng.randint(3, 5)
            n_dim = m + rng.randint(1, 2)
            extra_h = n_dim == m + 1
            v = random_params(m, extra_h, rng)
            label = class_label(normal_form_state(v, n_dim))
            if label.params != canonical_params(v):
                return False, f"trial {trial}: label params {label.params} for {v}"
            letters = ["F", "G"] + ["H"] * extra_h + [f"A{i}" for i in range(1, m - 2)]
            word = [rng.choice(letters) for _ in range(rng.randint(1, 6))]
            moved = apply_word(v, word)
            if class_label(normal_form_state(moved, n_dim)) != label:
                return False, f"trial {trial}: word {''.join(word)} changes the class"
            other = random_params(m, extra_h, rng)
            same = class_label(normal_form_state(other, n_dim)) == label
            if same != slocc_equivalent_params(v, other):
                return False, f"trial {trial}: {v} and {other} disagree on equivalence"
        return True, f"{self.trials} normal forms keep their nonlocal parameters"

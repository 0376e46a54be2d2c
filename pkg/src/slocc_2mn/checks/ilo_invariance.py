"""
Class labels survive random local operators, and catalog representatives
classify back to their own, pairwise distinct, labels.
"""

import json
from multiprocessing import Pool
from random import Random

from pydantic import Field
from tqdm import tqdm

from ..catalog import Unavailable, enumerate_labels, representative
from ..pencil import ClassLabel, apply_ilo, class_label, random_ilo
from ..settings import SETTINGS
from ._base import BaseCheck

__all__ = ["Check"]


def _label_trials(
    job: tuple[ClassLabel, int, int, bool],
) -> tuple[str | None, str | None]:
    """
    Classify a representative and `trials` random images of it.

    Each representative draws from its own generator seeded with the check
    seed and its label, so the outcome does not depend on scheduling.

    Returns
    -------
    tuple[str | None, str | None]
        Key of the representative's label, None when it has no representative,
        and a failure detail, None when the label is invariant.
    """
    label, seed, trials, integral = job
    state = representative(label)
    if isinstance(state, Unavailable):
        return None, None
    found = class_label(state)
    key = json.dumps(found.to_document(), sort_keys=True)
    if found.family != label:
        return key, f"representative of {label.to_document()} classifies differently"
    rng = Random(f"{seed}:{key}")
    for trial in range(trials):
        op = random_ilo(state.m_dim, state.n_dim, rng, integral)
        if class_label(apply_ilo(state, op)) != found:
            return key, f"trial {trial} changes the label of {label.to_document()}"
    return key, None


class Check(BaseCheck):
    """
    For each constructible representative at 2 <= M <= N <= max_dim, N <= 2M,
    `trials` random operator triples leave the label unchanged.
    """

    max_dim: int = Field(default_factory=lambda: SETTINGS.selftest.max_dim, ge=2)
    workers: int = Field(default_factory=lambda: SETTINGS.selftest.workers, ge=1)
    integral: bool = Field(
        default=True, description="Draw local operators with integer entries."
    )

    def _run(self) -> tuple[bool, str]:
        labels = [
            label
            for m in range(2, self.max_dim + 1)
            for n in range(m, min(2 * m, self.max_dim) + 1)
            for label in enumerate_labels(m, n)
        ]
        if len(set(labels)) != len(labels):
            return False, "the catalog lists a label twice"
        jobs = [(label, self.seed, self.trials, self.integral) for label in labels]
        progress = {"total": len(jobs), "desc": self.name, "disable": not self.progress}
        if self.workers > 1:
            with Pool(self.workers) as pool:
                outcomes = list(tqdm(pool.imap(_label_trials, jobs), **progress))
        else:
            outcomes = list(tqdm(map(_label_trials, jobs), **progress))
        seen = set()
        for key, failure in outcomes:
            if key is None:
                continue
            if failure is not None:
                return False, failure
            if key in seen:
                return False, f"labels {key} collide"
            seen.add(key)
        return True, f"{len(seen)} representatives invariant over {self.trials} trials each"

"""
Base class for property checks.

Each check must implement `_run`, returning whether the property holds and a
one-line detail. Checks draw every random value from a `Random(seed)` so a
fixed seed reproduces the same outcome.
"""

import logging
import time
from abc import ABC, abstractmethod
from random import Random
from typing import final

from pydantic import BaseModel, ConfigDict, Field

from ..settings import SETTINGS

__all__ = ["BaseCheck", "CheckResult"]

logger = logging.getLogger(__name__)


class CheckResult(BaseModel):
    """
    Outcome of running a single check.
    """

    model_config = ConfigDict(frozen=True)

    check: str
    passed: bool
    detail: str
    seconds: float = Field(ge=0)


class BaseCheck(BaseModel, ABC):
    """
    Abstract class to build property checks.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")

    seed: int = Field(
        default_factory=lambda: SETTINGS.selftest.seed,
        description="Seed for every random draw of the check.",
    )
    trials: int = Field(
        default_factory=lambda: SETTINGS.selftest.trials,
        ge=1,
        description="Number of random trials where the check samples inputs.",
    )
    progress: bool = Field(default=False, description="Display progress bars.")

    @final
    @property
    def name(self) -> str:
        """
        Get a standardised check name based on the module name.
        """
        return self.__module__.split(".")[-1]

    @final
    @property
    def rng(self) -> Random:
        """
        A fresh random number generator seeded with `seed`.
        """
        return Random(self.seed)

    @abstractmethod
    def _run(self) -> tuple[bool, str]:
        """
        Evaluate the property.

        This function must be overwritten by a child class.

        Returns
        -------
        tuple[bool, str]
            Whether the property holds and a short human-readable detail.
        """

    @final
    def __call__(self) -> CheckResult:
        """
        Run the check and time it.

        Returns
        -------
        CheckResult
            Outcome of the check.
        """
        start = time.perf_counter()
        passed, detail = self._run()
        seconds = time.perf_counter() - start
        logger.info(
            "Check %s %s in %.2fs: %s",
            self.name,
            "passed" if passed else "failed",
            seconds,
            detail,
        )
        return CheckResult(check=self.name, passed=passed, detail=detail, seconds=seconds)

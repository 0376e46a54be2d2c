"""
The Suite class runs a sequence of checks and collects a validated report.
"""

import logging

import pandas as pd
import pandera.pandas as pa
from pydantic import BaseModel, ConfigDict, PrivateAttr

from ..validation import CheckReportSchema
from ._base import BaseCheck, CheckResult

__all__ = ["Suite"]

logger = logging.getLogger(__name__)


class Suite(BaseModel):
    """
    A property suite made of independent checks.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")

    checks: list[BaseCheck]
    _results: list[CheckResult] = PrivateAttr(default_factory=list)

    @pa.check_output(CheckReportSchema)
    def __call__(self) -> pd.DataFrame:
        """
        Run every check in order.

        Returns
        -------
        pd.DataFrame
            One row per check with its outcome, detail and duration.
        """
        self._results = [check() for check in self.checks]
        failed = [result.check for result in self._results if not result.passed]
        logger.info("Ran %d checks, %d failed", len(self._results), len(failed))
        return pd.DataFrame(
            [result.model_dump() for result in self._results],
            columns=["check", "passed", "detail", "seconds"],
        )

    @property
    def results(self) -> list[CheckResult]:
        """
        Results of the last run.
        """
        return self._results

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self._results)

    @property
    def first_failure(self) -> CheckResult | None:
        """
        First failing check of the last run, if any.
        """
        return next((result for result in self._results if not result.passed), None)

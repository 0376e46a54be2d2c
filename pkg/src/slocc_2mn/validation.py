"""
Validation schemas to ensure the integrity of tabular reports and state documents.
"""

import pandas as pd
import pandera.pandas as pa
from pandera.typing.pandas import Series
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .exactnum import GaussianRational

__all__ = [
    "CountSchema",
    "OmegaCellSchema",
    "CellReportSchema",
    "RelationReportSchema",
    "CheckReportSchema",
    "StateDocument",
]


class CountSchema(pa.DataFrameModel):
    """
    Long-format class counts, one row per (M, N) cell.
    """

    m: Series[int] = pa.Field(ge=2, nullable=False)
    n: Series[int] = pa.Field(ge=2, nullable=False)
    omega: Series[int] = pa.Field(ge=0, nullable=False)

    class Config:
        """
        Config for defining DataFrameSchema-wide options.
        """

        name = "CountSchema"
        strict = True
        coerce = True
        unique = ["m", "n"]


class OmegaCellSchema(pa.DataFrameModel):
    """
    Per-(i, j) breakdown of a class count.
    """

    i: Series[int] = pa.Field(ge=0, nullable=False, description="Zero rows of Γ₁.")
    j: Series[int] = pa.Field(ge=0, nullable=False, description="Rank excess of B.")
    d_j: Series[int] = pa.Field(
        ge=0, nullable=False, description="Dimension of the Jordan part."
    )
    segre: Series[int] = pa.Field(ge=1, nullable=False)
    f: Series[int] = pa.Field(ge=0, nullable=False)
    omega: Series[int] = pa.Field(ge=0, nullable=False)

    class Config:
        """
        Config for defining DataFrameSchema-wide options.
        """

        name = "OmegaCellSchema"
        strict = "filter"
        coerce = True
        unique = ["i", "j"]

    @pa.dataframe_check
    @classmethod
    def product(cls, df: pd.DataFrame) -> Series[bool]:
        return df["omega"] == df["segre"] * df["f"]


class CellReportSchema(OmegaCellSchema):
    """
    Per-(i, j) comparison between enumerated labels and the closed-form count.
    """

    labels: Series[int] = pa.Field(ge=0, nullable=False)
    matches: Series[bool] = pa.Field(nullable=False)

    class Config:
        """
        Config for defining DataFrameSchema-wide options.
        """

        name = "CellReportSchema"
        strict = "filter"
        coerce = True
        unique = ["i", "j"]


class RelationReportSchema(pa.DataFrameModel):
    """
    Outcome of checking one Coxeter relation on sampled parameter vectors.
    """

    relation: Series[str] = pa.Field(isin=["involution", "commutation", "braid"])
    left: Series[str] = pa.Field(str_length={"min_value": 1})
    right: Series[str] = pa.Field(str_length={"min_value": 1})
    trials: Series[int] = pa.Field(ge=1)
    passed: Series[bool]

    class Config:
        """
        Config for defining DataFrameSchema-wide options.
        """

        name = "RelationReportSchema"
        strict = True
        coerce = True


class CheckReportSchema(pa.DataFrameModel):
    """
    Self-test report, one row per registered check.
    """

    check: Series[str] = pa.Field(str_length={"min_value": 1}, unique=True)
    passed: Series[bool] = pa.Field(nullable=False)
    detail: Series[str] = pa.Field(nullable=False)
    seconds: Series[float] = pa.Field(ge=0)

    class Config:
        """
        Config for defining DataFrameSchema-wide options.
        """

        name = "CheckReportSchema"
        strict = True
        coerce = True


class StateDocument(BaseModel):
    """
    JSON interchange form of a 2×M×N state: two arrays of exact scalar strings.

    Floats are never accepted, so a document is platform-independent ground truth.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    m: int = Field(ge=2)
    n: int = Field(ge=2)
    gamma1: list[list[str]]
    gamma2: list[list[str]]

    @model_validator(mode="after")
    def check_entries(self):
        for name in ("gamma1", "gamma2"):
            rows = getattr(self, name)
            if len(rows) != self.m or any(len(row) != self.n for row in rows):
                raise ValueError(f"`{name}` must be a {self.m}x{self.n} array")
            for row in rows:
                for value in row:
                    GaussianRational.parse(value)
        return self

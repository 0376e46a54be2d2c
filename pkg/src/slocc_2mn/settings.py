"""
Package settings based on environment variables.
"""

from multiprocessing import cpu_count

from pydantic import BaseModel, DirectoryPath, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

__all__ = ["SETTINGS"]


class SamplingSettings(BaseModel):
    """
    Bounds for drawing random exact scalars and invertible local operators.
    """

    numerator_bound: int = Field(
        default=9, ge=1, description="Numerators are drawn from [-bound, bound]."
    )
    denominator_bound: int = Field(
        default=9, ge=1, description="Denominators are drawn from [1, bound]."
    )
    max_attempts: int = Field(
        default=1000,
        ge=1,
        description="Maximum number of rejection-sampling draws for an invertible matrix.",
    )


class SelfTestSettings(BaseModel):
    """
    Default parameters of the property suite run by `slocc-2mn selftest`.
    """

    seed: int = Field(default=0, description="Seed for every random draw in the suite.")
    trials: int = Field(
        default=20,
        ge=1,
        description="Random local operators applied to each catalog representative.",
    )
    max_dim: int = Field(
        default=6,
        ge=2,
        description="Largest M and N whose catalog representatives are checked for invariance.",
    )
    segre_max: int = Field(
        default=8, ge=1, description="Largest total size for the Segre enumeration oracle."
    )
    group_max_m: int = Field(
        default=7, ge=3, description="Largest m for which group relations are verified."
    )
    reduction_cases: int = Field(
        default=100, ge=1, description="Random eigenvalue lists reduced to the normal form."
    )
    workers: int = Field(
        default_factory=cpu_count,
        ge=1,
        description="Processes sharing the invariance trials; 1 runs them in-process.",
    )


class Settings(BaseSettings):
    """
    Package settings.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        env_nested_delimiter="_",
        env_nested_max_split=1,
    )

    sampling: SamplingSettings = Field(default_factory=SamplingSettings)
    selftest: SelfTestSettings = Field(default_factory=SelfTestSettings)
    export_path: DirectoryPath | None = Field(default=None, alias="EXPORT_PATH")
    log_level: str = Field(default="WARNING", alias="LOG_LEVEL")


SETTINGS = Settings()

"""
Utility functions for reading auxiliary data distributed with the package and
drawing reproducible random exact values.
"""

from importlib import resources
from io import StringIO
from random import Random
from typing import Generator, Sequence

import pandas as pd

from . import data
from .exactnum import ExactMatrix, GaussianRational, mat_rank, random_rational
from .settings import SETTINGS

__all__ = [
    "read_data_text",
    "read_data_csv",
    "int_partitions",
    "random_matrix",
    "random_distinct_scalars",
    "random_invertible_matrix",
]


def read_data_text(file_name: str) -> str:
    """
    Read a text file from the package's `data` directory.

    Parameters
    ----------
    file_name : str
        Name of the file to read.

    Returns
    -------
    str
        Contents of the file as a string.
    """
    return resources.files(data).joinpath(file_name).read_text(encoding="utf-8")


def read_data_csv(file_name: str, **kwargs) -> pd.DataFrame:
    """
    Read a CSV file from the package's `data` directory.

    Parameters
    ----------
    file_name : str
        Name of the file to read.
    **kwargs
        Additional keywords arguments to pass to `pd.read_csv`.

    Returns
    -------
    pd.DataFrame
        Pandas data frame with the contents of the CSV file.
    """
    content = read_data_text(file_name)
    return pd.read_csv(StringIO(content), **kwargs)


def int_partitions(
    n: int, max_part: int | None = None
) -> Generator[tuple[int, ...], None, None]:
    """
    Enumerate the partitions of n as weakly decreasing tuples.

    Parameters
    ----------
    n : int
        Nonnegative integer to partition.
    max_part : int, optional
        Upper bound on every part. Defaults to n.

    Yields
    ------
    tuple[int, ...]
        Partitions in reverse lexicographic order; `()` for n = 0.

    Examples
    --------
    >>> list(int_partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in int_partitions(n - first, first):
            yield (first,) + rest


def random_matrix(
    rows: int, cols: int, rng: Random, integral: bool = False
) -> ExactMatrix:
    """
    Draw a matrix of small rationals within the configured sampling bounds.

    With `integral`, denominators are fixed to 1.
    """
    denominator_bound = 1 if integral else SETTINGS.sampling.denominator_bound
    return ExactMatrix(
        rows,
        cols,
        tuple(
            random_rational(rng, SETTINGS.sampling.numerator_bound, denominator_bound)
            for _ in range(rows * cols)
        ),
    )


def random_invertible_matrix(
    n: int, rng: Random, integral: bool = False
) -> ExactMatrix:
    """
    Draw an invertible n×n matrix of small rationals by rejection sampling.

    Parameters
    ----------
    n : int
        Matrix dimension.
    rng : Random
        Seeded random number generator.
    integral : bool, default=False
        If True, draw integer entries only.

    Returns
    -------
    ExactMatrix
        Matrix of full rank.

    Raises
    ------
    RuntimeError
        If no invertible draw occurs within `SETTINGS.sampling.max_attempts`.
    """
    for _ in range(SETTINGS.sampling.max_attempts):
        matrix = random_matrix(n, n, rng, integral)
        if mat_rank(matrix) == n:
            return matrix
    raise RuntimeError(
        f"No invertible {n}x{n} matrix drawn in {SETTINGS.sampling.max_attempts} attempts"
    )


def random_distinct_scalars(
    count: int,
    rng: Random,
    exclude: Sequence[GaussianRational] = (),
    gaussian: bool = False,
) -> list[GaussianRational]:
    """
    Draw pairwise distinct small scalars that avoid the excluded values.

    Parameters
    ----------
    count : int
        Number of scalars.
    rng : Random
        Seeded random number generator.
    exclude : Sequence[GaussianRational], optional
        Values that must not be drawn, e.g., 0 for eigenvalues of a family.
    gaussian : bool, default=False
        If True, draw an imaginary part too.

    Returns
    -------
    list[GaussianRational]
        Scalars in the order drawn.
    """
    bounds = SETTINGS.sampling.numerator_bound, SETTINGS.sampling.denominator_bound
    values: list[GaussianRational] = []
    for _ in range(SETTINGS.sampling.max_attempts * max(count, 1)):
        if len(values) == count:
            break
        value = random_rational(rng, *bounds)
        if gaussian:
            value = value + random_rational(rng, *bounds) * GaussianRational(0, 1)
        if value not in exclude and value not in values:
            values.append(value)
    if len(values) < count:
        raise RuntimeError(f"Drew only {len(values)} of {count} distinct scalars")
    return values

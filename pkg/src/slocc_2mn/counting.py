"""
Closed-form and recursive counting of inequivalent 2×M×N classes.

Covers partition numbers, Segre-symbol counts with an explicit enumeration
oracle, restricted partitions, the F(j, r, c) recursion for the singular part
and the totals Ω(M, N).
"""

import logging
from fractions import Fraction
from functools import lru_cache

import pandas as pd
import pandera.pandas as pa
from pydantic import BaseModel, ConfigDict, computed_field, field_validator, model_validator
from tqdm import tqdm

from .exceptions import DomainError
from .storage import BaseStorage, get_storage
from .utils import int_partitions, read_data_csv
from .validation import CountSchema, OmegaCellSchema

__all__ = [
    "SegreSymbol",
    "CountTable",
    "partition_count",
    "segre_count",
    "segre_enumerate",
    "restricted_partition_count",
    "f_recursive",
    "f_convolution",
    "omega",
    "omega_total",
    "omega_cells",
    "build_table",
    "export_table",
    "published_table",
    "growth_ratios",
]

logger = logging.getLogger(__name__)

Partition = tuple[int, ...]


def _canonical_groups(groups) -> tuple[Partition, ...]:
    partitions = [tuple(sorted(group, reverse=True)) for group in groups]
    return tuple(sorted(partitions, key=lambda p: (sum(p), p), reverse=True))


class SegreSymbol(BaseModel):
    """
    Multiset of Jordan block-size partitions, one per distinct eigenvalue.

    Groups are stored in canonical order, each partition weakly decreasing and
    the partitions sorted by sum then lexicographically, both descending, so
    structural equality is symbol equality.

    Examples
    --------
    >>> str(SegreSymbol(groups=[(1,), (1, 1)]))
    '[(11)1]'
    """

    model_config = ConfigDict(frozen=True)

    groups: tuple[Partition, ...] = ()

    @field_validator("groups", mode="before")
    @classmethod
    def canonicalise(cls, value):
        groups = _canonical_groups(value)
        if any(not group or min(group) < 1 for group in groups):
            raise ValueError("Every group must be a nonempty partition of positive parts")
        return groups

    @computed_field
    @property
    def total(self) -> int:
        return sum(sum(group) for group in self.groups)

    def __str__(self) -> str:
        wide = any(part > 9 for group in self.groups for part in group)
        separator = "," if wide else ""
        tokens = [
            (
                str(group[0])
                if len(group) == 1
                else f"({separator.join(map(str, group))})"
            )
            for group in self.groups
        ]
        return f"[{separator.join(tokens)}]"


class CountTable(BaseModel):
    """
    Class counts Ω(M, N) indexed by the dimensions of the two larger parties.
    """

    model_config = ConfigDict(frozen=True)

    max_m: int
    max_n: int
    cells: dict[tuple[int, int], int]

    @model_validator(mode="after")
    def check_symmetry(self):
        for (m, n), value in self.cells.items():
            if (mirror := self.cells.get((n, m))) is not None and mirror != value:
                raise ValueError(f"Asymmetric cells ({m},{n})={value} and ({n},{m})={mirror}")
        return self

    @classmethod
    def from_frame(cls, df: pd.DataFrame) -> "CountTable":
        """
        Build a table from a wide data frame with M as index and N as columns.
        """
        cells = {
            (int(m), int(n)): int(value)
            for m, row in df.iterrows()
            for n, value in row.items()
        }
        return cls(
            max_m=max(m for m, _ in cells), max_n=max(n for _, n in cells), cells=cells
        )

    def to_frame(self) -> pd.DataFrame:
        """
        Wide frame with one row per M in 2..max_m and one column per N in 2..max_n.
        """
        rows = range(2, self.max_m + 1)
        cols = range(2, self.max_n + 1)
        df = pd.DataFrame(
            [[self.cells[(m, n)] for n in cols] for m in rows],
            index=pd.Index(rows, name="m"),
            columns=pd.Index(cols, name="n"),
        )
        return df

    @pa.check_output(CountSchema)
    def to_long(self) -> pd.DataFrame:
        """
        Long-format frame with columns `m`, `n` and `omega`.
        """
        return pd.DataFrame(
            [
                {"m": m, "n": n, "omega": value}
                for (m, n), value in sorted(self.cells.items())
            ]
        )

    def to_tsv(self) -> str:
        """
        Tab-separated table with a header row of N values.
        """
        df = self.to_frame()
        lines = ["M\\N\t" + "\t".join(map(str, df.columns))]
        lines += [
            f"{m}\t" + "\t".join(map(str, row)) for m, row in zip(df.index, df.values)
        ]
        return "\n".join(lines)

    def to_text(self) -> str:
        """
        Right-aligned plain-text table with a header row of N values.
        """
        df = self.to_frame()
        width = max(len(str(value)) for value in [*df.values.flatten(), df.columns.max(), "M\\N"])
        cell = "{:>%d}" % width
        lines = [" ".join(cell.format(value) for value in ["M\\N", *df.columns])]
        lines += [
            " ".join(cell.format(value) for value in [m, *row])
            for m, row in zip(df.index, df.values)
        ]
        return "\n".join(lines)


@lru_cache(maxsize=None)
def restricted_partition_count(n: int, m: int) -> int:
    """
    Number of partitions of n with every part at most m.

    This is the coefficient of x^n in ∏_{k=1}^{m} (1 - x^k)^{-1}, the reading
    under which the F(j, r, c) base cases reproduce the published class counts.

    Parameters
    ----------
    n : int
        Integer to partition.
    m : int
        Largest allowed part.

    Returns
    -------
    int
        f_n^(m); 1 for n = 0 and 0 for n > 0 with m = 0.

    Examples
    --------
    >>> restricted_partition_count(3, 2)
    2
    """
    if n < 0:
        return 0
    series = [1] + [0] * n
    for k in range(1, min(m, n) + 1):
        for t in range(k, n + 1):
            series[t] += series[t - k]
    return series[n]


def partition_count(n: int) -> int:
    """
    Number of partitions of n, with P(0) = 1.
    """
    return restricted_partition_count(n, n)


@lru_cache(maxsize=None)
def segre_count(n: int) -> int:
    """
    Number of Segre symbols of total size n.

    The coefficient of x^n in the truncated product ∏_{i=1}^{n} (1 - x^i)^{-P(i)}.

    Examples
    --------
    >>> [segre_count(n) for n in range(5)]
    [1, 1, 3, 6, 14]
    """
    series = [1] + [0] * n
    for i in range(1, n + 1):
        for _ in range(partition_count(i)):
            for t in range(i, n + 1):
                series[t] += series[t - i]
    return series[n]


def segre_enumerate(n: int) -> list[SegreSymbol]:
    """
    Explicitly enumerate every Segre symbol of total size n.

    Builds multisets of partitions by choosing them with replacement from the
    list of all partitions of sizes 1..n, so it is independent of the
    generating function used by `segre_count`.

    Parameters
    ----------
    n : int
        Positive total size.

    Returns
    -------
    list[SegreSymbol]
        Distinct symbols in canonical storage.
    """
    if n < 1:
        raise DomainError(f"Segre symbols are enumerated for n >= 1, got {n}")
    pool = [p for size in range(1, n + 1) for p in int_partitions(size)]
    symbols = {}
    for choice in _multisets(pool, n, 0):
        symbol = SegreSymbol(groups=choice)
        symbols[symbol.groups] = symbol
    return sorted(symbols.values(), key=lambda s: (len(s.groups), s.groups))


def _multisets(pool: list[Partition], remaining: int, start: int):
    # Nondecreasing pool indices enumerate each multiset once.
    if remaining == 0:
        yield ()
        return
    for index in range(start, len(pool)):
        size = sum(pool[index])
        if size <= remaining:
            for rest in _multisets(pool, remaining - size, index):
                yield (pool[index],) + rest


@lru_cache(maxsize=None)
def f_recursive(j: int, r: int, c: int) -> int:
    """
    Number of B-block forms with rank excess j for r row and c column blocks.

    Parameters
    ----------
    j : int
        Rank excess; negative values give 0.
    r : int
        Number of blocks of the first kind.
    c : int
        Number of blocks of the second kind.

    Returns
    -------
    int
        F(j, r, c) from the recursion
        F(j, r, c) = F(j, r, 0) + F(j, 0, c) + Σ_{m≤r} Σ_{n≤c} F(j - m - n, m, n).

    Examples
    --------
    >>> f_recursive(2, 1, 1)
    3
    """
    if j < 0:
        return 0
    if j == 0:
        return 1
    if c == 0:
        return restricted_partition_count(j, r)
    if r == 0:
        return restricted_partition_count(j, c)
    total = restricted_partition_count(j, r) + restricted_partition_count(j, c)
    for m in range(1, r + 1):
        for n in range(1, c + 1):
            total += f_recursive(j - m - n, m, n)
    return total


def f_convolution(j: int, r: int, c: int) -> int:
    """
    Closed form of F(j, r, c) as Σ_k f_k^(r) f_{j-k}^(c).

    Distributes the excess j over the two kinds of singular blocks: a pair of
    partitions with parts bounded by r and c whose sizes add up to j. Removing
    the largest part of each partition gives the recursion of `f_recursive`.
    """
    if j < 0:
        return 0
    return sum(
        restricted_partition_count(k, r) * restricted_partition_count(j - k, c)
        for k in range(j + 1)
    )


def _check_cell_domain(M: int, N: int):
    if not 2 <= M <= N <= 2 * M:
        raise DomainError(f"Expected 2 <= M <= N <= 2M, got M={M}, N={N}")


def omega(M: int, N: int, i: int, j: int) -> int:
    """
    Number of classes with i zero rows and rank excess j.

    Parameters
    ----------
    M, N : int
        Dimensions with 2 <= M <= N <= 2M.
    i : int
        Zero rows of the canonical Γ₁, 0 <= i <= (2M - N) // 3.
    j : int
        Rank excess of B, 0 <= j <= 2M - N - 3i.

    Returns
    -------
    int
        S(2M - N - 3i - j) · F(j, i, i + N - M).

    Raises
    ------
    DomainError
        If any precondition fails.
    """
    _check_cell_domain(M, N)
    if not 0 <= i <= (2 * M - N) // 3:
        raise DomainError(f"i={i} outside [0, {(2 * M - N) // 3}] for M={M}, N={N}")
    if not 0 <= j <= 2 * M - N - 3 * i:
        raise DomainError(f"j={j} outside [0, {2 * M - N - 3 * i}] for M={M}, N={N}, i={i}")
    return segre_count(2 * M - N - 3 * i - j) * f_recursive(j, i, i + N - M)


def omega_total(M: int, N: int) -> int:
    """
    Total number of true tripartite classes Ω(M, N).

    Dimensions are normalised to M <= N. N is clamped to 2M because the
    third party's local rank never exceeds 2M. The bipartite diagonal class is
    subtracted when M == N, before clamping.

    Examples
    --------
    >>> omega_total(6, 7)
    61
    >>> omega_total(2, 7)
    1
    """
    if M < 2 or N < 2:
        raise DomainError(f"Dimensions must be at least 2, got M={M}, N={N}")
    M, N = min(M, N), max(M, N)
    bipartite = int(M == N)
    N = min(N, 2 * M)
    total = sum(
        omega(M, N, i, j)
        for i in range((2 * M - N) // 3 + 1)
        for j in range(2 * M - N - 3 * i + 1)
    )
    return total - bipartite


@pa.check_output(OmegaCellSchema)
def omega_cells(M: int, N: int) -> pd.DataFrame:
    """
    Per-(i, j) breakdown of Ω(M, N) for 2 <= M <= N <= 2M.

    Returns
    -------
    pd.DataFrame
        Columns `i`, `j`, `d_j`, `segre`, `f` and `omega`, before the bipartite
        class is subtracted.
    """
    _check_cell_domain(M, N)
    rows = []
    for i in range((2 * M - N) // 3 + 1):
        for j in range(2 * M - N - 3 * i + 1):
            d_j = 2 * M - N - 3 * i - j
            rows.append(
                {
                    "i": i,
                    "j": j,
                    "d_j": d_j,
                    "segre": segre_count(d_j),
                    "f": f_recursive(j, i, i + N - M),
                    "omega": omega(M, N, i, j),
                }
            )
    return pd.DataFrame(rows)


def build_table(max_m: int, max_n: int, progress: bool = False) -> CountTable:
    """
    Fill a count table for M in 2..max_m and N in 2..max_n.

    Mirrored cells (N, M) are added as well, so both orientations can be looked up.

    Parameters
    ----------
    max_m, max_n : int
        Largest dimensions, both at least 2.
    progress : bool, default=False
        If True, display a progress bar.

    Returns
    -------
    CountTable
        Table of Ω values.
    """
    if max_m < 2 or max_n < 2:
        raise DomainError(f"Table bounds must be at least 2, got {max_m}x{max_n}")
    cells = {}
    pairs = [(m, n) for m in range(2, max_m + 1) for n in range(2, max_n + 1)]
    for m, n in tqdm(pairs, desc="Counting classes", disable=not progress):
        cells[(m, n)] = cells[(n, m)] = omega_total(m, n)
    logger.info("Built a %dx%d count table", max_m, max_n)
    return CountTable(max_m=max_m, max_n=max_n, cells=cells)


def export_table(table: CountTable, storage: BaseStorage | None = None) -> str:
    """
    Write the long-format count table as a CSV file to a storage.

    Parameters
    ----------
    table : CountTable
        Table to export.
    storage : BaseStorage, optional
        Target storage. Defaults to `get_storage()`.

    Returns
    -------
    str
        Full path to the written file.
    """
    storage = storage or get_storage()
    return storage.write_dataset(table.to_long(), name=f"omega-{table.max_m}x{table.max_n}")


def published_table() -> CountTable:
    """
    Read the published 10×10 table of class counts shipped with the package.
    """
    df = read_data_csv("table1.csv", index_col="m")
    df.columns = df.columns.astype(int)
    return CountTable.from_frame(df)


def growth_ratios(table: CountTable) -> dict[int, Fraction]:
    """
    Ratios Ω(N, N) / Ω(N - 1, N - 1) for every N available on the diagonal.
    """
    return {
        n: Fraction(table.cells[(n, n)], table.cells[(n - 1, n - 1)])
        for n in range(3, min(table.max_m, table.max_n) + 1)
    }

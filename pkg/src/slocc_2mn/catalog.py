"""
Enumeration of class families for given (M, N), explicit representatives and
cross-validation against the closed-form counts.
"""

import logging
from fractions import Fraction

import pandas as pd
import pandera.pandas as pa
from pydantic import BaseModel, ConfigDict

from .counting import SegreSymbol, omega_cells, omega_total, segre_enumerate
from .exactnum import GaussianRational
from .exceptions import DomainError
from .pencil import (
    ClassLabel,
    PencilState,
    ProjectivePoint,
    direct_sum,
    column_block,
    jordan_cell,
    row_block,
)
from .storage import BaseStorage, get_storage
from .utils import int_partitions
from .validation import CellReportSchema

__all__ = [
    "Unavailable",
    "CountCheck",
    "enumerate_labels",
    "b_form_index",
    "representative",
    "count_check",
    "catalog_document",
    "export_catalog",
]

logger = logging.getLogger(__name__)


class Unavailable(BaseModel):
    """
    Marker returned when no explicit representative is constructed for a label.
    """

    model_config = ConfigDict(frozen=True)

    reason: str


class CountCheck(BaseModel):
    """
    Comparison of enumerated labels with Ω(M, N), with a per-(i, j) breakdown.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    m: int
    n: int
    expected: int
    actual: int
    cells: pd.DataFrame

    @property
    def passed(self) -> bool:
        return self.expected == self.actual and bool(self.cells["matches"].all())


def _bounded_parts(total: int, blocks: int) -> list[tuple[int, ...]]:
    """
    Ways to spread `total` over `blocks` interchangeable blocks, padded with zeros.
    """
    return [
        partition + (0,) * (blocks - len(partition))
        for partition in int_partitions(total)
        if len(partition) <= blocks
    ]


def _singular_shapes(
    excess: int, columns: int, rows: int
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """
    Minimal-index multisets of `columns` L_ε and `rows` L_η^T blocks, all indices
    at least 1, whose indices exceed 1 by `excess` in total.

    The count equals F(excess, rows, columns).
    """
    shapes = []
    for column_excess in range(excess + 1):
        for eps in _bounded_parts(column_excess, columns):
            for eta in _bounded_parts(excess - column_excess, rows):
                shapes.append(
                    (tuple(e + 1 for e in eps), tuple(e + 1 for e in eta))
                )
    return shapes


def _check_domain(M: int, N: int):
    if not 2 <= M <= N <= 2 * M:
        raise DomainError(f"Catalogs cover 2 <= M <= N <= 2M, got M={M}, N={N}")


def _labels_by_cell(M: int, N: int) -> dict[tuple[int, int], list[ClassLabel]]:
    cells = {}
    for i in range((2 * M - N) // 3 + 1):
        for j in range(2 * M - N - 3 * i + 1):
            size = 2 * M - N - 3 * i - j
            symbols = segre_enumerate(size) if size else [SegreSymbol()]
            labels = []
            for symbol in symbols:
                if M == N and i == j == 0 and symbol.groups == ((1,) * M,):
                    continue
                for shape in _singular_shapes(j, i + N - M, i):
                    labels.append(
                        ClassLabel(
                            m_dim=M,
                            n_dim=N,
                            null_rows=i,
                            b_rank_excess=j,
                            segre_shape=symbol,
                            singular_shape=shape,
                        )
                    )
            cells[(i, j)] = labels
    return cells


def enumerate_labels(M: int, N: int) -> list[ClassLabel]:
    """
    Every class family of true tripartite 2×M×N states.

    Parameters
    ----------
    M, N : int
        Dimensions with 2 <= M <= N <= 2M.

    Returns
    -------
    list[ClassLabel]
        Labels without parameters, one per (i, j, Segre symbol, B-form). The
        bipartite diagonal label is dropped when M == N.

    Raises
    ------
    DomainError
        Outside the stated dimension range.

    Examples
    --------
    >>> len(enumerate_labels(3, 3))
    6
    """
    _check_domain(M, N)
    return [label for labels in _labels_by_cell(M, N).values() for label in labels]


def b_form_index(label: ClassLabel) -> int:
    """
    Position 1..F(j, i, i + N - M) of the label's singular shape within its (i, j) cell.
    """
    shapes = _singular_shapes(
        label.b_rank_excess, label.null_rows + label.n_dim - label.m_dim, label.null_rows
    )
    return shapes.index(label.singular_shape) + 1


def _sample_points():
    # 0, ∞, then 1, 1/2, 1/3, ... so the k-th parameter of the normal form is k + 1.
    yield ProjectivePoint.finite(0)
    yield ProjectivePoint.infinity()
    k = 1
    while True:
        yield ProjectivePoint.finite(GaussianRational(Fraction(1, k)))
        k += 1


def representative(label: ClassLabel) -> PencilState | Unavailable:
    """
    Explicit state of a label's family, or `Unavailable` when j > 0.

    The i = j = 0 part follows the diagonal examples: Jordan cells at the
    sample points 0, ∞, 1, 1/2, ... in Segre-group order, then L_1 and L_1^T
    blocks for the null rows. The regular part is laid out as the ∞ group,
    the nonzero finite groups and finally the 0 group.

    Examples
    --------
    The family with groups (11), 1, 1, 1 at (5, 5) gives
    Γ₁ = diag{0, 1, 2, 1, 1} and Γ₂ = diag{1, 1, 1, 0, 0}.
    """
    if label.b_rank_excess > 0:
        return Unavailable(
            reason=f"B-form {b_form_index(label)} with rank excess "
            f"{label.b_rank_excess} has no explicit construction"
        )
    assigned = list(zip(_sample_points(), label.segre_shape.groups))
    zero = [item for item in assigned if not item[0].is_infinite and not item[0].mu]
    infinite = [item for item in assigned if item[0].is_infinite]
    finite = [item for item in assigned if item not in zero and item not in infinite]
    blocks = [
        (size, size, *jordan_cell(point, size))
        for point, partition in infinite + finite + zero
        for size in partition
    ]
    eps, eta = label.singular_shape
    blocks += [column_block(value) for value in eps]
    blocks += [row_block(value) for value in eta]
    return direct_sum(blocks)


def count_check(M: int, N: int) -> CountCheck:
    """
    Compare the number of enumerated labels with Ω(M, N), cell by cell.

    Examples
    --------
    >>> count_check(6, 7).passed
    True
    """
    _check_domain(M, N)
    labels = _labels_by_cell(M, N)
    cells = omega_cells(M, N)
    cells["labels"] = [len(labels[(i, j)]) for i, j in zip(cells["i"], cells["j"])]
    bipartite = int(M == N)
    expected_cells = cells["omega"] - [
        bipartite if (i, j) == (0, 0) else 0 for i, j in zip(cells["i"], cells["j"])
    ]
    cells["matches"] = cells["labels"] == expected_cells
    cells = CellReportSchema.validate(cells)
    actual = int(cells["labels"].sum())
    expected = omega_total(M, N)
    logger.info("Catalog %dx%d: %d labels, %d expected", M, N, actual, expected)
    return CountCheck(m=M, n=N, expected=expected, actual=actual, cells=cells)


def catalog_document(M: int, N: int) -> dict:
    """
    JSON-ready catalog of (M, N): labels with their representatives where available.
    """
    entries = []
    for index, label in enumerate(enumerate_labels(M, N), start=1):
        rep = representative(label)
        entries.append(
            {
                "index": index,
                "b_form": b_form_index(label),
                "label": label.to_document(),
                "representative": (
                    {"unavailable": rep.reason}
                    if isinstance(rep, Unavailable)
                    else rep.to_document().model_dump()
                ),
            }
        )
    return {"m": M, "n": N, "omega": omega_total(M, N), "classes": entries}


def export_catalog(M: int, N: int, storage: BaseStorage | None = None) -> str:
    """
    Write the catalog of (M, N) as a JSON document to a storage.

    Parameters
    ----------
    M, N : int
        Dimensions with 2 <= M <= N <= 2M.
    storage : BaseStorage, optional
        Target storage. Defaults to `get_storage()`.

    Returns
    -------
    str
        Full path to the written document.
    """
    storage = storage or get_storage()
    return storage.write_document(catalog_document(M, N), name=f"catalog-{M}x{N}")

"""
Matrix-pencil view of 2×M×N states.

A state is the pair (Γ₁, Γ₂) of M×N slices, read as the pencil xΓ₁ + yΓ₂.
Local operators act by Γ'_k = Σ_j t_kj PΓ_jQ. The discrete SLOCC invariants
(minimal indices of the singular part and Jordan partitions at projective
eigenvalues) are extracted from exact ranks only; no similarity transform is
ever computed.
"""

import logging
from random import Random
from typing import TYPE_CHECKING, Self, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from .counting import SegreSymbol
from .exactnum import (
    ONE,
    ZERO,
    ExactMatrix,
    ExactPolynomial,
    GaussianRational,
    mat_det,
    mat_inverse,
    mat_rank,
    poly_gcd,
    poly_roots_exact,
)
from .exceptions import NotTrueTripartiteError, ShapeMismatchError, StructureError
from .utils import random_invertible_matrix, random_matrix
from .validation import StateDocument

if TYPE_CHECKING:
    from .nonlocal_params import ParamVector

__all__ = [
    "ProjectivePoint",
    "PencilState",
    "ILOTriple",
    "PencilStructure",
    "ClassLabel",
    "apply_ilo",
    "random_ilo",
    "moebius_image",
    "pencil_structure",
    "canonical_pencil",
    "is_true_tripartite",
    "class_label",
]

logger = logging.getLogger(__name__)

Partition = tuple[int, ...]

# Compressions tried before the eigen-polynomial gcd is declared unstable.
_MAX_COMPRESSIONS = 64


class ProjectivePoint(BaseModel):
    """
    Point (μ:ν) of the projective line, stored with ν = 1 or, at infinity, μ = 1.

    The pencil has the eigenvalue (μ:ν) when νΓ₂ - μΓ₁ drops below the normal rank.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    mu: GaussianRational
    nu: GaussianRational

    @model_validator(mode="before")
    @classmethod
    def normalise(cls, data):
        if isinstance(data, dict):
            mu = GaussianRational.coerce(data.get("mu", ZERO))
            nu = GaussianRational.coerce(data.get("nu", ONE))
            if not mu and not nu:
                raise ValueError("A projective point needs a nonzero coordinate")
            data = {"mu": mu / nu, "nu": ONE} if nu else {"mu": ONE, "nu": ZERO}
        return data

    @classmethod
    def finite(cls, value: GaussianRational | int | str) -> Self:
        return cls(mu=GaussianRational.coerce(value), nu=ONE)

    @classmethod
    def infinity(cls) -> Self:
        return cls(mu=ONE, nu=ZERO)

    @property
    def is_infinite(self) -> bool:
        return not self.nu

    @property
    def value(self) -> GaussianRational:
        if self.is_infinite:
            raise ValueError("The point at infinity has no finite value")
        return self.mu

    def sort_key(self) -> tuple:
        return (self.is_infinite, self.mu.sort_key())

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.mu)


class PencilState(BaseModel):
    """
    Pure 2×M×N state given by the two M×N slices of its coefficient tensor.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m_dim: int
    n_dim: int
    gamma1: ExactMatrix
    gamma2: ExactMatrix

    @model_validator(mode="after")
    def check_shapes(self):
        if self.m_dim < 2 or self.n_dim < 2:
            raise ValueError(f"Dimensions must be at least 2, got {self.m_dim}x{self.n_dim}")
        for name in ("gamma1", "gamma2"):
            if getattr(self, name).shape != (self.m_dim, self.n_dim):
                raise ShapeMismatchError(
                    f"`{name}` must be {self.m_dim}x{self.n_dim}, got {getattr(self, name).shape}"
                )
        return self

    @classmethod
    def from_matrices(cls, gamma1: ExactMatrix, gamma2: ExactMatrix) -> Self:
        return cls(m_dim=gamma1.rows, n_dim=gamma1.cols, gamma1=gamma1, gamma2=gamma2)

    @classmethod
    def from_document(cls, document: StateDocument) -> Self:
        """
        Build a state from its validated JSON document.
        """
        return cls(
            m_dim=document.m,
            n_dim=document.n,
            gamma1=ExactMatrix.from_rows(document.gamma1),
            gamma2=ExactMatrix.from_rows(document.gamma2),
        )

    def to_document(self) -> StateDocument:
        return StateDocument(
            m=self.m_dim,
            n=self.n_dim,
            gamma1=self.gamma1.to_strings(),
            gamma2=self.gamma2.to_strings(),
        )

    def evaluate(self, point: ProjectivePoint) -> ExactMatrix:
        """
        Pencil matrix νΓ₂ - μΓ₁ at a projective point.
        """
        return self.gamma2 * point.nu - self.gamma1 * point.mu

    def transpose(self) -> Self:
        return PencilState.from_matrices(self.gamma1.transpose(), self.gamma2.transpose())


class ILOTriple(BaseModel):
    """
    Invertible local operators T (2×2), P (M×M) and Q (N×N).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t: ExactMatrix
    p: ExactMatrix
    q: ExactMatrix

    @model_validator(mode="after")
    def check_invertible(self):
        if self.t.shape != (2, 2):
            raise ShapeMismatchError(f"T must be 2x2, got {self.t.shape}")
        for name in ("t", "p", "q"):
            matrix = getattr(self, name)
            if not matrix.is_square:
                raise ShapeMismatchError(f"`{name}` must be square, got {matrix.shape}")
            if mat_rank(matrix) < matrix.rows:
                raise ValueError(f"`{name}` is not invertible")
        return self

    @classmethod
    def identity(cls, m_dim: int, n_dim: int) -> Self:
        return cls(
            t=ExactMatrix.identity(2),
            p=ExactMatrix.identity(m_dim),
            q=ExactMatrix.identity(n_dim),
        )

    def inverse(self) -> Self:
        return ILOTriple(
            t=mat_inverse(self.t), p=mat_inverse(self.p), q=mat_inverse(self.q)
        )


def apply_ilo(s: PencilState, op: ILOTriple) -> PencilState:
    """
    Apply local operators to a state: Γ'_k = Σ_j t_kj · P Γ_j Q.

    Parameters
    ----------
    s : PencilState
        Input state.
    op : ILOTriple
        Operators with P of size M and Q of size N.

    Returns
    -------
    PencilState
        Transformed state; applying `op.inverse()` restores `s` exactly.

    Raises
    ------
    ShapeMismatchError
        If the operator sizes do not match the state.
    """
    if op.p.rows != s.m_dim or op.q.rows != s.n_dim:
        raise ShapeMismatchError(
            f"Operators of sizes {op.p.rows} and {op.q.rows} do not act on a "
            f"{s.m_dim}x{s.n_dim} state"
        )
    first = op.p @ s.gamma1 @ op.q
    second = op.p @ s.gamma2 @ op.q
    return PencilState.from_matrices(
        first * op.t[0, 0] + second * op.t[0, 1],
        first * op.t[1, 0] + second * op.t[1, 1],
    )


def random_ilo(
    m_dim: int, n_dim: int, rng: Random, integral: bool = False
) -> ILOTriple:
    """
    Draw invertible local operators with small rational entries.

    With `integral`, every entry is an integer.
    """
    return ILOTriple(
        t=random_invertible_matrix(2, rng, integral),
        p=random_invertible_matrix(m_dim, rng, integral),
        q=random_invertible_matrix(n_dim, rng, integral),
    )


def moebius_image(point: ProjectivePoint, t: ExactMatrix) -> ProjectivePoint:
    """
    Image of an eigenvalue under the action induced by the qubit operator T.

    Finite eigenvalues move as λ' = (t21 + t22 λ) / (t11 + t12 λ).
    """
    return ProjectivePoint(
        mu=t[1, 0] * point.nu + t[1, 1] * point.mu,
        nu=t[0, 0] * point.nu + t[0, 1] * point.mu,
    )


class PencilStructure(BaseModel):
    """
    Kronecker-type invariants of a pencil.

    Column blocks L_ε are ε×(ε+1), row blocks L_η^T are (η+1)×η and the regular
    part carries Jordan partitions at pairwise distinct projective eigenvalues.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m_dim: int
    n_dim: int
    col_min_indices: tuple[int, ...] = ()
    row_min_indices: tuple[int, ...] = ()
    eigen_groups: tuple[tuple[ProjectivePoint, Partition], ...] = ()

    @model_validator(mode="after")
    def check_bookkeeping(self):
        points = [point for point, _ in self.eigen_groups]
        if len(set(points)) != len(points):
            raise StructureError("Eigenvalues must be pairwise distinct")
        regular = self.regular_degree
        rows = sum(self.col_min_indices) + sum(eta + 1 for eta in self.row_min_indices)
        cols = sum(eps + 1 for eps in self.col_min_indices) + sum(self.row_min_indices)
        if (rows + regular, cols + regular) != (self.m_dim, self.n_dim):
            raise StructureError(
                f"Blocks account for {rows + regular}x{cols + regular}, "
                f"expected {self.m_dim}x{self.n_dim}"
            )
        return self

    @property
    def regular_degree(self) -> int:
        return sum(sum(partition) for _, partition in self.eigen_groups)

    @property
    def normal_rank(self) -> int:
        return self.n_dim - len(self.col_min_indices)

    @property
    def segre_symbol(self) -> SegreSymbol:
        return SegreSymbol(groups=[partition for _, partition in self.eigen_groups])


def _block_matrix(
    blocks: dict[tuple[int, int], ExactMatrix],
    block_rows: int,
    block_cols: int,
    rows: int,
    cols: int,
) -> ExactMatrix:
    """
    Assemble a block matrix of rows×cols blocks; missing blocks are zero.
    """
    grid = [[ZERO] * (block_cols * cols) for _ in range(block_rows * rows)]
    for (r, c), block in blocks.items():
        for i in range(rows):
            row = block.row(i)
            grid[r * rows + i][c * cols : (c + 1) * cols] = row
    return ExactMatrix.from_rows(grid)


def _normal_rank(s: PencilState) -> int:
    # At most min(M, N) points drop the rank, so one of these samples is generic.
    samples = [s.gamma1] + [
        s.gamma2 - s.gamma1 * t for t in range(min(s.m_dim, s.n_dim) + 1)
    ]
    return max(map(mat_rank, samples))


def _column_indices(s: PencilState, count: int) -> tuple[int, ...]:
    """
    Column minimal indices from the null spaces of the block-bidiagonal matrices.

    Polynomial kernel vectors of degree k of Γ₂ - λΓ₁ span a space of dimension
    Σ_{ε<=k} (k - ε + 1), so first differences count the indices up to k.
    """
    if count == 0:
        return ()
    indices: list[int] = []
    previous_null = previous_step = 0
    for k in range(s.n_dim + 1):
        blocks = {}
        for c in range(k + 1):
            blocks[(c, c)] = s.gamma2
            blocks[(c + 1, c)] = -s.gamma1
        toeplitz = _block_matrix(blocks, k + 2, k + 1, s.m_dim, s.n_dim)
        null = (k + 1) * s.n_dim - mat_rank(toeplitz)
        step = null - previous_null
        indices += [k] * (step - previous_step)
        if step == count:
            return tuple(sorted(indices, reverse=True))
        previous_null, previous_step = null, step
    raise StructureError(f"Column minimal indices did not stabilise at {count} blocks")


def _local_partition(s: PencilState, point: ProjectivePoint, columns: int) -> Partition:
    """
    Jordan partition at a point from null dimensions of local block-Toeplitz matrices.

    Along the line P0 + t·P1 through the point, the truncated Toeplitz matrix
    W_k has nullity columns·k + Σ min(k, m_i), so each step beyond the column
    blocks counts the Jordan blocks of size at least k.
    """
    base = s.evaluate(point)
    slope = s.gamma2 if point.is_infinite else -s.gamma1
    at_least: list[int] = []
    previous_null = 0
    k = 1
    while True:
        blocks = {(c, c): base for c in range(k)}
        blocks |= {(c + 1, c): slope for c in range(k - 1)}
        toeplitz = _block_matrix(blocks, k, k, s.m_dim, s.n_dim)
        null = k * s.n_dim - mat_rank(toeplitz)
        count = null - previous_null - columns
        if count <= 0:
            break
        at_least.append(count)
        previous_null = null
        k += 1
    at_least.append(0)
    partition = []
    for size in range(len(at_least) - 1, 0, -1):
        partition += [size] * (at_least[size - 1] - at_least[size])
    return tuple(partition)


def _determinant_polynomial(a: ExactMatrix, b: ExactMatrix) -> ExactPolynomial:
    """
    det(a - λb) for square a, b, by evaluation and interpolation.
    """
    nodes = [GaussianRational(k) for k in range(a.rows + 1)]
    values = [mat_det(a - b * node) for node in nodes]
    return ExactPolynomial.interpolate(nodes, values)


def _eigen_polynomial(s: PencilState, rank: int, degree: int) -> ExactPolynomial:
    """
    Monic polynomial whose roots are the finite eigenvalues with algebraic multiplicity.

    For square regular pencils this is det(Γ₂ - λΓ₁). Otherwise every r×r
    compression U(Γ₂ - λΓ₁)V has a determinant divisible by the product of the
    invariant factors, and the gcd of seeded random compressions reaches it once
    its degree drops to the finite regular degree.
    """
    if degree == 0:
        return ExactPolynomial((ONE,))
    if s.m_dim == s.n_dim == rank:
        polynomial = _determinant_polynomial(s.gamma2, s.gamma1).monic()
        if polynomial.degree != degree:
            raise StructureError(
                f"Determinant has degree {polynomial.degree}, expected {degree}"
            )
        return polynomial
    rng = Random(rank * 7919 + degree)
    current = None
    for attempt in range(_MAX_COMPRESSIONS):
        left = random_matrix(rank, s.m_dim, rng, integral=True)
        right = random_matrix(s.n_dim, rank, rng, integral=True)
        candidate = _determinant_polynomial(left @ s.gamma2 @ right, left @ s.gamma1 @ right)
        if candidate.is_zero:
            continue
        current = candidate.monic() if current is None else poly_gcd(current, candidate)
        if current.degree == degree:
            logger.debug("Eigen-polynomial settled after %d compressions", attempt + 1)
            return current
        if current.degree < degree:
            break
    raise StructureError(f"Could not isolate an eigen-polynomial of degree {degree}")


def pencil_structure(s: PencilState) -> PencilStructure:
    """
    Compute the Kronecker-type structure of the pencil xΓ₁ + yΓ₂ by exact ranks.

    Parameters
    ----------
    s : PencilState
        Any state.

    Returns
    -------
    PencilStructure
        Minimal indices of both kinds and the Jordan partition at each
        projective eigenvalue, sorted with finite points first.

    Raises
    ------
    IrreducibleRemainderError
        If an eigenvalue is not a Gaussian rational.
    StructureError
        If the block sizes do not account for the dimensions.
    """
    rank = _normal_rank(s)
    columns, rows = s.n_dim - rank, s.m_dim - rank
    col_indices = _column_indices(s, columns)
    row_indices = _column_indices(s.transpose(), rows)
    regular = rank - sum(col_indices) - sum(row_indices)

    groups: list[tuple[ProjectivePoint, Partition]] = []
    infinity = ProjectivePoint.infinity()
    infinite_degree = 0
    if mat_rank(s.gamma1) < rank:
        partition = _local_partition(s, infinity, columns)
        infinite_degree = sum(partition)
        groups.append((infinity, partition))

    polynomial = _eigen_polynomial(s, rank, regular - infinite_degree)
    if polynomial.degree > 0:
        for root, multiplicity in poly_roots_exact(polynomial):
            point = ProjectivePoint.finite(root)
            partition = _local_partition(s, point, columns)
            if sum(partition) != multiplicity:
                raise StructureError(
                    f"Jordan blocks at {point} sum to {sum(partition)}, "
                    f"expected multiplicity {multiplicity}"
                )
            groups.append((point, partition))

    groups.sort(key=lambda group: group[0].sort_key())
    logger.debug(
        "Structure of %dx%d pencil: rank=%d, eps=%s, eta=%s, groups=%d",
        s.m_dim,
        s.n_dim,
        rank,
        col_indices,
        row_indices,
        len(groups),
    )
    return PencilStructure(
        m_dim=s.m_dim,
        n_dim=s.n_dim,
        col_min_indices=col_indices,
        row_min_indices=row_indices,
        eigen_groups=tuple(groups),
    )


def jordan_cell(point: ProjectivePoint, size: int) -> tuple[list[list], list[list]]:
    """
    Γ₁ and Γ₂ blocks of a single Jordan cell of the given size at a point.
    """
    identity = [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]
    shift = [[ONE if j == i + 1 else ZERO for j in range(size)] for i in range(size)]
    if point.is_infinite:
        return shift, identity
    if not point.mu:
        return identity, shift
    scale = ONE / point.mu
    first = [[value * scale for value in row] for row in identity]
    second = [
        [a + b for a, b in zip(row_i, row_s)] for row_i, row_s in zip(identity, shift)
    ]
    return first, second


def direct_sum(
    blocks: Sequence[tuple[int, int, list[list], list[list]]],
) -> PencilState:
    """
    Direct sum of pencil blocks; zero-height or zero-width blocks shift offsets only.
    """
    rows = sum(block[0] for block in blocks)
    cols = sum(block[1] for block in blocks)
    first = [[ZERO] * cols for _ in range(rows)]
    second = [[ZERO] * cols for _ in range(rows)]
    row_offset = col_offset = 0
    for height, width, part1, part2 in blocks:
        for i in range(height):
            first[row_offset + i][col_offset : col_offset + width] = part1[i]
            second[row_offset + i][col_offset : col_offset + width] = part2[i]
        row_offset += height
        col_offset += width
    return PencilState.from_matrices(
        ExactMatrix.from_rows(first), ExactMatrix.from_rows(second)
    )


def column_block(eps: int) -> tuple[int, int, list[list], list[list]]:
    first = [[ONE if j == i else ZERO for j in range(eps + 1)] for i in range(eps)]
    second = [[ONE if j == i + 1 else ZERO for j in range(eps + 1)] for i in range(eps)]
    return eps, eps + 1, first, second


def row_block(eta: int) -> tuple[int, int, list[list], list[list]]:
    first = [[ONE if i == j else ZERO for j in range(eta)] for i in range(eta + 1)]
    second = [[ONE if i == j + 1 else ZERO for j in range(eta)] for i in range(eta + 1)]
    return eta + 1, eta, first, second


def canonical_pencil(structure: PencilStructure) -> PencilState:
    """
    Kronecker reconstruction of a pencil with the given structure.

    The regular part comes first, one Jordan cell per part in the order of the
    eigen groups, followed by the L_ε blocks and then the L_η^T blocks.
    `pencil_structure` of the result equals `structure`.
    """
    blocks = []
    for point, partition in structure.eigen_groups:
        for size in partition:
            blocks.append((size, size, *jordan_cell(point, size)))
    blocks += [column_block(eps) for eps in structure.col_min_indices]
    blocks += [row_block(eta) for eta in structure.row_min_indices]
    return direct_sum(blocks)


def is_true_tripartite(s: PencilState) -> bool:
    """
    Decide whether a state carries genuine 2×M×N tripartite entanglement.

    A state fails when Γ₁ and Γ₂ are linearly dependent, or when the slices
    leave a row or column unused by both, which is rank [Γ₁ Γ₂] < M or
    rank [Γ₁; Γ₂] < N. A pencil with one eigenvalue carrying only 1×1 blocks
    and no singular part has Γ₂ ∝ Γ₁ up to equivalence, so the bipartite
    case is caught by the dependence test.
    """
    flat = ExactMatrix(2, s.m_dim * s.n_dim, s.gamma1.entries + s.gamma2.entries)
    if mat_rank(flat) < 2:
        return False
    if mat_rank(s.gamma1.hstack(s.gamma2)) < s.m_dim:
        return False
    return mat_rank(s.gamma1.vstack(s.gamma2)) == s.n_dim


class ClassLabel(BaseModel):
    """
    Complete SLOCC invariant of a true tripartite state.

    Two states are equivalent exactly when their labels are equal. Labels
    with `params=None` name a whole family of classes that differ only in
    their nonlocal parameters.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m_dim: int
    n_dim: int
    null_rows: int
    b_rank_excess: int
    segre_shape: SegreSymbol
    singular_shape: tuple[tuple[int, ...], tuple[int, ...]]
    params: "ParamVector | None" = None

    @property
    def family(self) -> Self:
        """
        The label with its nonlocal parameters dropped.
        """
        return self.model_copy(update={"params": None})

    def to_document(self) -> dict:
        """
        JSON-ready form of the label.
        """
        return {
            "m": self.m_dim,
            "n": self.n_dim,
            "null_rows": self.null_rows,
            "b_rank_excess": self.b_rank_excess,
            "segre": str(self.segre_shape),
            "segre_groups": [list(group) for group in self.segre_shape.groups],
            "col_min_indices": list(self.singular_shape[0]),
            "row_min_indices": list(self.singular_shape[1]),
            "params": None if self.params is None else self.params.format(),
        }


def _eigen_classes(structure: PencilStructure) -> list[list[ProjectivePoint]]:
    """
    Eigenvalues grouped by Jordan partition, the groups ordered by (size, partition).
    """
    classes: dict[Partition, list[ProjectivePoint]] = {}
    for point, partition in structure.eigen_groups:
        classes.setdefault(partition, []).append(point)
    ordered = sorted(classes.items(), key=lambda item: (len(item[1]), item[0]))
    return [points for _, points in ordered]


def label_from_structure(structure: PencilStructure) -> ClassLabel:
    """
    Assemble the class label of a true tripartite pencil from its structure.
    """
    from .nonlocal_params import canonical_configuration

    columns = len(structure.col_min_indices)
    rows = len(structure.row_min_indices)
    excess = sum(structure.col_min_indices) + sum(structure.row_min_indices)
    return ClassLabel(
        m_dim=structure.m_dim,
        n_dim=structure.n_dim,
        null_rows=min(columns, rows),
        b_rank_excess=excess - columns - rows,
        segre_shape=structure.segre_symbol,
        singular_shape=(structure.col_min_indices, structure.row_min_indices),
        params=canonical_configuration(_eigen_classes(structure)),
    )


def class_label(s: PencilState) -> ClassLabel:
    """
    Classify a true tripartite state.

    Parameters
    ----------
    s : PencilState
        State to classify.

    Returns
    -------
    ClassLabel
        Null rows i, rank excess j, Segre shape, minimal indices and, when at
        least three eigenvalues exist, the canonical nonlocal parameters.

    Raises
    ------
    NotTrueTripartiteError
        If the state is not true tripartite.
    IrreducibleRemainderError
        If an eigenvalue is not a Gaussian rational.
    """
    if not is_true_tripartite(s):
        raise NotTrueTripartiteError(
            f"The {s.m_dim}x{s.n_dim} state is not true tripartite entangled"
        )
    return label_from_structure(pencil_structure(s))


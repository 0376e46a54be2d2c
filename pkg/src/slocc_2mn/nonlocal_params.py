"""
Nonlocal cross-ratio parameters of diagonalisable families and their residual symmetry.

The family with distinct nonzero eigenvalues λ_1..λ_m and N - m zero
eigenvalues reduces to a normal form whose m - 2 parameters are cross ratios.
Relabelling the eigenvalues acts on those parameters through the generators
A_i, F, G and, when N = m + 1, H. Canonical parameters are the minimum of the
generated orbit.
"""

import logging
from itertools import permutations, product
from random import Random
from typing import Callable, Iterable, Self, Sequence

import pandas as pd
import pandera.pandas as pa
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .exactnum import ONE, ZERO, ExactMatrix, GaussianRational, random_rational
from .exceptions import (
    DegenerateConfigurationError,
    DomainError,
    HNotApplicableError,
    IndexOutOfRangeError,
    InvalidFamilyError,
    ParseError,
)
from .pencil import ClassLabel, ILOTriple, PencilState, ProjectivePoint
from .settings import SETTINGS
from .validation import RelationReportSchema

__all__ = [
    "ParamVector",
    "SymmetryElement",
    "cross_ratio",
    "reduce_to_normal_form",
    "family_state",
    "normal_form_state",
    "gen_swap",
    "gen_f",
    "gen_g",
    "gen_h",
    "apply_word",
    "orbit",
    "canonical_params",
    "canonical_configuration",
    "slocc_equivalent_params",
    "verify_group_relations",
    "random_params",
    "anharmonic_orbit",
]

logger = logging.getLogger(__name__)


class ParamVector(BaseModel):
    """
    Nonlocal parameters λ^(1..m-2) of a family with m distinct nonzero eigenvalues.

    Examples
    --------
    >>> ParamVector.parse("[4/3, 3/2]", extra_h=True).format()
    '[4/3, 3/2]'
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: tuple[GaussianRational, ...] = ()
    m: int
    extra_h: bool = False

    @field_validator("values", mode="before")
    @classmethod
    def coerce_values(cls, value):
        return tuple(map(GaussianRational.coerce, value))

    @model_validator(mode="after")
    def check_values(self):
        if self.m < 2 or len(self.values) != self.m - 2:
            raise ValueError(f"Expected m - 2 = {self.m - 2} values, got {len(self.values)}")
        if any(value in (ZERO, ONE) for value in self.values):
            raise ValueError("Parameters must avoid 0 and 1")
        if len(set(self.values)) != len(self.values):
            raise ValueError("Parameters must be pairwise distinct")
        return self

    @classmethod
    def parse(cls, text: str, m: int | None = None, extra_h: bool = False) -> Self:
        """
        Parse the bracketed form, e.g. `'[4/3, 3/2]'`.

        Parameters
        ----------
        text : str
            Comma-separated exact literals in square brackets.
        m : int, optional
            Number of source eigenvalues. Defaults to the vector length plus 2.
        extra_h : bool, default=False
            Whether the H generator is active.

        Raises
        ------
        ParseError
            If the brackets or any literal are malformed.
        """
        value = text.strip()
        if not (value.startswith("[") and value.endswith("]")):
            raise ParseError(f"Parameter vectors are written in brackets, got '{text}'")
        inner = value[1:-1].strip()
        values = [GaussianRational.parse(item) for item in inner.split(",")] if inner else []
        return cls(values=values, m=len(values) + 2 if m is None else m, extra_h=extra_h)

    def format(self) -> str:
        return "[" + ", ".join(map(str, self.values)) + "]"

    def sort_key(self) -> tuple:
        return tuple(value.sort_key() for value in self.values)

    def __str__(self) -> str:
        return self.format()


class SymmetryElement(BaseModel):
    """
    Word over the generators `A1`, `A2`, ..., `F`, `G` and `H`.

    Words compose right to left, so `("F", "G")` is F∘G.
    """

    model_config = ConfigDict(frozen=True)

    word: tuple[str, ...] = ()

    @field_validator("word")
    @classmethod
    def check_letters(cls, word):
        for letter in word:
            if letter not in ("F", "G", "H") and not (
                letter.startswith("A") and letter[1:].isdigit() and int(letter[1:]) >= 1
            ):
                raise ValueError(f"Unknown generator '{letter}'")
        return word


def _det(p: ProjectivePoint, q: ProjectivePoint) -> GaussianRational:
    return p.mu * q.nu - q.mu * p.nu


def cross_ratio(
    a: ProjectivePoint, b: ProjectivePoint, c: ProjectivePoint, d: ProjectivePoint
) -> GaussianRational:
    """
    Cross ratio of four distinct points of the projective line.

    Normalised so that `cross_ratio(0, λ1, λ2, λk)` equals
    (λ2 / λk) · (λ1 - λk) / (λ1 - λ2). Homogeneous coordinates make points at
    infinity need no special case.

    Raises
    ------
    DegenerateConfigurationError
        If two of the points coincide.

    Examples
    --------
    >>> P = ProjectivePoint.finite
    >>> cross_ratio(P(0), P(1), P(2), P(3))
    GaussianRational('4/3')
    """
    if len({a, b, c, d}) != 4:
        raise DegenerateConfigurationError("Cross ratio needs four distinct points")
    return (_det(b, d) * _det(c, a)) / (_det(b, c) * _det(d, a))


def _check_family(eigs: Sequence[GaussianRational], n_dim: int) -> list[GaussianRational]:
    eigs = list(map(GaussianRational.coerce, eigs))
    if len(eigs) < 2:
        raise InvalidFamilyError(f"A family needs at least 2 eigenvalues, got {len(eigs)}")
    if any(not value for value in eigs):
        raise InvalidFamilyError("Eigenvalues of the family must be nonzero")
    if len(set(eigs)) != len(eigs):
        raise InvalidFamilyError("Eigenvalues of the family must be pairwise distinct")
    if len(eigs) >= n_dim:
        raise InvalidFamilyError(
            f"The normal form needs m < N, got m={len(eigs)} and N={n_dim}"
        )
    return eigs


def family_state(eigs: Sequence[GaussianRational], n_dim: int) -> PencilState:
    """
    State (E, J) with E the identity and J = diag{λ_1, ..., λ_m, 0, ..., 0}.
    """
    eigs = _check_family(eigs, n_dim)
    return PencilState.from_matrices(
        ExactMatrix.identity(n_dim),
        ExactMatrix.diag(eigs + [ZERO] * (n_dim - len(eigs))),
    )


def normal_form_state(params: ParamVector, n_dim: int) -> PencilState:
    """
    Normal form (E', J') = (diag{0, 1, λ^(1), ..., 1, ...}, diag{1, ..., 1, 0, ...}).

    J' has m ones followed by N - m zeros.
    """
    if params.m >= n_dim:
        raise InvalidFamilyError(f"The normal form needs m < N, got m={params.m}, N={n_dim}")
    rest = n_dim - params.m
    return PencilState.from_matrices(
        ExactMatrix.diag([ZERO, ONE, *params.values] + [ONE] * rest),
        ExactMatrix.diag([ONE] * params.m + [ZERO] * rest),
    )


def reduce_to_normal_form(
    eigs: Sequence[GaussianRational], n_dim: int
) -> tuple[ParamVector, ILOTriple]:
    """
    Reduce the family with eigenvalues λ_1..λ_m to its normal form.

    Parameters
    ----------
    eigs : Sequence[GaussianRational]
        Distinct nonzero eigenvalues, at least 2.
    n_dim : int
        Dimension N; the family carries N - m zero eigenvalues.

    Returns
    -------
    tuple[ParamVector, ILOTriple]
        Parameters λ^(i) = (λ1 - λ_{i+2}) / (λ1 - λ2) · λ2 / λ_{i+2} and the
        operators mapping `family_state(eigs, n_dim)` onto
        `normal_form_state(params, n_dim)`.

    Raises
    ------
    InvalidFamilyError
        If eigenvalues repeat, include 0, or m >= N. The case m = N has no
        zero eigenvalue to anchor the cross ratios.

    Examples
    --------
    >>> reduce_to_normal_form([1, 2, 3], 5)[0].format()
    '[4/3]'
    """
    eigs = _check_family(eigs, n_dim)
    first, second, rest = eigs[0], eigs[1], eigs[2:]
    m = len(eigs)
    params = ParamVector(
        values=[(first - value) / (first - second) * (second / value) for value in rest],
        m=m,
        extra_h=n_dim == m + 1,
    )
    gap = first - second
    t = ExactMatrix.from_rows(
        [[second / gap, -second / (first * gap)], [ZERO, ONE / first]]
    )
    p = ExactMatrix.diag(
        [ONE, first / second]
        + [first / value for value in rest]
        + [gap / second] * (n_dim - m)
    )
    return params, ILOTriple(t=t, p=p, q=ExactMatrix.identity(n_dim))


def gen_swap(v: ParamVector, i: int) -> ParamVector:
    """
    A_i: exchange entries i and i+1 (1-based), for 1 <= i <= m - 3.
    """
    if not 1 <= i <= v.m - 3:
        raise IndexOutOfRangeError(f"A_{i} is undefined for m={v.m}")
    values = list(v.values)
    values[i - 1], values[i] = values[i], values[i - 1]
    return v.model_copy(update={"values": tuple(values)})


def gen_f(v: ParamVector) -> ParamVector:
    """
    F: (λ^(1)/λ^(m-2), ..., λ^(m-3)/λ^(m-2), 1/λ^(m-2)); identity on the empty vector.
    """
    if not v.values:
        return v
    last = v.values[-1]
    values = tuple(value / last for value in v.values[:-1]) + (ONE / last,)
    return v.model_copy(update={"values": values})


def gen_g(v: ParamVector) -> ParamVector:
    """
    G: componentwise 1 - λ.
    """
    return v.model_copy(update={"values": tuple(ONE - value for value in v.values)})


def gen_h(v: ParamVector) -> ParamVector:
    """
    H: componentwise 1/λ, active only when N = m + 1.

    Raises
    ------
    HNotApplicableError
        If `v.extra_h` is False.
    """
    if not v.extra_h:
        raise HNotApplicableError("H only acts on families with N = m + 1")
    return v.model_copy(update={"values": tuple(ONE / value for value in v.values)})


def _letter(letter: str) -> Callable[[ParamVector], ParamVector]:
    match letter:
        case "F":
            return gen_f
        case "G":
            return gen_g
        case "H":
            return gen_h
        case _:
            index = int(letter[1:])
            return lambda v: gen_swap(v, index)


def apply_word(v: ParamVector, word: SymmetryElement | Iterable[str]) -> ParamVector:
    """
    Apply a generator word, rightmost letter first.

    Examples
    --------
    >>> apply_word(ParamVector(values=[3], m=3), ["F", "G"]).format()
    '[-1/2]'
    """
    letters = word.word if isinstance(word, SymmetryElement) else tuple(word)
    for letter in reversed(SymmetryElement(word=letters).word):
        v = _letter(letter)(v)
    return v


def _generators(v: ParamVector) -> list[tuple[str, Callable[[ParamVector], ParamVector]]]:
    """
    Named generators σ_1..σ_{m-1} (and σ_m = H) in Coxeter order.
    """
    generators = [(f"A{i}", _letter(f"A{i}")) for i in range(1, v.m - 2)]
    generators += [("F", gen_f), ("G", gen_g)]
    if v.extra_h:
        generators.append(("H", gen_h))
    return generators


def orbit(v: ParamVector) -> set[ParamVector]:
    """
    Breadth-first closure of {v} under every applicable generator.

    Examples
    --------
    >>> sorted(w.format() for w in orbit(ParamVector(values=[2], m=3)))
    ['[-1]', '[1/2]', '[2]']
    """
    generators = [function for _, function in _generators(v)]
    seen = {v}
    frontier = [v]
    while frontier:
        boundary = []
        for current in frontier:
            for generator in generators:
                image = generator(current)
                if image not in seen:
                    seen.add(image)
                    boundary.append(image)
        frontier = boundary
    return seen


def canonical_params(v: ParamVector) -> ParamVector:
    """
    Orbit member minimal under lexicographic (real, imaginary) order.
    """
    return min(orbit(v), key=ParamVector.sort_key)


def slocc_equivalent_params(a: ParamVector, b: ParamVector) -> bool:
    """
    True iff both vectors come from the same family type and share an orbit.
    """
    return (
        a.m == b.m
        and a.extra_h == b.extra_h
        and canonical_params(a) == canonical_params(b)
    )


def canonical_configuration(
    classes: Sequence[Sequence[ProjectivePoint]],
) -> ParamVector | None:
    """
    Canonical cross ratios of labelled eigenvalues, invariant under Möbius maps.

    Points in the same class carry the same Jordan partition and may be
    permuted freely; classes keep their given order. A frame (q0, q1, q2) is
    the first three points of a class-respecting ordering, and the remaining
    points give the parameters. Once the frame is fixed, the lexicographic
    minimum sorts each class's leftover parameters, so only ordered frames
    are enumerated, O(n⁴) in the number of points.

    Parameters
    ----------
    classes : Sequence[Sequence[ProjectivePoint]]
        Pairwise disjoint point classes in canonical class order.

    Returns
    -------
    ParamVector or None
        None for fewer than 3 points. A single class, or a singleton class
        followed by one other class, is the normal-form family; the result
        then equals `canonical_params` of its parameters, with H active for a
        single class.
    """
    classes = [sorted(points, key=ProjectivePoint.sort_key) for points in classes]
    points = [point for points in classes for point in points]
    if len(points) < 3:
        return None
    takes, needed = [], 3
    for members in classes:
        takes.append(min(len(members), needed))
        needed -= takes[-1]
    best = None
    for choice in product(
        *(permutations(members, take) for members, take in zip(classes, takes))
    ):
        q0, q1, q2 = [point for chosen in choice for point in chosen]
        values: list[GaussianRational] = []
        for members, chosen in zip(classes, choice):
            segment = [cross_ratio(q0, q1, q2, q) for q in members if q not in chosen]
            values += sorted(segment, key=GaussianRational.sort_key)
        key = tuple(value.sort_key() for value in values)
        if best is None or key < best[0]:
            best = (key, values)
    return ParamVector(
        values=best[1],
        m=len(points) - 1,
        extra_h=len(classes) == 1,
    )


def random_params(m: int, extra_h: bool, rng: Random) -> ParamVector:
    """
    Draw a valid parameter vector of m - 2 distinct small rationals outside {0, 1}.
    """
    values: list[GaussianRational] = []
    while len(values) < m - 2:
        value = random_rational(
            rng, SETTINGS.sampling.numerator_bound, SETTINGS.sampling.denominator_bound
        )
        if value not in (ZERO, ONE) and value not in values:
            values.append(value)
    return ParamVector(values=values, m=m, extra_h=extra_h)


def anharmonic_orbit(value: GaussianRational) -> list[GaussianRational]:
    """
    The six cross ratios λ, 1/λ, 1-λ, 1/(1-λ), (λ-1)/λ and λ/(λ-1).
    """
    value = GaussianRational.coerce(value)
    if value in (ZERO, ONE):
        raise DegenerateConfigurationError("The anharmonic orbit needs λ outside {0, 1}")
    return [
        value,
        ONE / value,
        ONE - value,
        ONE / (ONE - value),
        (value - ONE) / value,
        value / (value - ONE),
    ]


@pa.check_output(RelationReportSchema)
def verify_group_relations(
    m: int, extra_h: bool, trials: int, seed: int = 0
) -> pd.DataFrame:
    """
    Check the Coxeter relations of the generators on sampled parameter vectors.

    With σ_i = A_i for i <= m - 3, σ_{m-2} = F, σ_{m-1} = G and σ_m = H, this
    checks σ_i² = 1, σ_iσ_j = σ_jσ_i for |i - j| >= 2 and
    σ_iσ_{i+1}σ_i = σ_{i+1}σ_iσ_{i+1}, comparing both sides exactly.

    Parameters
    ----------
    m : int
        Number of source eigenvalues, at least 3.
    extra_h : bool
        Whether H is included.
    trials : int
        Number of random vectors.
    seed : int, default=0
        Seed for the random vectors.

    Returns
    -------
    pd.DataFrame
        One row per relation with its outcome.
    """
    if m < 3:
        raise DomainError(f"Group relations need m >= 3, got {m}")
    rng = Random(seed)
    samples = [random_params(m, extra_h, rng) for _ in range(trials)]
    sigmas = _generators(samples[0])

    def holds(left, right) -> bool:
        return all(left(v) == right(v) for v in samples)

    rows = []
    for i, (name, sigma) in enumerate(sigmas):
        rows.append(
            {
                "relation": "involution",
                "left": f"{name}{name}",
                "right": "E",
                "passed": holds(lambda v, s=sigma: s(s(v)), lambda v: v),
            }
        )
        for other, tau in sigmas[i + 1 :]:
            j = [label for label, _ in sigmas].index(other)
            if j - i >= 2:
                rows.append(
                    {
                        "relation": "commutation",
                        "left": f"{name}{other}",
                        "right": f"{other}{name}",
                        "passed": holds(
                            lambda v, s=sigma, t=tau: s(t(v)),
                            lambda v, s=sigma, t=tau: t(s(v)),
                        ),
                    }
                )
            else:
                rows.append(
                    {
                        "relation": "braid",
                        "left": f"{name}{other}{name}",
                        "right": f"{other}{name}{other}",
                        "passed": holds(
                            lambda v, s=sigma, t=tau: s(t(s(v))),
                            lambda v, s=sigma, t=tau: t(s(t(v))),
                        ),
                    }
                )
    df = pd.DataFrame(rows).assign(trials=trials)
    logger.info(
        "Checked %d relations for m=%d (H=%s): %d failed",
        len(df),
        m,
        extra_h,
        (~df["passed"]).sum(),
    )
    return df[["relation", "left", "right", "trials", "passed"]]


ClassLabel.model_rebuild()

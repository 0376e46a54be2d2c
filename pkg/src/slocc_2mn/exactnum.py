"""
Exact scalar, polynomial and dense-matrix arithmetic over the Gaussian rationals.

Every other module performs its linear algebra through the types defined here,
so that ranks, eigenvalues and cross ratios are compared by exact equality.
"""

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from random import Random
from typing import Iterable, Self, Sequence

import sympy

from .exceptions import (
    IrreducibleRemainderError,
    ParseError,
    ShapeMismatchError,
    SingularMatrixError,
)

__all__ = [
    "GaussianRational",
    "ExactMatrix",
    "ExactPolynomial",
    "ZERO",
    "ONE",
    "I",
    "mat_rank",
    "mat_det",
    "mat_inverse",
    "poly_gcd",
    "poly_roots_exact",
    "random_rational",
]

logger = logging.getLogger(__name__)

_RATIONAL = r"\d+(?:/\d+)?"
_REAL = re.compile(rf"^[+-]?{_RATIONAL}$")
_IMAGINARY = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_RATIONAL})?i$")
_COMPLEX = re.compile(rf"^(?P<re>[+-]?{_RATIONAL})(?P<sign>[+-])(?P<im>{_RATIONAL})?i$")


def _parse_rational(text: str) -> Fraction:
    numerator, _, denominator = text.partition("/")
    denominator = denominator or "1"
    if int(denominator) == 0:
        raise ParseError(f"Zero denominator in '{text}'")
    return Fraction(int(numerator), int(denominator))


def _rational_sqrt(value: Fraction) -> Fraction | None:
    """
    Exact square root of a nonnegative rational, or None if it is irrational.
    """
    if value < 0:
        return None
    numerator = math.isqrt(value.numerator)
    denominator = math.isqrt(value.denominator)
    if numerator**2 != value.numerator or denominator**2 != value.denominator:
        return None
    return Fraction(numerator, denominator)


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """
    Exact complex number whose real and imaginary parts are rationals.

    `Fraction` keeps both parts in lowest terms with a positive denominator,
    so structural equality of two instances is numeric equality.

    Examples
    --------
    >>> GaussianRational.parse("1/2+3/4i") * 2
    GaussianRational('1+3/2i')
    >>> str(GaussianRational(0, -1))
    '-i'
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("re", "im"):
            value = getattr(self, name)
            if isinstance(value, float):
                raise TypeError("Float components are not exact; use Fraction or int")
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        Parse the exact textual form, e.g. `'4/3'`, `'-i'`, `'1/2-3/4i'`.

        Parameters
        ----------
        text : str
            Literal following the grammar `a/b`, `c/di` or `a/b+c/di`.

        Returns
        -------
        GaussianRational
            Parsed value.

        Raises
        ------
        ParseError
            If the literal is malformed, uses a float or has a zero denominator.
        """
        if not isinstance(text, str):
            raise ParseError(f"Scalar literals must be strings, got {type(text).__name__}")
        value = text.strip().replace(" ", "").replace("−", "-")
        if _REAL.match(value):
            return cls(_parse_rational(value.lstrip("+")))
        if match := _IMAGINARY.match(value):
            im = _parse_rational(match["im"]) if match["im"] else Fraction(1)
            return cls(0, -im if match["sign"] == "-" else im)
        if match := _COMPLEX.match(value):
            im = _parse_rational(match["im"]) if match["im"] else Fraction(1)
            return cls(
                _parse_rational(match["re"].lstrip("+")),
                -im if match["sign"] == "-" else im,
            )
        raise ParseError(f"'{text}' is not an exact Gaussian-rational literal")

    @classmethod
    def coerce(cls, value: "GaussianRational | int | Fraction | str") -> Self:
        """
        Convert an int, Fraction or literal into a Gaussian rational.
        """
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"Cannot interpret {value!r} as an exact scalar")

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> Self:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """
        Squared modulus, re² + im².
        """
        return self.re * self.re + self.im * self.im

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """
        Total order used for canonical representatives: real part, then imaginary part.
        """
        return (self.re, self.im)

    def sqrt(self) -> Self | None:
        """
        Exact square root in the Gaussian rationals.

        Solves (a + bi)² = x + yi over the rationals. Returns None when no
        Gaussian-rational root exists. The root with a > 0, or b ≥ 0 when
        a = 0, is returned.
        """
        x, y = self.re, self.im
        if y == 0:
            if x >= 0:
                root = _rational_sqrt(x)
                return None if root is None else GaussianRational(root)
            root = _rational_sqrt(-x)
            return None if root is None else GaussianRational(0, root)
        modulus = _rational_sqrt(x * x + y * y)
        if modulus is None:
            return None
        a = _rational_sqrt((modulus + x) / 2)
        if not a:
            return None
        return GaussianRational(a, y / (2 * a))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> Self:
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other) -> Self:
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self.re + other, self.im)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> Self:
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self.re - other, self.im)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> Self:
        return -self + other

    def __mul__(self, other) -> Self:
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self.re * other, self.im * other)
        if self.im == 0 and other.im == 0:
            return GaussianRational(self.re * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> Self:
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = GaussianRational(other)
        if not other:
            raise ZeroDivisionError("Division by an exact zero")
        if other.im == 0:
            return GaussianRational(self.re / other.re, self.im / other.re)
        norm = other.norm()
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other) -> Self:
        return GaussianRational.coerce(other) / self

    def __pow__(self, exponent: int) -> Self:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ONE / (self**-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        imaginary = "i" if abs(self.im) == 1 else f"{abs(self.im)}i"
        if self.re == 0:
            return f"-{imaginary}" if self.im < 0 else imaginary
        return f"{self.re}{'-' if self.im < 0 else '+'}{imaginary}"

    def __repr__(self) -> str:
        return f"GaussianRational('{self}')"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

Scalar = GaussianRational | int | Fraction | str


def random_rational(
    rng: Random, numerator_bound: int = 9, denominator_bound: int = 9
) -> GaussianRational:
    """
    Draw a small rational with numerator in [-bound, bound] and denominator in [1, bound].
    """
    return GaussianRational(
        Fraction(
            rng.randint(-numerator_bound, numerator_bound),
            rng.randint(1, denominator_bound),
        )
    )


@dataclass(frozen=True, slots=True)
class ExactMatrix:
    """
    Dense row-major matrix of Gaussian rationals.
    """

    rows: int
    cols: int
    entries: tuple[GaussianRational, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ShapeMismatchError(
                f"Matrix dimensions must be positive, got {self.rows}x{self.cols}"
            )
        entries = tuple(map(GaussianRational.coerce, self.entries))
        if len(entries) != self.rows * self.cols:
            raise ShapeMismatchError(
                f"Expected {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> Self:
        """
        Build a matrix from nested rows of scalars or literals.
        """
        if not rows or not rows[0]:
            raise ShapeMismatchError("A matrix needs at least one row and column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ShapeMismatchError("All rows must have the same length")
        return cls(len(rows), width, tuple(value for row in rows for value in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Self:
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Self:
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> Self:
        n = len(values)
        entries = [ZERO] * (n * n)
        for k, value in enumerate(values):
            entries[k * n + k] = value
        return cls(n, n, tuple(entries))

    @classmethod
    def block_diag(cls, blocks: Sequence["ExactMatrix"]) -> Self:
        """
        Direct sum of the given blocks along the diagonal.
        """
        rows = sum(block.rows for block in blocks)
        cols = sum(block.cols for block in blocks)
        grid = [[ZERO] * cols for _ in range(rows)]
        row_offset = col_offset = 0
        for block in blocks:
            for i in range(block.rows):
                for j in range(block.cols):
                    grid[row_offset + i][col_offset + j] = block[i, j]
            row_offset += block.rows
            col_offset += block.cols
        return cls.from_rows(grid)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> GaussianRational:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[GaussianRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_strings(self) -> list[list[str]]:
        """
        Nested rows of exact literals, the JSON interchange form.
        """
        return [[str(value) for value in self.row(i)] for i in range(self.rows)]

    def transpose(self) -> Self:
        return ExactMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def hstack(self, other: "ExactMatrix") -> Self:
        if self.rows != other.rows:
            raise ShapeMismatchError("hstack needs equal row counts")
        return ExactMatrix.from_rows(
            [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        )

    def vstack(self, other: "ExactMatrix") -> Self:
        if self.cols != other.cols:
            raise ShapeMismatchError("vstack needs equal column counts")
        return ExactMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def _check_same_shape(self, other: "ExactMatrix"):
        if self.shape != other.shape:
            raise ShapeMismatchError(f"Shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "ExactMatrix") -> Self:
        self._check_same_shape(other)
        return ExactMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "ExactMatrix") -> Self:
        self._check_same_shape(other)
        return ExactMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> Self:
        return ExactMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __mul__(self, scalar: Scalar) -> Self:
        scalar = GaussianRational.coerce(scalar)
        return ExactMatrix(self.rows, self.cols, tuple(a * scalar for a in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> Self:
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = [
            [other[k, j] for k in range(other.rows)] for j in range(other.cols)
        ]
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            for column in columns:
                total = ZERO
                for a, b in zip(row, column):
                    if a and b:
                        total = total + a * b
                entries.append(total)
        return ExactMatrix(self.rows, other.cols, tuple(entries))

    def __str__(self) -> str:
        return "\n".join(" ".join(row) for row in self.to_strings())


def _eliminate(
    rows: list[list[GaussianRational]], ncols: int
) -> tuple[int, GaussianRational, int]:
    """
    Fraction-free (Bareiss) forward elimination in place.

    Returns
    -------
    tuple[int, GaussianRational, int]
        Rank, the last pivot and the sign of the row permutation.
    """
    nrows = len(rows)
    rank, previous, sign = 0, ONE, 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot_row = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
            sign = -sign
        source = rows[rank]
        pivot = source[col]
        for r in range(rank + 1, nrows):
            target = rows[r]
            lead = target[col]
            for c in range(col + 1, ncols):
                value = pivot * target[c]
                if lead and source[c]:
                    value = value - lead * source[c]
                target[c] = value / previous if previous != ONE else value
            target[col] = ZERO
        previous = pivot
        rank += 1
    return rank, previous, sign


def _integral_row(row: Sequence[GaussianRational]) -> list[GaussianRational]:
    # Scaling a row by the lcm of its denominators keeps Bareiss entries integral.
    scale = reduce(
        math.lcm, (part.denominator for value in row for part in (value.re, value.im)), 1
    )
    return [value * scale for value in row] if scale != 1 else list(row)


def mat_rank(a: ExactMatrix) -> int:
    """
    Exact rank of a matrix via fraction-free Gaussian elimination.

    Parameters
    ----------
    a : ExactMatrix
        Any rectangular matrix.

    Returns
    -------
    int
        Rank between 0 and min(rows, cols).

    Examples
    --------
    >>> mat_rank(ExactMatrix.diag([1, 1, 0, 0, 0]))
    2
    """
    rows = [_integral_row(a.row(i)) for i in range(a.rows)]
    rank, _, _ = _eliminate(rows, a.cols)
    return rank


def mat_det(a: ExactMatrix) -> GaussianRational:
    """
    Exact determinant of a square matrix via Bareiss elimination.
    """
    if not a.is_square:
        raise ShapeMismatchError("Determinant needs a square matrix")
    rows = a.to_rows()
    rank, last_pivot, sign = _eliminate(rows, a.cols)
    if rank < a.rows:
        return ZERO
    return last_pivot if sign > 0 else -last_pivot


def mat_inverse(a: ExactMatrix) -> ExactMatrix:
    """
    Exact inverse of a square matrix by Gauss-Jordan elimination.

    Parameters
    ----------
    a : ExactMatrix
        Square matrix.

    Returns
    -------
    ExactMatrix
        Matrix b with a @ b == b @ a == identity.

    Raises
    ------
    ShapeMismatchError
        If `a` is not square.
    SingularMatrixError
        If `a` is not invertible.
    """
    if not a.is_square:
        raise ShapeMismatchError("Only square matrices can be inverted")
    n = a.rows
    left = a.to_rows()
    right = ExactMatrix.identity(n).to_rows()
    for i in range(n):
        pivot_row = next((r for r in range(i, n) if left[r][i]), None)
        if pivot_row is None:
            raise SingularMatrixError(f"Matrix of size {n} has rank below {n}")
        left[i], left[pivot_row] = left[pivot_row], left[i]
        right[i], right[pivot_row] = right[pivot_row], right[i]
        pivot = left[i][i]
        left[i] = [value / pivot for value in left[i]]
        right[i] = [value / pivot for value in right[i]]
        for r in range(n):
            if r == i or not (factor := left[r][i]):
                continue
            left[r] = [x - factor * y for x, y in zip(left[r], left[i])]
            right[r] = [x - factor * y for x, y in zip(right[r], right[i])]
    return ExactMatrix.from_rows(right)


@dataclass(frozen=True, slots=True)
class ExactPolynomial:
    """
    Univariate polynomial with Gaussian-rational coefficients, lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial is the
    empty tuple and the leading coefficient of any other polynomial is nonzero.
    """

    coefficients: tuple[GaussianRational, ...] = ()

    def __post_init__(self):
        coefficients = list(map(GaussianRational.coerce, self.coefficients))
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Self:
        """
        Monic polynomial with the given roots, repeated roots included.
        """
        result = cls((ONE,))
        for root in roots:
            result = result * cls((-GaussianRational.coerce(root), ONE))
        return result

    @classmethod
    def interpolate(
        cls, xs: Sequence[GaussianRational], ys: Sequence[GaussianRational]
    ) -> Self:
        """
        Unique polynomial of degree < len(xs) through the points (xs[k], ys[k]).

        Uses Newton divided differences; the nodes must be pairwise distinct.
        """
        if len(xs) != len(ys):
            raise ShapeMismatchError("Interpolation needs as many values as nodes")
        table = list(map(GaussianRational.coerce, ys))
        xs = list(map(GaussianRational.coerce, xs))
        n = len(xs)
        for level in range(1, n):
            for k in range(n - 1, level - 1, -1):
                table[k] = (table[k] - table[k - 1]) / (xs[k] - xs[k - level])
        result = cls((table[-1],)) if n else cls()
        for k in range(n - 2, -1, -1):
            result = result * cls((-xs[k], ONE)) + cls((table[k],))
        return result

    @property
    def degree(self) -> int:
        """
        Degree of the polynomial; -1 for the zero polynomial.
        """
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> GaussianRational:
        return self.coefficients[-1] if self.coefficients else ZERO

    def __call__(self, x: Scalar) -> GaussianRational:
        x = GaussianRational.coerce(x)
        result = ZERO
        for coefficient in reversed(self.coefficients):
            result = result * x + coefficient
        return result

    def __add__(self, other: "ExactPolynomial") -> Self:
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (ZERO,) * (size - len(self.coefficients))
        b = other.coefficients + (ZERO,) * (size - len(other.coefficients))
        return ExactPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> Self:
        return ExactPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "ExactPolynomial") -> Self:
        return self + (-other)

    def __mul__(self, other: "ExactPolynomial | Scalar") -> Self:
        if not isinstance(other, ExactPolynomial):
            scalar = GaussianRational.coerce(other)
            return ExactPolynomial(tuple(c * scalar for c in self.coefficients))
        if self.is_zero or other.is_zero:
            return ExactPolynomial()
        product = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] = product[i + j] + a * b
        return ExactPolynomial(tuple(product))

    def divmod(self, other: "ExactPolynomial") -> tuple[Self, Self]:
        """
        Euclidean division returning the quotient and the remainder.
        """
        if other.is_zero:
            raise ZeroDivisionError("Polynomial division by zero")
        remainder = list(self.coefficients)
        quotient = [ZERO] * max(len(remainder) - other.degree, 0)
        lead = other.leading
        for shift in range(len(remainder) - len(other.coefficients), -1, -1):
            factor = remainder[shift + other.degree] / lead
            quotient[shift] = factor
            if factor:
                for k, c in enumerate(other.coefficients):
                    remainder[shift + k] = remainder[shift + k] - factor * c
        return ExactPolynomial(tuple(quotient)), ExactPolynomial(
            tuple(remainder[: other.degree])
        )

    def monic(self) -> Self:
        if self.is_zero:
            return self
        lead = self.leading
        return ExactPolynomial(tuple(c / lead for c in self.coefficients))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = [
            f"({c})x^{k}" if k else f"({c})"
            for k, c in enumerate(self.coefficients)
            if c
        ]
        return " + ".join(reversed(terms))


def poly_gcd(p: ExactPolynomial, q: ExactPolynomial) -> ExactPolynomial:
    """
    Monic greatest common divisor by the Euclidean algorithm.
    """
    while not q.is_zero:
        p, q = q, p.divmod(q)[1]
    return p.monic()


def _to_sympy(value: GaussianRational) -> sympy.Expr:
    return sympy.Rational(value.re.numerator, value.re.denominator) + sympy.I * sympy.Rational(
        value.im.numerator, value.im.denominator
    )


def _from_sympy(expr: sympy.Expr) -> GaussianRational:
    real, imaginary = sympy.Rational(sympy.re(expr)), sympy.Rational(sympy.im(expr))
    return GaussianRational(
        Fraction(int(real.p), int(real.q)), Fraction(int(imaginary.p), int(imaginary.q))
    )


def _primitive_form(p: ExactPolynomial) -> list[GaussianRational]:
    """
    Scale a polynomial to Gaussian-integer coefficients with unit content.
    """
    scale = reduce(
        math.lcm,
        (part.denominator for c in p.coefficients for part in (c.re, c.im)),
        1,
    )
    integral = [c * scale for c in p.coefficients]
    content = reduce(
        math.gcd, (int(part) for c in integral for part in (c.re, c.im)), 0
    )
    return [c / content for c in integral] if content > 1 else integral


def _quadratic_roots(p: ExactPolynomial) -> list[GaussianRational] | None:
    """
    Closed-form roots of a polynomial of degree at most two, or None.
    """
    monic = p.monic()
    if monic.degree == 1:
        return [-monic.coefficients[0]]
    c, b, _ = monic.coefficients
    root = (b * b - 4 * c).sqrt()
    if root is None:
        return None
    return [(-b - root) / 2, (-b + root) / 2]


def _linear_factor_roots(p: ExactPolynomial) -> list[GaussianRational]:
    """
    Roots of the linear factors of p over Q(i), from the primitive integer form.
    """
    x = sympy.Symbol("x")
    expr = sum(
        (_to_sympy(c) * x**k for k, c in enumerate(_primitive_form(p))), sympy.Integer(0)
    )
    _, factors = sympy.factor_list(expr, x, gaussian=True)
    roots = []
    for factor, _ in factors:
        poly = sympy.Poly(factor, x)
        if poly.degree() == 1:
            a, b = map(_from_sympy, poly.all_coeffs())
            roots.append(-b / a)
    return roots


def poly_roots_exact(p: ExactPolynomial) -> list[tuple[GaussianRational, int]]:
    """
    All Gaussian-rational roots of a polynomial with their multiplicities.

    Degree one and two factors are solved in closed form, quadratics only
    when the discriminant has an exact square root. Higher-degree factors are
    split by factoring their primitive Gaussian-integer form over Q(i).

    Parameters
    ----------
    p : ExactPolynomial
        Nonzero polynomial.

    Returns
    -------
    list[tuple[GaussianRational, int]]
        Roots sorted by (real, imaginary) with multiplicities.

    Raises
    ------
    ValueError
        If `p` is the zero polynomial.
    IrreducibleRemainderError
        If a factor of positive degree has no Gaussian-rational root. The
        roots found so far are attached to the error.

    Examples
    --------
    >>> poly_roots_exact(ExactPolynomial((2, -3, 1)))
    [(GaussianRational('1'), 1), (GaussianRational('2'), 1)]
    """
    if p.is_zero:
        raise ValueError("The zero polynomial has no finite root set")
    found: dict[GaussianRational, int] = {}

    def collect() -> list[tuple[GaussianRational, int]]:
        return sorted(found.items(), key=lambda item: item[0].sort_key())

    remaining = p.monic()
    while remaining.degree >= 1:
        if remaining.degree <= 2:
            roots = _quadratic_roots(remaining)
            if roots is None:
                raise IrreducibleRemainderError(remaining.degree, collect())
        else:
            roots = _linear_factor_roots(remaining)
            if not roots:
                raise IrreducibleRemainderError(remaining.degree, collect())
        for root in roots:
            while remaining.degree >= 1 and not remaining(root):
                remaining, _ = remaining.divmod(ExactPolynomial((-root, ONE)))
                found[root] = found.get(root, 0) + 1
    logger.debug("Resolved %d distinct roots of a degree-%d polynomial", len(found), p.degree)
    return collect()

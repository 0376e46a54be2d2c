"""
Typed errors raised by the package.

All errors derive from builtin exception types so that callers catching
`ValueError` or `ArithmeticError` keep working.
"""

__all__ = [
    "ParseError",
    "ShapeMismatchError",
    "SingularMatrixError",
    "IrreducibleRemainderError",
    "DomainError",
    "InvalidFamilyError",
    "DegenerateConfigurationError",
    "IndexOutOfRangeError",
    "HNotApplicableError",
    "NotTrueTripartiteError",
    "StructureError",
]


class ParseError(ValueError):
    """
    A textual scalar, vector or document does not follow the exact grammar.
    """


class ShapeMismatchError(ValueError):
    """
    Matrix or operator shapes are incompatible.
    """


class SingularMatrixError(ArithmeticError):
    """
    A matrix that must be invertible has rank below its dimension.
    """


class IrreducibleRemainderError(ArithmeticError):
    """
    A polynomial factor has no root representable as a Gaussian rational.

    Parameters
    ----------
    degree : int
        Degree of the unresolved remainder.
    roots : list, optional
        Roots with multiplicities found before the remainder was reached.
    """

    def __init__(self, degree: int, roots: list | None = None):
        self.degree = degree
        self.roots = roots or []
        super().__init__(
            f"Polynomial factor of degree {degree} has no Gaussian-rational root"
        )


class DomainError(ValueError):
    """
    Arguments of a counting function are outside its domain.
    """


class InvalidFamilyError(ValueError):
    """
    Eigenvalues do not describe an admissible diagonal family.
    """


class DegenerateConfigurationError(ValueError):
    """
    Points passed to the cross ratio are not pairwise distinct.
    """


class IndexOutOfRangeError(IndexError):
    """
    A generator index is outside the valid range for the parameter vector.
    """


class HNotApplicableError(ValueError):
    """
    The extra generator H was applied to a vector without the N = m + 1 flag.
    """


class NotTrueTripartiteError(ValueError):
    """
    The state is a product or bipartite state, or does not span its local spaces.
    """


class StructureError(RuntimeError):
    """
    Internal consistency of an extracted pencil structure failed.
    """

from fractions import Fraction
from random import Random

import pytest

from slocc_2mn.exactnum import (
    I,
    ONE,
    ExactMatrix,
    ExactPolynomial,
    GaussianRational,
    mat_det,
    mat_inverse,
    mat_rank,
    poly_gcd,
    poly_roots_exact,
    random_rational,
)
from slocc_2mn.exceptions import (
    IrreducibleRemainderError,
    ParseError,
    ShapeMismatchError,
    SingularMatrixError,
)
from slocc_2mn.utils import (
    random_distinct_scalars,
    random_invertible_matrix,
    random_matrix,
)


@pytest.mark.parametrize(
    "text,re,im",
    [
        ("4/3", Fraction(4, 3), 0),
        ("-i", 0, -1),
        ("1/2-3/4i", Fraction(1, 2), Fraction(-3, 4)),
        ("+2i", 0, 2),
        (" −5 ", -5, 0),
    ],
)
def test_parse(text, re, im):
    assert GaussianRational.parse(text) == GaussianRational(re, im)


@pytest.mark.parametrize("text", ["4/3", "-i", "1/2-3/4i", "i", "-7"])
def test_str_is_canonical_literal(text):
    assert str(GaussianRational.parse(text)) == text


@pytest.mark.parametrize("text", ["1.5", "1/0", "", "2j", "1+", "abc"])
def test_parse_rejects_malformed_literals(text):
    with pytest.raises(ParseError):
        GaussianRational.parse(text)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        GaussianRational(1.5)


def test_arithmetic():
    z = GaussianRational(1, 1)
    assert z * z.conjugate() == 2
    assert ONE / I == -I
    assert (z**2) == GaussianRational(0, 2)
    assert z ** -1 == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    assert 3 - z == GaussianRational(2, -1)


@pytest.mark.parametrize(
    "value,expected",
    [
        (GaussianRational(-4), GaussianRational(0, 2)),
        (GaussianRational(0, 2), GaussianRational(1, 1)),
        (GaussianRational(Fraction(9, 4)), GaussianRational(Fraction(3, 2))),
        (GaussianRational(2), None),
        (GaussianRational(0, 1), None),
    ],
)
def test_sqrt(value, expected):
    root = value.sqrt()
    assert root == expected
    if root is not None:
        assert root * root == value


def test_matrix_rank_and_det():
    assert mat_rank(ExactMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert mat_rank(ExactMatrix.identity(3)) == 3
    assert mat_rank(ExactMatrix.from_rows([["1", "i"], ["i", "-1"]])) == 1
    assert mat_rank(ExactMatrix.zeros(2, 3)) == 0
    assert mat_det(ExactMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert mat_det(ExactMatrix.diag([2, 3, "1/6"])) == 1


def test_matrix_inverse():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert a @ mat_inverse(a) == ExactMatrix.identity(2)
    b = ExactMatrix.from_rows([["i", 1], [0, "1/2"]])
    assert mat_inverse(b) @ b == ExactMatrix.identity(2)
    with pytest.raises(SingularMatrixError):
        mat_inverse(ExactMatrix.from_rows([[1, 2], [2, 4]]))


def test_matrix_shapes():
    a = ExactMatrix.from_rows([[1, 2, 3]])
    assert a.transpose().shape == (3, 1)
    assert a.hstack(a).shape == (1, 6)
    assert a.vstack(a).shape == (2, 3)
    with pytest.raises(ShapeMismatchError):
        a @ a
    with pytest.raises(ShapeMismatchError):
        ExactMatrix.from_rows([[1, 2], [3]])


def test_polynomial_basics():
    p = ExactPolynomial.from_roots([1, 2])
    assert p == ExactPolynomial((2, -3, 1))
    assert p.degree == 2
    assert p(3) == 2
    quotient, remainder = p.divmod(ExactPolynomial((-1, 1)))
    assert quotient == ExactPolynomial((-2, 1))
    assert remainder.is_zero
    assert ExactPolynomial((0, 0)).degree == -1


def test_interpolate():
    p = ExactPolynomial((1, "i", 3))
    nodes = [GaussianRational(k) for k in range(3)]
    assert ExactPolynomial.interpolate(nodes, [p(x) for x in nodes]) == p


def test_poly_gcd():
    p = ExactPolynomial.from_roots([1, 2])
    q = ExactPolynomial.from_roots([1, 3]) * 5
    assert poly_gcd(p, q) == ExactPolynomial((-1, 1))


@pytest.mark.parametrize(
    "roots",
    [
        [1, 2],
        ["i", "-i"],
        [1, 1, "-1/2"],
        [0, 0, "1/2", 1],
        ["1+i", "2/3", "-3", "-3", "i"],
    ],
)
def test_poly_roots_exact(roots):
    p = ExactPolynomial.from_roots(roots) * 7
    expected = {}
    for root in map(GaussianRational.coerce, roots):
        expected[root] = expected.get(root, 0) + 1
    assert poly_roots_exact(p) == sorted(expected.items(), key=lambda item: item[0].sort_key())


def test_poly_roots_irreducible_remainder():
    with pytest.raises(IrreducibleRemainderError) as info:
        poly_roots_exact(ExactPolynomial((-2, 0, 1)))
    assert info.value.degree == 2
    cubic = ExactPolynomial((-2, 0, 1)) * ExactPolynomial((-3, 1))
    with pytest.raises(IrreducibleRemainderError) as info:
        poly_roots_exact(cubic)
    assert info.value.roots == [(GaussianRational(3), 1)]


def random_scalar(rng: Random) -> GaussianRational:
    return random_rational(rng) + random_rational(rng) * I


@pytest.mark.parametrize("seed", range(5))
def test_field_operations_invert(seed):
    rng = Random(seed)
    for _ in range(20):
        x, y = random_scalar(rng), random_scalar(rng)
        assert (x + y) - y == x
        if y:
            assert (x * y) / y == x


@pytest.mark.parametrize("seed", range(3))
@pytest.mark.parametrize("n", [2, 3, 5])
def test_inverse_is_an_involution(seed, n):
    a = random_invertible_matrix(n, Random(seed))
    inverse = mat_inverse(a)
    assert mat_rank(inverse) == n
    assert mat_inverse(inverse) == a


@pytest.mark.parametrize("seed", range(5))
def test_rank_of_product_is_bounded(seed):
    rng = Random(seed)
    a = random_matrix(4, 2, rng) @ random_matrix(2, 5, rng)
    b = random_matrix(5, 3, rng)
    assert mat_rank(a @ b) <= min(mat_rank(a), mat_rank(b))
    c = random_matrix(5, 1, rng) @ random_matrix(1, 3, rng)
    assert mat_rank(a @ c) <= min(mat_rank(a), mat_rank(c)) <= 1


@pytest.mark.parametrize("seed", range(5))
def test_returned_roots_vanish(seed):
    rng = Random(seed)
    roots = random_distinct_scalars(4, rng, gaussian=True)
    p = ExactPolynomial.from_roots(roots + roots[:1]) * random_scalar(rng)
    if p.is_zero:
        p = ExactPolynomial.from_roots(roots)
    found = poly_roots_exact(p)
    assert all(not p(root) for root, _ in found)
    assert sum(multiplicity for _, multiplicity in found) == p.degree
    q = p * ExactPolynomial((-2, 0, 1))
    with pytest.raises(IrreducibleRemainderError) as info:
        poly_roots_exact(q)
    assert all(not q(root) for root, _ in info.value.roots)

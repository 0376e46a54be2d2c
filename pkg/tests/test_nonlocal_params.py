from fractions import Fraction

import pytest
from pydantic import ValidationError

from slocc_2mn.exactnum import ExactMatrix, GaussianRational
from slocc_2mn.exceptions import (
    DegenerateConfigurationError,
    DomainError,
    HNotApplicableError,
    IndexOutOfRangeError,
    InvalidFamilyError,
    ParseError,
)
from slocc_2mn.nonlocal_params import (
    ParamVector,
    SymmetryElement,
    anharmonic_orbit,
    apply_word,
    canonical_configuration,
    canonical_params,
    cross_ratio,
    family_state,
    gen_f,
    gen_g,
    gen_h,
    gen_swap,
    normal_form_state,
    orbit,
    random_params,
    reduce_to_normal_form,
    slocc_equivalent_params,
    verify_group_relations,
)
from slocc_2mn.pencil import (
    PencilState,
    ProjectivePoint,
    apply_ilo,
    class_label,
    moebius_image,
)
from slocc_2mn.utils import random_distinct_scalars

P = ProjectivePoint.finite
INF = ProjectivePoint.infinity()


def vector(text: str, **kwargs) -> ParamVector:
    return ParamVector.parse(text, **kwargs)


def test_param_vector_parse_and_format():
    v = vector("[4/3, 3/2]", extra_h=True)
    assert v.m == 4 and v.extra_h
    assert v.values == (GaussianRational(Fraction(4, 3)), GaussianRational(Fraction(3, 2)))
    assert v.format() == "[4/3, 3/2]"
    assert vector("[]").m == 2
    assert vector("[ 1+i ]").format() == "[1+i]"


@pytest.mark.parametrize("text", ["4/3", "[4/3", "[1.5]", "[a]"])
def test_param_vector_rejects_malformed_text(text):
    with pytest.raises(ParseError):
        vector(text)


@pytest.mark.parametrize("values,m", [([1], 3), ([0], 3), ([2, 2], 4), ([2], 4)])
def test_param_vector_rejects_invalid_values(values, m):
    with pytest.raises(ValidationError):
        ParamVector(values=values, m=m)


def test_cross_ratio():
    assert cross_ratio(P(0), P(1), P(2), P(3)) == GaussianRational(Fraction(4, 3))
    assert cross_ratio(P(0), P("1/2"), P(1), INF) == 2
    with pytest.raises(DegenerateConfigurationError):
        cross_ratio(P(0), P(1), P(1), P(3))


def test_cross_ratio_is_moebius_invariant():
    t = ExactMatrix.from_rows([[1, 2], [3, 5]])
    points = [P(0), P(2), P("-1/3"), INF]
    moved = [moebius_image(point, t) for point in points]
    assert cross_ratio(*moved) == cross_ratio(*points)


def test_reduce_to_normal_form():
    params, op = reduce_to_normal_form([1, 2, 3], 5)
    assert params.format() == "[4/3]"
    assert (params.m, params.extra_h) == (3, False)
    assert apply_ilo(family_state([1, 2, 3], 5), op) == normal_form_state(params, 5)


def test_reduce_to_normal_form_gaussian():
    eigs = ["i", "2", "1-i", "-3"]
    params, op = reduce_to_normal_form(eigs, 5)
    assert params.extra_h
    assert apply_ilo(family_state(eigs, 5), op) == normal_form_state(params, 5)
    first, second = GaussianRational(0, 1), GaussianRational(2)
    for value, eig in zip(params.values, eigs[2:]):
        assert value == cross_ratio(P(0), P(first), P(second), P(eig))


@pytest.mark.parametrize(
    "eigs,n_dim",
    [([1, 2, 3], 3), ([1, 0, 3], 5), ([1, 1, 3], 5), ([1], 4)],
)
def test_reduce_rejects_invalid_families(eigs, n_dim):
    with pytest.raises(InvalidFamilyError):
        reduce_to_normal_form(eigs, n_dim)


def test_generators():
    v = vector("[2, 3]")
    assert gen_f(v).format() == "[2/3, 1/3]"
    assert gen_g(v).format() == "[-1, -2]"
    assert gen_swap(v, 1).format() == "[3, 2]"
    with pytest.raises(IndexOutOfRangeError):
        gen_swap(v, 2)
    with pytest.raises(HNotApplicableError):
        gen_h(v)
    assert gen_h(vector("[2, 3]", extra_h=True)).format() == "[1/2, 1/3]"
    assert gen_f(vector("[]")) == vector("[]")


def test_apply_word():
    v = vector("[3]")
    assert apply_word(v, ["F", "G"]).format() == "[-1/2]"
    assert apply_word(v, SymmetryElement(word=("G", "F"))).format() == "[2/3]"
    assert apply_word(v, []) == v
    with pytest.raises(ValidationError):
        SymmetryElement(word=("X",))


def test_orbit():
    assert {w.format() for w in orbit(vector("[2]"))} == {"[-1]", "[1/2]", "[2]"}
    assert {w.format() for w in orbit(vector("[3]"))} == {
        "[3]",
        "[1/3]",
        "[-2]",
        "[2/3]",
        "[-1/2]",
        "[3/2]",
    }


def test_orbit_matches_anharmonic_orbit():
    for value in ("3", "-5/2", "1+i"):
        assert {w.values[0] for w in orbit(vector(f"[{value}]"))} == set(
            anharmonic_orbit(GaussianRational.parse(value))
        )
    with pytest.raises(DegenerateConfigurationError):
        anharmonic_orbit(1)


def test_canonical_params():
    assert canonical_params(vector("[3]")).format() == "[-2]"
    for member in orbit(vector("[4/3, 3/2]", extra_h=True)):
        assert canonical_params(member) == canonical_params(vector("[4/3, 3/2]", extra_h=True))


def test_slocc_equivalent_params():
    assert slocc_equivalent_params(vector("[2]"), vector("[1/2]"))
    assert not slocc_equivalent_params(vector("[2]"), vector("[3]"))
    assert not slocc_equivalent_params(vector("[2]"), vector("[2]", extra_h=True))


def test_h_enlarges_the_orbit():
    plain = orbit(vector("[2, 3]"))
    extended = orbit(vector("[2, 3]", extra_h=True))
    assert {w.values for w in plain} < {w.values for w in extended}


@pytest.mark.parametrize("m,extra_h", [(3, False), (4, False), (4, True), (5, True)])
def test_group_relations(m, extra_h):
    report = verify_group_relations(m, extra_h, trials=5, seed=1)
    assert report["passed"].all()
    assert set(report["relation"]) <= {"involution", "commutation", "braid"}


def test_group_relations_rows():
    report = verify_group_relations(4, True, trials=5)
    assert len(report) == 10
    assert (report["relation"] == "involution").sum() == 4
    with pytest.raises(DomainError):
        verify_group_relations(2, False, trials=5)


def test_random_params(rng):
    for _ in range(5):
        v = random_params(5, True, rng)
        assert len(v.values) == 3 and v.extra_h


def test_canonical_configuration_is_moebius_invariant():
    t = ExactMatrix.from_rows([[2, 1], [1, 1]])
    configurations = [
        [[P(0)], [P("1/2"), P(1), INF]],
        [[P(0)], [P(2)], [P(1), P(3), INF]],
        [[P(1), P(-1), P(2), P(5)]],
    ]
    for classes in configurations:
        moved = [[moebius_image(point, t) for point in points] for points in classes]
        assert canonical_configuration(moved) == canonical_configuration(classes)
    assert canonical_configuration([[P(0)], [P(1)]]) is None


def test_normal_form_label():
    label = class_label(normal_form_state(vector("[3]"), 5))
    assert label.params.format() == "[-2]"
    assert label == class_label(normal_form_state(vector("[1/3]"), 5))
    assert label != class_label(normal_form_state(vector("[4]"), 5))


@pytest.mark.parametrize("m", [3, 4, 5, 6])
@pytest.mark.parametrize("extra_h", [True, False])
def test_canonical_configuration_matches_canonical_params(m, extra_h, rng):
    points = [P(value) for value in random_distinct_scalars(m + 1, rng)]
    q0, q1, q2, *rest = points
    vector = ParamVector(
        values=[cross_ratio(q0, q1, q2, q) for q in rest], m=m, extra_h=extra_h
    )
    classes = [points] if extra_h else [[q0], points[1:]]
    assert canonical_configuration(classes) == canonical_params(vector)


def test_generic_label_scales():
    eigs = list(range(2, 12))
    label = class_label(
        PencilState.from_matrices(ExactMatrix.identity(10), ExactMatrix.diag(eigs))
    )
    assert (label.params.m, label.params.extra_h) == (9, True)
    reordered = PencilState.from_matrices(
        ExactMatrix.identity(10), ExactMatrix.diag(eigs[::-1])
    )
    assert class_label(reordered) == label

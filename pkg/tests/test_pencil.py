import pytest

from slocc_2mn.exactnum import ExactMatrix, GaussianRational
from slocc_2mn.exceptions import (
    IrreducibleRemainderError,
    NotTrueTripartiteError,
    ShapeMismatchError,
)
from slocc_2mn.pencil import (
    ILOTriple,
    PencilState,
    ProjectivePoint,
    apply_ilo,
    canonical_pencil,
    class_label,
    is_true_tripartite,
    moebius_image,
    pencil_structure,
    random_ilo,
)
from slocc_2mn.nonlocal_params import family_state, reduce_to_normal_form
from slocc_2mn.validation import StateDocument

P = ProjectivePoint.finite
INF = ProjectivePoint.infinity()


def test_projective_point_normalisation():
    assert ProjectivePoint(mu=2, nu=4) == P("1/2")
    assert ProjectivePoint(mu=3, nu=0) == INF
    assert INF.is_infinite and str(INF) == "inf"
    assert P(0).value == 0
    with pytest.raises(ValueError):
        ProjectivePoint(mu=0, nu=0)
    with pytest.raises(ValueError):
        INF.value


def test_state_validation(make_state):
    with pytest.raises(ValueError):
        PencilState(
            m_dim=2,
            n_dim=2,
            gamma1=ExactMatrix.identity(2),
            gamma2=ExactMatrix.zeros(2, 3),
        )
    with pytest.raises(ValueError):
        make_state([[1, 0]], [[0, 1]])


def test_document_round_trip(diagonal_state):
    document = diagonal_state.to_document()
    assert document.gamma1[2] == ["0", "0", "2", "0", "0"]
    restored = StateDocument.model_validate_json(document.model_dump_json())
    assert PencilState.from_document(restored) == diagonal_state


def test_document_rejects_floats():
    with pytest.raises(ValueError):
        StateDocument(m=2, n=2, gamma1=[["1.0", "0"], ["0", "1"]], gamma2=[["0", "0"], ["0", "1"]])
    with pytest.raises(ValueError):
        StateDocument(m=2, n=2, gamma1=[["1", "0"]], gamma2=[["0", "0"], ["0", "1"]])


def test_ilo_inverse_restores_state(diagonal_state, rng):
    op = random_ilo(5, 5, rng)
    moved = apply_ilo(diagonal_state, op)
    assert apply_ilo(moved, op.inverse()) == diagonal_state
    assert apply_ilo(diagonal_state, ILOTriple.identity(5, 5)) == diagonal_state
    with pytest.raises(ShapeMismatchError):
        apply_ilo(diagonal_state, ILOTriple.identity(4, 5))


def test_apply_ilo_reaches_normal_form():
    _, op = reduce_to_normal_form([2, 3], 5)
    moved = apply_ilo(family_state([2, 3], 5), op)
    assert moved.gamma1 == ExactMatrix.diag([0, 1, 1, 1, 1])
    assert moved.gamma2 == ExactMatrix.diag([1, 1, 0, 0, 0])


def test_ilo_triple_must_be_invertible():
    with pytest.raises(ValueError):
        ILOTriple(
            t=ExactMatrix.from_rows([[1, 1], [1, 1]]),
            p=ExactMatrix.identity(2),
            q=ExactMatrix.identity(2),
        )


def test_moebius_image():
    swap = ExactMatrix.from_rows([[0, 1], [1, 0]])
    assert moebius_image(P(2), swap) == P("1/2")
    assert moebius_image(P(0), swap) == INF
    assert moebius_image(INF, ExactMatrix.identity(2)) == INF


def test_structure_of_diagonal_state(diagonal_state):
    structure = pencil_structure(diagonal_state)
    assert structure.col_min_indices == ()
    assert structure.row_min_indices == ()
    assert structure.eigen_groups == (
        (P(0), (1, 1)),
        (P("1/2"), (1,)),
        (P(1), (1,)),
        (INF, (1,)),
    )
    assert str(structure.segre_symbol) == "[(11)111]"
    rebuilt = canonical_pencil(structure)
    assert rebuilt.gamma1 == ExactMatrix.diag([1, 1, 2, 1, 0])
    assert pencil_structure(rebuilt) == structure


def test_structure_of_jordan_block(make_state):
    state = make_state([[1, 0], [0, 1]], [[1, 1], [0, 1]])
    structure = pencil_structure(state)
    assert structure.eigen_groups == ((P(1), (2,)),)
    assert pencil_structure(canonical_pencil(structure)) == structure


def test_structure_of_singular_block(make_state):
    state = make_state([[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]])
    structure = pencil_structure(state)
    assert structure.col_min_indices == (2,)
    assert structure.row_min_indices == ()
    assert structure.eigen_groups == ()
    transposed = pencil_structure(state.transpose())
    assert transposed.row_min_indices == (2,)
    assert transposed.col_min_indices == ()


def test_structure_survives_operators(diagonal_state, rng):
    structure = pencil_structure(diagonal_state)
    for _ in range(2):
        op = random_ilo(5, 5, rng)
        moved = pencil_structure(apply_ilo(diagonal_state, op))
        assert moved.col_min_indices == structure.col_min_indices
        assert moved.segre_symbol == structure.segre_symbol
        assert {point for point, _ in moved.eigen_groups} == {
            moebius_image(point, op.t) for point, _ in structure.eigen_groups
        }


def test_true_tripartite(make_state, diagonal_state):
    assert is_true_tripartite(diagonal_state)
    assert not is_true_tripartite(make_state([[1, 0], [0, 1]], [[1, 0], [0, 1]]))
    assert not is_true_tripartite(make_state([[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0]]))
    assert not is_true_tripartite(make_state([[1, 0], [0, 0]], [[0, 1], [0, 0]]))


def test_class_label_of_diagonal_state(diagonal_state):
    label = class_label(diagonal_state)
    assert (label.m_dim, label.n_dim) == (5, 5)
    assert (label.null_rows, label.b_rank_excess) == (0, 0)
    assert str(label.segre_shape) == "[(11)111]"
    assert label.params.format() == "[-1]"
    assert label.family.params is None
    assert label.to_document()["params"] == "[-1]"


def test_class_label_is_invariant(diagonal_state, rng):
    label = class_label(diagonal_state)
    for _ in range(2):
        assert class_label(apply_ilo(diagonal_state, random_ilo(5, 5, rng))) == label
    op = random_ilo(5, 5, rng, integral=True)
    assert all(not value.im and value.re.denominator == 1 for value in op.p.entries)
    assert class_label(apply_ilo(diagonal_state, op)) == label


def test_class_label_of_singular_state(make_state):
    label = class_label(make_state([[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]]))
    assert (label.null_rows, label.b_rank_excess) == (0, 1)
    assert label.singular_shape == ((2,), ())
    assert label.params is None


def test_class_label_rejects_bipartite(make_state):
    with pytest.raises(NotTrueTripartiteError):
        class_label(make_state([[1, 0], [0, 1]], [[1, 0], [0, 1]]))
    with pytest.raises(NotTrueTripartiteError):
        class_label(make_state([[1, 0], [0, 1]], [[2, 0], [0, 2]]))


def test_class_label_irrational_eigenvalue(make_state):
    with pytest.raises(IrreducibleRemainderError):
        class_label(make_state([[1, 0], [0, 1]], [[0, 2], [1, 0]]))


def test_gaussian_eigenvalues(make_state):
    state = make_state([[1, 0], [0, 1]], [[0, -1], [1, 0]])
    structure = pencil_structure(state)
    assert [point for point, _ in structure.eigen_groups] == [
        P(GaussianRational(0, -1)),
        P(GaussianRational(0, 1)),
    ]

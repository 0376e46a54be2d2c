"""
Shared fixtures for the test suite.
"""

from pathlib import Path
from random import Random

import pytest

from slocc_2mn.exactnum import ExactMatrix
from slocc_2mn.pencil import PencilState


@pytest.fixture
def rng() -> Random:
    return Random(0)


@pytest.fixture
def make_state():
    """
    Build a state from nested rows of literals for Γ₁ and Γ₂.
    """

    def _make_state(gamma1, gamma2) -> PencilState:
        return PencilState.from_matrices(
            ExactMatrix.from_rows(gamma1), ExactMatrix.from_rows(gamma2)
        )

    return _make_state


@pytest.fixture
def diagonal_state() -> PencilState:
    """
    The 2×5×5 state E' = diag{0, 1, 2, 1, 1}, J' = diag{1, 1, 1, 0, 0}.
    """
    return PencilState.from_matrices(
        ExactMatrix.diag([0, 1, 2, 1, 1]), ExactMatrix.diag([1, 1, 1, 0, 0])
    )


@pytest.fixture
def write_state(tmp_path):
    """
    Write a state as a JSON document and return its path.
    """

    def _write_state(state: PencilState, name: str) -> Path:
        path = tmp_path / f"{name}.json"
        path.write_text(state.to_document().model_dump_json(), encoding="utf-8")
        return path

    return _write_state

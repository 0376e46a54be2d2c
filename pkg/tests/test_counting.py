from fractions import Fraction

import pytest
from pydantic import ValidationError

from slocc_2mn.counting import (
    CountTable,
    SegreSymbol,
    build_table,
    f_convolution,
    f_recursive,
    growth_ratios,
    omega,
    omega_cells,
    omega_total,
    partition_count,
    published_table,
    restricted_partition_count,
    segre_count,
    segre_enumerate,
)
from slocc_2mn.exceptions import DomainError


def test_partition_count():
    assert [partition_count(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_restricted_partition_count():
    assert restricted_partition_count(3, 2) == 2
    assert restricted_partition_count(0, 0) == 1
    assert restricted_partition_count(5, 0) == 0
    assert restricted_partition_count(-1, 3) == 0
    assert restricted_partition_count(6, 3) == 7


def test_segre_count():
    assert [segre_count(n) for n in range(6)] == [1, 1, 3, 6, 14, 27]


@pytest.mark.parametrize("n", range(1, 8))
def test_segre_count_matches_enumeration(n):
    symbols = segre_enumerate(n)
    assert len(symbols) == segre_count(n)
    assert len({symbol.groups for symbol in symbols}) == len(symbols)
    assert all(symbol.total == n for symbol in symbols)


def test_segre_enumerate_small():
    assert [str(symbol) for symbol in segre_enumerate(2)] == ["[(11)]", "[2]", "[11]"]
    with pytest.raises(DomainError):
        segre_enumerate(0)


def test_segre_symbol_is_canonical():
    a = SegreSymbol(groups=[(1,), (1, 1)])
    b = SegreSymbol(groups=[[1, 1], [1]])
    assert a == b
    assert str(a) == "[(11)1]"
    assert a.total == 3
    assert str(SegreSymbol(groups=[(10, 1)])) == "[(10,1)]"
    with pytest.raises(ValidationError):
        SegreSymbol(groups=[(0,)])


def test_f_base_cases():
    for r in range(6):
        for c in range(6):
            assert f_recursive(0, r, c) == 1
            assert f_recursive(-2, r, c) == 0
    assert f_recursive(2, 1, 1) == 3
    assert f_recursive(3, 2, 0) == restricted_partition_count(3, 2)


@pytest.mark.parametrize("j", range(7))
def test_f_recursion_equals_convolution(j):
    for r in range(5):
        for c in range(5):
            assert f_recursive(j, r, c) == f_convolution(j, r, c)
            assert f_recursive(j, r, c) == f_recursive(j, c, r)


@pytest.mark.parametrize(
    "m,n,expected",
    [
        (2, 2, 2),
        (2, 3, 2),
        (3, 3, 6),
        (4, 4, 16),
        (5, 5, 34),
        (6, 7, 61),
        (7, 6, 61),
        (2, 9, 1),
        (9, 9, 655),
        (10, 10, 1309),
    ],
)
def test_omega_total(m, n, expected):
    assert omega_total(m, n) == expected


def test_omega_domain():
    assert omega(3, 3, 1, 0) == 1
    with pytest.raises(DomainError):
        omega(2, 5, 0, 0)
    with pytest.raises(DomainError):
        omega(3, 3, 0, 4)
    with pytest.raises(DomainError):
        omega_total(1, 3)


def test_omega_cells():
    cells = omega_cells(5, 5)
    assert list(cells.columns) == ["i", "j", "d_j", "segre", "f", "omega"]
    assert int(cells["omega"].sum()) - 1 == omega_total(5, 5)
    assert (cells["omega"] == cells["segre"] * cells["f"]).all()


def test_build_table_matches_published():
    table = build_table(10, 10)
    assert table.cells == published_table().cells
    assert len(table.to_long()) == 81


def test_table_formats():
    assert build_table(2, 2).to_tsv() == "M\\N\t2\n2\t2"
    assert build_table(3, 3).to_tsv() == "M\\N\t2\t3\n2\t2\t2\n3\t2\t6"
    assert build_table(2, 2).to_text().splitlines() == ["M\\N   2", "  2   2"]


def test_count_table_must_be_symmetric():
    with pytest.raises(ValidationError):
        CountTable(max_m=3, max_n=3, cells={(2, 3): 1, (3, 2): 2})


def test_growth_ratios():
    ratios = growth_ratios(build_table(10, 10))
    assert ratios[10] == Fraction(1309, 655)
    for n in (9, 10):
        assert Fraction(19, 10) <= ratios[n] <= Fraction(21, 10)

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from slocc_2mn import __version__
from slocc_2mn.cli import main
from slocc_2mn.nonlocal_params import ParamVector, normal_form_state


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def normal_form_path(write_state):
    def _normal_form_path(params: str) -> Path:
        state = normal_form_state(ParamVector.parse(params), 5)
        return write_state(state, "normal-form-" + params.strip("[]").replace("/", "_"))

    return _normal_form_path


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert result.stdout == f"slocc-2mn, version {__version__}\n"


def test_count(runner):
    result = runner.invoke(main, ["count", "6", "7"])
    assert result.exit_code == 0
    assert result.stdout == "61\n"
    assert runner.invoke(main, ["count", "1", "3"]).exit_code == 2


def test_table(runner):
    result = runner.invoke(main, ["table", "--max", "3", "--format", "tsv"])
    assert result.exit_code == 0
    assert result.stdout == "M\\N\t2\t3\n2\t2\t2\n3\t2\t6\n"
    text = runner.invoke(main, ["table"])
    assert text.exit_code == 0
    assert text.stdout.splitlines()[-1].split()[-1] == "1309"


def test_classify(runner, diagonal_state, write_state):
    result = runner.invoke(main, ["classify", str(write_state(diagonal_state, "diagonal"))])
    assert result.exit_code == 0
    label = json.loads(result.stdout)
    assert label["segre"] == "[(11)111]"
    assert label["params"] == "[-1]"
    assert (label["m"], label["n"], label["null_rows"], label["b_rank_excess"]) == (5, 5, 0, 0)


def test_classify_not_true_tripartite(runner, make_state, write_state):
    state = make_state([[1, 0], [0, 1]], [[1, 0], [0, 1]])
    result = runner.invoke(main, ["classify", str(write_state(state, "bipartite"))])
    assert result.exit_code == 3
    assert json.loads(result.stdout) == {"label": "not-true-tripartite"}


def test_classify_out_of_scope(runner, make_state, write_state):
    state = make_state([[1, 0], [0, 1]], [[0, 2], [1, 0]])
    result = runner.invoke(main, ["classify", str(write_state(state, "irrational"))])
    assert result.exit_code == 4
    assert result.stdout == ""


def test_classify_malformed(runner, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"m": 2, "n": 2, "gamma1": [["0.5", "0"], ["0", "1"]]}', encoding="utf-8")
    assert runner.invoke(main, ["classify", str(path)]).exit_code == 2
    assert runner.invoke(main, ["classify", str(tmp_path / "missing.json")]).exit_code == 2


def test_equiv(runner, normal_form_path):
    result = runner.invoke(
        main, ["equiv", str(normal_form_path("[2]")), str(normal_form_path("[1/2]"))]
    )
    assert result.exit_code == 0
    assert result.stdout == "equivalent\n"
    result = runner.invoke(
        main, ["equiv", str(normal_form_path("[2]")), str(normal_form_path("[3]"))]
    )
    assert result.exit_code == 1
    assert result.stdout == "inequivalent\n"


def test_canonical_params(runner):
    result = runner.invoke(main, ["canonical-params", "[3]"])
    assert result.exit_code == 0
    assert result.stdout == "[-2]\n"
    assert runner.invoke(main, ["canonical-params", "[1.5]"]).exit_code == 2
    assert runner.invoke(main, ["canonical-params", "[2]", "--m", "4"]).exit_code == 2


def test_orbit(runner):
    result = runner.invoke(main, ["orbit", "[2]"])
    assert result.exit_code == 0
    assert result.stdout == "[-1]\n[1/2]\n[2]\n"
    extended = runner.invoke(main, ["orbit", "[2, 3]", "--extra-h"])
    plain = runner.invoke(main, ["orbit", "[2, 3]"])
    assert len(extended.stdout.splitlines()) > len(plain.stdout.splitlines())


def test_catalog(runner):
    result = runner.invoke(main, ["catalog", "3", "4"])
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    assert document["omega"] == 5
    assert len(document["classes"]) == 5
    assert runner.invoke(main, ["catalog", "2", "5"]).exit_code == 2


def test_catalog_check(runner):
    result = runner.invoke(main, ["catalog", "6", "7", "--check"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "labels: 61, expected: 61"


def test_catalog_export(runner, tmp_path):
    result = runner.invoke(main, ["catalog", "3", "4", "--export", str(tmp_path)])
    assert result.exit_code == 0
    path = Path(result.stdout.strip())
    assert path.is_file() and path.name == "catalog-3x4.json"
    assert json.loads(path.read_text(encoding="utf-8"))["omega"] == 5


def test_selftest(runner):
    result = runner.invoke(
        main, ["selftest", "--check", "base_cases", "--check", "growth", "--seed", "3"]
    )
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert [line.split("\t")[:2] for line in lines] == [
        ["PASS", "base_cases"],
        ["PASS", "growth"],
    ]
    assert runner.invoke(main, ["selftest", "--check", "unknown"]).exit_code == 2
    assert runner.invoke(main, ["selftest", "--trials", "0"]).exit_code == 2


def test_table_export(runner, tmp_path):
    result = runner.invoke(main, ["table", "--max", "3", "--export", str(tmp_path)])
    assert result.exit_code == 0
    path = Path(result.stdout.strip())
    assert path.is_file() and path.name == "omega-3x3.csv"
    assert path.read_text(encoding="utf-8").splitlines() == [
        "m,n,omega",
        "2,2,2",
        "2,3,2",
        "3,2,2",
        "3,3,6",
    ]

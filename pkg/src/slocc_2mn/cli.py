"""
Command-line interface of the package.

Exit codes: 0 success, 1 failed property or inequivalent states, 2 usage or
malformed input, 3 state not true tripartite, 4 eigenvalue outside the exact
Gaussian-rational scope.
"""

import json
import logging
import sys
from pathlib import Path

import click
from pydantic import ValidationError

from . import __version__
from .catalog import catalog_document, count_check, export_catalog
from .checks import get_suite, list_checks
from .counting import build_table, export_table, omega_total
from .exceptions import IrreducibleRemainderError, NotTrueTripartiteError
from .nonlocal_params import ParamVector, canonical_params, orbit
from .pencil import ClassLabel, PencilState, class_label
from .settings import SETTINGS
from .storage import get_storage
from .validation import StateDocument

__all__ = ["main"]

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NOT_TRUE_TRIPARTITE = 3
EXIT_OUT_OF_SCOPE = 4


class CliError(click.ClickException):
    """
    Error reported on stderr with a command-specific exit code.
    """

    def __init__(self, message: str, exit_code: int = EXIT_USAGE):
        super().__init__(message)
        self.exit_code = exit_code


def _load_state(path: Path) -> PencilState:
    try:
        document = StateDocument.model_validate_json(path.read_text(encoding="utf-8"))
        return PencilState.from_document(document)
    except (ValidationError, ValueError) as error:
        raise CliError(f"Malformed state document '{path}': {error}") from error


def _classify(path: Path) -> ClassLabel:
    state = _load_state(path)
    try:
        return class_label(state)
    except NotTrueTripartiteError as error:
        logger.info("%s: %s", path, error)
        click.echo(json.dumps({"label": "not-true-tripartite"}))
        click.get_current_context().exit(EXIT_NOT_TRUE_TRIPARTITE)
    except IrreducibleRemainderError as error:
        raise CliError(str(error), exit_code=EXIT_OUT_OF_SCOPE) from error


def _parse_params(text: str, m: int | None, extra_h: bool) -> ParamVector:
    try:
        return ParamVector.parse(text, m=m, extra_h=extra_h)
    except ValueError as error:
        raise CliError(f"Malformed parameters '{text}': {error}") from error


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log progress information to stderr.")
@click.version_option(__version__, prog_name="slocc-2mn")
def main(verbose: bool):
    """Exact SLOCC classification of pure 2xMxN states."""
    logging.basicConfig(
        level=logging.INFO if verbose else SETTINGS.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


@main.command()
@click.argument("m", type=click.IntRange(min=2))
@click.argument("n", type=click.IntRange(min=2))
def count(m: int, n: int):
    """Print the number of true tripartite classes of 2xMxN states."""
    click.echo(omega_total(m, n))


@main.command()
@click.option(
    "--max",
    "max_dim",
    type=click.IntRange(min=2),
    default=10,
    show_default=True,
    help="Largest M and N in the table.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["tsv", "text"]),
    default="text",
    show_default=True,
)
@click.option("--progress", is_flag=True, help="Display a progress bar.")
@click.option(
    "--export",
    "export_path",
    type=click.Path(file_okay=False, path_type=Path),
    help="Write the table as CSV to this directory instead of printing it.",
)
def table(max_dim: int, fmt: str, progress: bool, export_path: Path | None):
    """Print the table of class counts for 2 <= M, N <= MAX."""
    counts = build_table(max_dim, max_dim, progress=progress)
    if export_path is not None:
        click.echo(export_table(counts, storage=get_storage(root=export_path)))
        return
    click.echo(counts.to_tsv() if fmt == "tsv" else counts.to_text())


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def classify(path: Path):
    """Print the class label of the state stored in PATH as JSON."""
    click.echo(json.dumps(_classify(path).to_document(), indent=2))


@main.command("canonical-params")
@click.argument("params")
@click.option("--m", "m", type=click.IntRange(min=2), help="Number of source eigenvalues.")
@click.option("--extra-h", is_flag=True, help="Include H, for families with N = m + 1.")
def canonical_params_command(params: str, m: int | None, extra_h: bool):
    """Print the canonical representative of a parameter vector such as "[4/3, 3/2]"."""
    click.echo(canonical_params(_parse_params(params, m, extra_h)).format())


@main.command("orbit")
@click.argument("params")
@click.option("--m", "m", type=click.IntRange(min=2), help="Number of source eigenvalues.")
@click.option("--extra-h", is_flag=True, help="Include H, for families with N = m + 1.")
def orbit_command(params: str, m: int | None, extra_h: bool):
    """Print every parameter vector equivalent to PARAMS, one per line."""
    members = orbit(_parse_params(params, m, extra_h))
    for member in sorted(members, key=ParamVector.sort_key):
        click.echo(member.format())


@main.command()
@click.argument("path_a", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("path_b", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_context
def equiv(ctx: click.Context, path_a: Path, path_b: Path):
    """Decide whether the states in PATH_A and PATH_B are SLOCC equivalent."""
    if _classify(path_a) == _classify(path_b):
        click.echo("equivalent")
    else:
        click.echo("inequivalent")
        ctx.exit(EXIT_FAILURE)


@main.command()
@click.argument("m", type=click.IntRange(min=2))
@click.argument("n", type=click.IntRange(min=2))
@click.option("--check", is_flag=True, help="Compare the label count with the closed form.")
@click.option(
    "--export",
    "export_path",
    type=click.Path(file_okay=False, path_type=Path),
    help="Write the catalog to this directory instead of printing it.",
)
@click.pass_context
def catalog(ctx: click.Context, m: int, n: int, check: bool, export_path: Path | None):
    """Print every class family of 2xMxN states with representatives, M <= N <= 2M."""
    if not m <= n <= 2 * m:
        raise CliError(f"Catalogs cover M <= N <= 2M, got M={m}, N={n}")
    if check:
        report = count_check(m, n)
        click.echo(report.cells.to_string(index=False))
        click.echo(f"labels: {report.actual}, expected: {report.expected}")
        if not report.passed:
            ctx.exit(EXIT_FAILURE)
        return
    if export_path is not None:
        click.echo(export_catalog(m, n, storage=get_storage(root=export_path)))
        return
    click.echo(json.dumps(catalog_document(m, n), indent=2))


@main.command()
@click.option("--seed", type=int, default=SETTINGS.selftest.seed, show_default=True)
@click.option(
    "--trials",
    type=click.IntRange(min=1),
    default=SETTINGS.selftest.trials,
    show_default=True,
)
@click.option(
    "--check",
    "names",
    type=click.Choice(list_checks()),
    multiple=True,
    help="Run only the named checks. May be repeated.",
)
@click.option("--progress", is_flag=True, help="Display progress bars.")
def selftest(seed: int, trials: int, names: tuple[str, ...], progress: bool):
    """Run the property suite and print a report."""
    suite = get_suite(list(names) or None, seed=seed, trials=trials, progress=progress)
    suite()
    for result in suite.results:
        status = "PASS" if result.passed else "FAIL"
        click.echo(f"{status}\t{result.check}\t{result.detail}")
    if (failure := suite.first_failure) is not None:
        raise CliError(f"Check '{failure.check}' failed", exit_code=EXIT_FAILURE)

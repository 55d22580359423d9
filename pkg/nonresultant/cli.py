"""
Command line interface ``nrt``.

Exit codes: 0 on success, 2 on usage or validation errors, 3 when a
verification finds a mismatch, 1 when some lines of a batch fail.
"""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

import typer

from nonresultant.algebra import mdisc_new, profile_new
from nonresultant.client import HomologyClient
from nonresultant.exceptions import (
    ComplexComplementEmptyError,
    ResultantError,
    SignTrackingError,
)
from nonresultant.models.documents import (
    CohomologyDocument,
    PageDocument,
    ReportDocument,
    WitnessDocument,
)
from nonresultant.models.forms import PolySystem
from nonresultant.oracle import in_resultant_variety
from nonresultant.rendering import (
    render_page,
    render_rational,
    render_real,
    render_report,
    render_system,
)
from nonresultant.utils.constants import (
    DEFAULT_BOUND,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    SEED_ENV_VAR,
    ExitCode,
    PageKind,
)

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="nrt",
    help="Cohomology of spaces of non-resultant systems of binary forms.",
    no_args_is_help=True,
    add_completion=False,
)

JSON_OPTION = typer.Option(False, "--json", help="Emit a JSON document instead of text.")
UNREDUCED_OPTION = typer.Option(False, "--unreduced", help="Also report unreduced cohomology.")
VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Log debug output to stderr.")
DEGREES_ARGUMENT = typer.Argument(..., help="Degrees d1 d2 ... of the forms.")

LEAVES = ("1", "inf")


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


@contextmanager
def _usage_errors() -> Iterator[None]:
    """Turn package errors into exit code 2 with the message on stderr."""
    try:
        yield
    except ResultantError as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=ExitCode.USAGE)


def _emit(document, text: str, as_json: bool) -> None:
    typer.echo(document.model_dump_json(exclude_none=True) if as_json else text)


@app.command()
def real(
    degrees: List[int] = DEGREES_ARGUMENT,
    as_json: bool = JSON_OPTION,
    unreduced: bool = UNREDUCED_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Integer cohomology of real non-resultant systems (closed form)."""
    _configure_logging(verbose)
    with _usage_errors():
        profile = profile_new(degrees)
        result = HomologyClient().closed_form.real_cohomology(profile)
    _emit(
        CohomologyDocument.from_real(result, unreduced=unreduced),
        render_real(result, unreduced=unreduced),
        as_json,
    )


@app.command(name="complex")
def complex_(
    degrees: List[int] = DEGREES_ARGUMENT,
    as_json: bool = JSON_OPTION,
    unreduced: bool = UNREDUCED_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Rational cohomology of complex non-resultant systems (closed form)."""
    _configure_logging(verbose)
    with _usage_errors():
        profile = profile_new(degrees)
        try:
            g = HomologyClient().closed_form.complex_cohomology(profile)
        except ComplexComplementEmptyError as e:
            logger.debug("%s", e)
            g = None
    _emit(
        CohomologyDocument.from_complex(profile, g, unreduced=unreduced),
        render_rational(f"profile {profile}", g, unreduced=unreduced),
        as_json,
    )


@app.command()
def mdisc(
    d: int = typer.Option(..., "--d", help="Degree of the forms."),
    m: int = typer.Option(..., "--m", help="Root multiplicity of the discriminant."),
    as_json: bool = JSON_OPTION,
    unreduced: bool = UNREDUCED_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Rational cohomology of the complement of an m-discriminant (closed form)."""
    _configure_logging(verbose)
    with _usage_errors():
        params = mdisc_new(d, m)
        g = HomologyClient().closed_form.m_discriminant_cohomology(params)
    _emit(
        CohomologyDocument.from_mdisc(params, g, unreduced=unreduced),
        render_rational(f"m-discriminant d={d}, m={m}", g, unreduced=unreduced),
        as_json,
    )


@app.command()
def page(
    kind: PageKind = typer.Argument(..., help="real, complex or mdisc."),
    degrees: Optional[List[int]] = typer.Argument(None, help="Degrees, for real and complex."),
    leaf: str = typer.Option("1", "--leaf", help="Page to print: 1 or inf."),
    d: Optional[int] = typer.Option(None, "--d", help="Degree, for mdisc."),
    m: Optional[int] = typer.Option(None, "--m", help="Multiplicity, for mdisc."),
    as_json: bool = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Print a page of the spectral sequence as a grid."""
    _configure_logging(verbose)
    if leaf not in LEAVES:
        typer.echo(f"error: --leaf must be one of {', '.join(LEAVES)}", err=True)
        raise typer.Exit(code=ExitCode.USAGE)
    profile = params = None
    with _usage_errors():
        spectral = HomologyClient().spectral
        if kind == PageKind.MDISC:
            if d is None or m is None or degrees:
                typer.echo("error: page mdisc takes --d and --m and no degrees", err=True)
                raise typer.Exit(code=ExitCode.USAGE)
            params = mdisc_new(d, m)
            e1 = spectral.build_mdisc_e1(params)
        else:
            if d is not None or m is not None:
                typer.echo("error: --d and --m only apply to page mdisc", err=True)
                raise typer.Exit(code=ExitCode.USAGE)
            profile = profile_new(degrees or [])
            if kind == PageKind.REAL:
                e1 = spectral.build_real_e1(profile)
            else:
                e1 = spectral.build_complex_e1(profile)

        report = None
        shown = e1
        if leaf == "inf":
            if kind == PageKind.REAL:
                report = spectral.run_real_cascade(e1, profile)
            else:
                report = spectral.finish_rational_page(e1)
            shown = report.final
    _emit(
        PageDocument.from_page(shown, profile=profile, params=params, report=report),
        render_page(shown),
        as_json,
    )


@app.command()
def verify(
    degrees: List[int] = DEGREES_ARGUMENT,
    samples: int = typer.Option(DEFAULT_SAMPLES, "--samples", help="Systems to classify."),
    bound: int = typer.Option(DEFAULT_BOUND, "--bound", help="Coefficient bound."),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", envvar=SEED_ENV_VAR, help="Root seed."),
    workers: int = typer.Option(DEFAULT_WORKERS, "--workers", help="Sampling streams."),
    as_json: bool = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Count components of the real complement by sampling and compare with the closed form."""
    _configure_logging(verbose)
    with _usage_errors():
        profile = profile_new(degrees)
        client = HomologyClient(samples=samples, bound=bound, seed=seed, workers=workers)
        report = client.oracle.census(profile)
    _emit(ReportDocument.from_report(report), render_report(report), as_json)
    if not report.passed:
        logger.warning("Census of %s does not match the closed form", profile)
        raise typer.Exit(code=ExitCode.VERIFICATION_MISMATCH)


@app.command()
def witness(
    d1: int = typer.Argument(..., help="Degree of the first form."),
    d2: int = typer.Argument(..., help="Degree of the second form."),
    index: int = typer.Option(..., "--index", "-k", help="Winding index to realize."),
    as_json: bool = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Print the canonical system with a given winding index, re-checked."""
    _configure_logging(verbose)
    with _usage_errors():
        try:
            system: PolySystem = HomologyClient().oracle.witness(d1, d2, index)
        except SignTrackingError as e:
            typer.echo(f"verification failed: {e}", err=True)
            raise typer.Exit(code=ExitCode.VERIFICATION_MISMATCH)
        in_sigma = in_resultant_variety(system)
    if in_sigma:
        typer.echo("verification failed: the witness lies on Sigma", err=True)
        raise typer.Exit(code=ExitCode.VERIFICATION_MISMATCH)
    text = render_system(system) + f"\nwinding index: {index} (verified)"
    _emit(WitnessDocument.from_system(system, index, index, in_sigma), text, as_json)


def _parse_batch_line(line: str) -> Optional[List[int]]:
    content = line.split("#", 1)[0].strip()
    if not content:
        return None
    return [int(token) for token in content.split()]


@app.command()
def batch(
    file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Profiles, one per line."),
    unreduced: bool = UNREDUCED_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Real cohomology of every profile in a file, one JSON document per line."""
    _configure_logging(verbose)
    with _usage_errors():
        client = HomologyClient()
    failures = 0
    for number, line in enumerate(file.read_text(encoding="utf-8").splitlines(), start=1):
        try:
            degrees = _parse_batch_line(line)
            if degrees is None:
                continue
            result = client.closed_form.real_cohomology(profile_new(degrees))
        except (ResultantError, ValueError) as e:
            failures += 1
            typer.echo(f"line {number}: {e}", err=True)
            continue
        document = CohomologyDocument.from_real(result, unreduced=unreduced)
        typer.echo(document.model_dump_json(exclude_none=True))
    logger.info("Batch %s finished with %d failed lines", file, failures)
    if failures:
        raise typer.Exit(code=ExitCode.BATCH_FAILURE)


def main() -> None:
    """Console script entry point."""
    app()


if __name__ == "__main__":
    main()

"""Main CLI entry point for zdrigid."""

import logging
import sys
from collections.abc import Callable
from typing import Any

import click
import numpy as np
import numpy.typing as npt
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from rigidity_cli.config import load_system_spec, resolve_settings, resolved_options
from rigidity_cli.formatters import format_json, format_report, format_yaml
from rigidity_cli.models import (
    AnalysisReportDoc,
    BudgetError,
    CliError,
    InapplicableError,
    MahlerReport,
    SpecError,
    SystemReport,
    SystemSpec,
    ZeroDivisorDoc,
    claim_levels,
)
from zd_rigidity import __version__ as engine_version
from zd_rigidity.analytic import (
    SampledTorusMap,
    convolution_kernel,
    load_sampled_map,
    variety_measure_check,
    vk_decompose,
    vk_homomorphism_check,
    vk_verify_uniqueness,
    zero_divisor_check,
)
from zd_rigidity.config import EngineSettings
from zd_rigidity.entropy import (
    entropy_classify,
    mahler_d1_exact,
    mahler_quadrature,
    mahler_roots_of_unity,
    periodic_point_growth,
)
from zd_rigidity.errors import (
    BudgetExceededError,
    DimensionMismatchError,
    PolynomialSyntaxError,
    PresentationError,
    RigidityError,
)
from zd_rigidity.fixtures import EXAMPLES, principal
from zd_rigidity.laurent import LaurentPoly, parse_poly
from zd_rigidity.models.reports import (
    HypothesisTrail,
    MahlerEstimate,
    VerdictKind,
    VKCheckReport,
)
from zd_rigidity.rigidity import hypothesis_trail, verdict

console = Console(stderr=True)
logger = logging.getLogger(__name__)


@click.group()
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json", "yaml"], case_sensitive=False),
    default="text",
    help="Output format",
)
@click.option("--mixing-bound", type=click.IntRange(min=1), help="Sup-norm bound of mixing search")
@click.option("--mahler-grid", type=click.IntRange(min=2), help="Quadrature resolution per axis")
@click.option("--gb-max-pairs", type=click.IntRange(min=1), help="Gröbner critical-pair budget")
@click.option("--seed", type=click.IntRange(min=0), help="Seed for the sampling checks")
@click.option("--verbose", "-v", is_flag=True, help="Log engine progress to stderr")
@click.version_option(engine_version, prog_name="zdrigid")
@click.pass_context
def cli(
    ctx: click.Context,
    output_format: str,
    mixing_bound: int | None,
    mahler_grid: int | None,
    gb_max_pairs: int | None,
    seed: int | None,
    verbose: bool,
):
    """zdrigid - rigidity of algebraic Z^d-actions.

    Examples:
        zdrigid analyze docs/systems/ledrappier.yaml
        zdrigid --format json rigidity docs/systems/ledrappier.yaml docs/systems/full_shift_2.yaml
        zdrigid mahler "1 + u1 + u2"
    """
    ctx.ensure_object(dict)
    ctx.obj["format"] = output_format.lower()
    ctx.obj["flags"] = {
        "mixing_bound": mixing_bound,
        "mahler_grid": mahler_grid,
        "gb_max_pairs": gb_max_pairs,
        "seed": seed,
    }
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(message)s",
            handlers=[RichHandler(console=console, show_path=False)],
        )


def handle_output(ctx: click.Context, doc: AnalysisReportDoc) -> None:
    """Emit the report document in the selected format."""
    output_format = ctx.obj["format"]
    if output_format == "json":
        click.echo(format_json(doc))
    elif output_format == "yaml":
        click.echo(format_yaml(doc), nl=False)
    else:
        format_report(doc)


def handle_error(error: Exception) -> None:
    """Print an error and exit with the code of its class.

    Maps exception types to exit codes:
    - Parse and validation errors: exit code 2
    - BudgetExceededError: exit code 3
    - InapplicableError (rigidity --strict): exit code 4
    - Anything else: exit code 1
    """
    exit_code = 1
    details: dict[str, Any] = {}
    if isinstance(error, CliError):
        exit_code = error.exit_code
        details = error.details
    elif isinstance(error, PolynomialSyntaxError | PresentationError | DimensionMismatchError):
        exit_code = 2
        details = error.details
    elif isinstance(error, ValidationError | ValueError):
        exit_code = 2
    elif isinstance(error, BudgetExceededError):
        exit_code = 3
        details = error.details
    elif isinstance(error, RigidityError):
        details = error.details

    console.print(f"[red]Error:[/red] {error}", style="red")
    if details:
        console.print(f"[dim]Details: {details}[/dim]")
    sys.exit(exit_code)


def _settings(ctx: click.Context, specs: list[SystemSpec], **extra: Any) -> EngineSettings:
    try:
        return resolve_settings(specs, {**ctx.obj["flags"], **extra})
    except ValidationError as e:
        raise SpecError(
            "Invalid option values", {"errors": "; ".join(err["msg"] for err in e.errors())}
        ) from e


def _example_spec(name: str) -> SystemSpec:
    M = EXAMPLES[name]()
    rows = [str(row[0]) if M.k == 1 else [str(e) for e in row] for row in M.rows]
    return SystemSpec(name=M.label(), d=M.d, k=M.k, relations=rows)


def _load_spec(path: str | None, example: str | None) -> SystemSpec:
    if (path is None) == (example is None):
        raise SpecError("Give exactly one of a system file or --example")
    if example is not None:
        return _example_spec(example)
    assert path is not None
    return load_system_spec(path)


def _system_report(spec: SystemSpec, trail: HypothesisTrail) -> SystemReport:
    return SystemReport(spec=spec, trail=trail, certification=claim_levels(trail))


def _run(ctx: click.Context, body: Callable[[], AnalysisReportDoc]) -> AnalysisReportDoc | None:
    try:
        doc = body()
    except BudgetExceededError as e:
        handle_error(BudgetError(e.message, e.details))
        return None
    except Exception as e:
        handle_error(e)
        return None
    handle_output(ctx, doc)
    return doc


# Analyze command


@cli.command()  # type: ignore[misc]  # Click decorators modify function signatures
@click.argument("spec_file", required=False, type=click.Path(dir_okay=False))
@click.option("--example", type=click.Choice(sorted(EXAMPLES)), help="Analyze a built-in system")
@click.pass_context
def analyze(ctx: click.Context, spec_file: str | None, example: str | None):
    """Check connectedness, mixing and entropy of one system.

    Example:
        zdrigid analyze docs/systems/ledrappier.yaml
        zdrigid analyze --example two-torsion
    """

    def body() -> AnalysisReportDoc:
        spec = _load_spec(spec_file, example)
        settings = _settings(ctx, [spec])
        trail = hypothesis_trail(spec.to_presentation(), settings.mixing_bound, settings)
        report = _system_report(spec, trail)
        return AnalysisReportDoc(
            tool_version=engine_version,
            command="analyze",
            options=resolved_options(settings),
            systems=[report],
        )

    _run(ctx, body)


# Rigidity command


@cli.command()  # type: ignore[misc]  # Click decorators modify function signatures
@click.argument("source_file", type=click.Path(dir_okay=False))
@click.argument("target_file", type=click.Path(dir_okay=False))
@click.option("--strict", is_flag=True, help="Exit with code 4 when the criterion is inapplicable")
@click.pass_context
def rigidity(ctx: click.Context, source_file: str, target_file: str, strict: bool):
    """Decide whether every equivariant continuous map X1 -> X2 is affine.

    Example:
        zdrigid rigidity docs/systems/ledrappier.yaml docs/systems/ledrappier.yaml
        zdrigid rigidity --strict docs/systems/ledrappier.yaml docs/systems/diagonal_binomial.yaml
    """

    def body() -> AnalysisReportDoc:
        specs = [load_system_spec(source_file), load_system_spec(target_file)]
        settings = _settings(ctx, specs)
        M1, M2 = (spec.to_presentation() for spec in specs)
        result = verdict(M1, M2, settings.mixing_bound, settings)
        return AnalysisReportDoc(
            tool_version=engine_version,
            command="rigidity",
            options=resolved_options(settings),
            systems=[
                _system_report(spec, trail)
                for spec, trail in zip(specs, (result.source, result.target), strict=True)
            ],
            verdict=result,
        )

    doc = _run(ctx, body)
    if strict and doc is not None and doc.verdict is not None:
        if doc.verdict.verdict == VerdictKind.INAPPLICABLE:
            handle_error(
                InapplicableError(
                    "Rigidity criterion inapplicable",
                    {"failed": "; ".join(doc.verdict.failed_hypotheses)},
                )
            )


# Mahler command


def _parse_polynomial(text: str, dim: int | None) -> LaurentPoly:
    f = parse_poly(text, dim)
    if f.is_zero():
        raise SpecError("The polynomial must be nonzero")
    return f


@cli.command()  # type: ignore[misc]  # Click decorators modify function signatures
@click.argument("polynomial")
@click.option("--dim", "-d", type=click.IntRange(min=1), help="Ring dimension (inferred if omitted)")
@click.option("--periodic", is_flag=True, help="Also count periodic points of R_d/(f)")
@click.pass_context
def mahler(ctx: click.Context, polynomial: str, dim: int | None, periodic: bool):
    """Estimate the Mahler measure m(f), the entropy of R_d/(f).

    Example:
        zdrigid mahler "1 + u1 + u2"
        zdrigid mahler "u1 - 2" --periodic
    """

    def body() -> AnalysisReportDoc:
        settings = _settings(ctx, [])
        f = _parse_polynomial(polynomial, dim)
        estimates: list[MahlerEstimate] = []
        if f.dim == 1:
            estimates.append(mahler_d1_exact(f))
        estimates.append(mahler_quadrature(f, settings.mahler_grid))
        estimates.append(mahler_roots_of_unity(f, settings.roots_of_unity_order))
        report = MahlerReport(
            polynomial=str(f),
            d=f.dim,
            estimates=estimates,
            entropy=entropy_classify(principal(f), settings),
            periodic=periodic_point_growth(f, settings.periodic_orders) if periodic else [],
        )
        return AnalysisReportDoc(
            tool_version=engine_version,
            command="mahler",
            options=resolved_options(settings),
            mahler=report,
        )

    _run(ctx, body)


# Splitting check


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise SpecError(f"{what} must be comma-separated integers, got {text!r}") from e


def _constructed_map(character: list[int], amplitude: float, resolution: int) -> SampledTorusMap:
    """exp(2πi (k·x + a Σ_j sin(2π x_j))) on the resolution^m grid."""

    def lift(theta: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        return amplitude * np.sin(2 * np.pi * theta).sum(axis=-1)

    return SampledTorusMap.from_splitting(character, lift, resolution)


@cli.command(name="vk-check")  # type: ignore[misc]  # Click decorators modify function signatures
@click.argument("fixture", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--character", default="1", help="Winding numbers of a constructed map, e.g. '1,-2'")
@click.option("--amplitude", default=0.1, type=float, help="Amplitude of the constructed lift")
@click.option("--resolution", default=256, type=click.IntRange(min=4), help="Samples per axis")
@click.option("--endomorphism", help="Integer matrix checked for equivariance, rows split by ';'")
@click.pass_context
def vk_check(
    ctx: click.Context,
    fixture: str | None,
    character: str,
    amplitude: float,
    resolution: int,
    endomorphism: str | None,
):
    """Split a sampled circle-valued map into character and continuous lift.

    Reads phases (in turns) from an .npz fixture, or constructs a map from winding
    numbers and a trigonometric lift.

    Example:
        zdrigid vk-check --character 1,-2 --resolution 512
        zdrigid vk-check tests/fixtures/map.npz
    """

    def body() -> AnalysisReportDoc:
        settings = _settings(ctx, [])
        if fixture is not None:
            f = load_sampled_map(fixture)
        else:
            f = _constructed_map(_parse_ints(character, "--character"), amplitude, resolution)
        matrix = None
        if endomorphism is not None:
            matrix = [_parse_ints(row, "--endomorphism") for row in endomorphism.split(";")]
        decomposition = vk_decompose(f)
        unique, discrepancy = vk_verify_uniqueness(f)
        offset = [n // 3 for n in f.shape]
        report = VKCheckReport(
            shape=list(f.shape),
            character=list(decomposition.character),
            residual=decomposition.residual,
            unique=unique,
            discrepancy=discrepancy,
            homomorphism_error=vk_homomorphism_check(f, f.translate(offset), matrix),
        )
        return AnalysisReportDoc(
            tool_version=engine_version,
            command="vk-check",
            options=resolved_options(settings),
            vk_check=report,
        )

    _run(ctx, body)


# Zero-divisor check


@cli.command(name="zdc-check")  # type: ignore[misc]  # Click decorators modify function signatures
@click.argument("polynomial")
@click.option("--dim", "-d", type=click.IntRange(min=1), help="Ring dimension (inferred if omitted)")
@click.option("--radius", type=click.IntRange(min=1), help="Truncation radius")
@click.option("--trials", type=click.IntRange(min=1), help="Random baselines")
@click.option("--samples", type=click.IntRange(min=1), help="Torus samples for the variety check")
@click.pass_context
def zdc_check(
    ctx: click.Context,
    polynomial: str,
    dim: int | None,
    radius: int | None,
    trials: int | None,
    samples: int | None,
):
    """Look for convolution zero-divisor behaviour of a polynomial's coefficients.

    Example:
        zdrigid zdc-check "1 - u1"
        zdrigid zdc-check "1 + u1 + u2" --radius 8
    """

    def body() -> AnalysisReportDoc:
        settings = _settings(
            ctx, [], zdc_radius=radius, zdc_trials=trials, variety_samples=samples
        )
        f = _parse_polynomial(polynomial, dim)
        check = zero_divisor_check(
            convolution_kernel(f),
            trials=settings.zdc_trials,
            radius=settings.zdc_radius,
            seed=settings.seed,
        )
        doc = ZeroDivisorDoc(
            polynomial=str(f),
            check=check,
            variety_fraction=variety_measure_check(f, settings.variety_samples, settings.seed),
            variety_samples=settings.variety_samples,
        )
        return AnalysisReportDoc(
            tool_version=engine_version,
            command="zdc-check",
            options=resolved_options(settings),
            zero_divisor=doc,
        )

    _run(ctx, body)


if __name__ == "__main__":
    cli()

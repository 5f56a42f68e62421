"""Output formatters for the zdrigid CLI."""

import json
from typing import Any

import yaml
from rich.console import Console
from rich.table import Table
from rich.text import Text

from rigidity_cli.models import AnalysisReportDoc, MahlerReport, SystemReport, ZeroDivisorDoc
from zd_rigidity.models.reports import (
    EntropyValue,
    ExactEntropy,
    IntervalEntropy,
    MixingCertified,
    MixingStatus,
    NotMixing,
    RigidityVerdict,
    UpperBoundEntropy,
    VKCheckReport,
)

console = Console()


def format_json(data: Any) -> str:
    """Format data as JSON.

    Args:
        data: Data to format (Pydantic model or dict)

    Returns:
        JSON string with a stable key order

    Example:
        >>> format_json({"verdict": "rigid"})
        '{\\n  "verdict": "rigid"\\n}'
    """
    data_dict = data.model_dump(mode="json") if hasattr(data, "model_dump") else data
    return json.dumps(data_dict, indent=2)


def format_yaml(data: Any) -> str:
    """Format data as YAML.

    Example:
        >>> format_yaml({"verdict": "rigid"})
        'verdict: rigid\\n'
    """
    data_dict = data.model_dump(mode="json") if hasattr(data, "model_dump") else data
    return yaml.safe_dump(data_dict, default_flow_style=False, sort_keys=False)


def format_status(status: str) -> Text:
    """Format a verdict or certification level with color.

    Example:
        >>> format_status("rigid").plain
        'rigid'
    """
    colors = {
        "rigid": "green",
        "certified": "green",
        "yes": "green",
        "not_rigid": "yellow",
        "bounded-search": "yellow",
        "assumed": "yellow",
        "inapplicable": "red",
        "no": "red",
    }
    return Text(status, style=colors.get(status.lower(), "white"))


def describe_mixing(status: MixingStatus) -> str:
    if isinstance(status, NotMixing):
        return f"not mixing: n={tuple(status.witness)}, v=({', '.join(status.certificate)})"
    if isinstance(status, MixingCertified):
        return f"mixing ({status.reason})"
    return f"no witness up to {status.bound}"


def describe_entropy(value: EntropyValue) -> str:
    if isinstance(value, ExactEntropy):
        return f"{value.value:.9f} ({value.method.value})"
    if isinstance(value, IntervalEntropy):
        return f"[{value.lo:.6f}, {value.hi:.6f}] ({value.method})"
    if isinstance(value, UpperBoundEntropy):
        return f"<= {value.value:.6f} ({value.method})"
    return value.kind.replace("_", " ")


def format_system(report: SystemReport) -> str:
    """Print the hypothesis trail of one system as a table."""
    trail = report.trail
    levels = report.certification
    table = Table(title=f"System {trail.system}")
    table.add_column("Property", style="cyan")
    table.add_column("Result")
    table.add_column("Level")

    connected = trail.connected
    connected_text = "yes" if connected.connected else "no"
    if not connected.connected:
        connected_text += f" ({connected.prime}-torsion, v={connected.certificate})"
    table.add_row("Connected", connected_text, format_status(levels["connected"].value))
    table.add_row("Mixing", describe_mixing(trail.mixing), format_status(levels["mixing"].value))
    table.add_row("Noetherian", "yes", format_status(levels["noetherian"].value))
    table.add_row(
        "Finite entropy",
        "yes" if trail.entropy.finite else "no",
        format_status(levels["entropy_finite"].value),
    )
    table.add_row(
        "Entropy",
        describe_entropy(trail.entropy.value),
        format_status(levels["entropy_value"].value),
    )
    console.print(table)
    for note in trail.entropy.diagnostics.notes:
        console.print(f"[dim]  {note}[/dim]")
    return ""


def format_verdict(verdict: RigidityVerdict) -> str:
    """Print the verdict with refuted and assumed hypotheses."""
    console.print(Text("Verdict: ", style="bold") + format_status(verdict.verdict.value))
    for failure in verdict.failed_hypotheses:
        console.print(f"  [red]- {failure}[/red]")
    for assumption in verdict.assumptions:
        console.print(f"  [yellow]- {assumption}[/yellow]")
    return ""


def format_mahler(report: MahlerReport) -> str:
    """Print Mahler estimates and periodic-point counts."""
    table = Table(title=f"Mahler measure of {report.polynomial}")
    table.add_column("Method", style="cyan")
    table.add_column("Estimate", justify="right")
    table.add_column("Error indicator", justify="right")
    table.add_column("Resolution")
    for estimate in report.estimates:
        table.add_row(
            estimate.method.value,
            f"{estimate.estimate:.9f}",
            f"{estimate.error_indicator:.3g}",
            ", ".join(f"{k}={v}" for k, v in estimate.resolution.items()),
        )
    console.print(table)

    if report.periodic:
        periodic = Table(title="Periodic points")
        periodic.add_column("N", justify="right", style="cyan")
        periodic.add_column("Count", justify="right")
        periodic.add_column("log(count)/N^d", justify="right")
        for count in report.periodic:
            if count.degenerate:
                periodic.add_row(str(count.order), Text("degenerate", style="dim"), "")
            else:
                periodic.add_row(str(count.order), str(count.count), f"{count.growth:.6f}")
        console.print(periodic)
    return ""


def format_vk(report: VKCheckReport) -> str:
    """Print a character-plus-lift check."""
    table = Table(title="Splitting check", show_header=False)
    table.add_column("Property", style="cyan")
    table.add_column("Value")
    table.add_row("Grid", " x ".join(str(n) for n in report.shape))
    table.add_row("Character", str(tuple(report.character)))
    table.add_row("Reconstruction residual", f"{report.residual:.3g}")
    table.add_row("Path independent", format_status("yes" if report.unique else "no"))
    table.add_row("Path discrepancy", f"{report.discrepancy:.3g}")
    if report.homomorphism_error is not None:
        table.add_row("Homomorphism error", f"{report.homomorphism_error:.3g}")
    console.print(table)
    return ""


def format_zero_divisor(doc: ZeroDivisorDoc) -> str:
    """Print the truncated-kernel trend and the variety sample fraction."""
    check = doc.check
    table = Table(title=f"Zero-divisor check for {doc.polynomial}", show_header=False)
    table.add_column("Property", style="cyan")
    table.add_column("Value")
    table.add_row("Radius", str(check.radius))
    table.add_row("Kernel dimension", str(check.kernel_dimension))
    table.add_row("Kernel projection ratio", f"{check.norm_ratio:.3g}")
    table.add_row("Trivial kernel", format_status("yes" if check.trivial_kernel else "no"))
    table.add_row("Fourier identity residual", f"{check.fourier_residual:.3g}")
    table.add_row(
        "Near-zero fraction", f"{doc.variety_fraction:.3g} of {doc.variety_samples} samples"
    )
    console.print(table)

    trend = Table(title="Smallest relative singular value")
    trend.add_column("Radius", justify="right", style="cyan")
    trend.add_column("sigma_min / sigma_max", justify="right")
    for radius, sigma in check.sigma_trend:
        trend.add_row(str(radius), f"{sigma:.6g}")
    console.print(trend)
    return ""


def format_report(doc: AnalysisReportDoc) -> str:
    """Print every section present in a report document."""
    for system in doc.systems:
        format_system(system)
    if doc.verdict is not None:
        format_verdict(doc.verdict)
    if doc.mahler is not None:
        format_mahler(doc.mahler)
    if doc.vk_check is not None:
        format_vk(doc.vk_check)
    if doc.zero_divisor is not None:
        format_zero_divisor(doc.zero_divisor)
    return ""

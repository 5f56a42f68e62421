"""Data models for the zdrigid CLI."""

from typing import Literal

from pydantic import BaseModel, Field

from zd_rigidity.models.presentation import ModulePresentation
from zd_rigidity.models.reports import (
    CertificationLevel,
    EntropyReport,
    ExactEntropy,
    HypothesisTrail,
    InfiniteEntropy,
    MahlerEstimate,
    PeriodicCount,
    RigidityVerdict,
    VKCheckReport,
    ZeroDivisorReport,
    ZeroEntropy,
)

SCHEMA_VERSION = "1"


class SystemOptions(BaseModel):
    """Per-system analysis options; unset fields fall back to the environment and defaults."""

    mixing_bound: int | None = Field(default=None, ge=1, description="Mixing search bound")
    mahler_grid: int | None = Field(default=None, ge=2, description="Quadrature resolution")
    gb_max_pairs: int | None = Field(default=None, gt=0, description="Gröbner pair budget")
    gb_max_coeff_bits: int | None = Field(default=None, gt=0, description="Coefficient budget")
    roots_of_unity_order: int | None = Field(default=None, ge=2, description="Torsion order")

    model_config = {"extra": "forbid"}


class SystemSpec(BaseModel):
    """A system file: name, ring dimension, generator count and relations as text."""

    name: str = Field(..., description="System label")
    d: int = Field(..., ge=1, description="Rank of the acting group Z^d")
    k: int = Field(default=1, ge=1, description="Number of module generators")
    relations: list[str | list[str]] = Field(
        default_factory=list, description="Relation rows; a bare string when k = 1"
    )
    options: SystemOptions = Field(default_factory=SystemOptions)

    model_config = {"extra": "forbid"}

    def to_presentation(self) -> ModulePresentation:
        """Parse the relations into a ModulePresentation.

        Raises:
            PolynomialSyntaxError: If a relation does not parse
            PresentationError: If a row has the wrong shape
        """
        return ModulePresentation.from_text(self.d, self.k, self.relations, name=self.name)


class ResolvedOptions(BaseModel):
    """Every resolution and bound used by a run, after merging all configuration sources."""

    mixing_bound: int
    mahler_grid: int
    gb_max_pairs: int
    gb_max_coeff_bits: int
    roots_of_unity_order: int
    periodic_orders: list[int]
    seed: int
    variety_samples: int
    zdc_radius: int
    zdc_trials: int


class SystemReport(BaseModel):
    """Hypothesis trail of one system with the certification level of each claim."""

    spec: SystemSpec
    trail: HypothesisTrail
    certification: dict[str, CertificationLevel]


def claim_levels(trail: HypothesisTrail) -> dict[str, CertificationLevel]:
    """Certification level of every claim in a trail.

    Connectedness, the Noetherian property and entropy finiteness are decided exactly;
    mixing is certified or bounded-search; an entropy value is certified only when exact.
    """
    exact_value = isinstance(trail.entropy.value, ExactEntropy | ZeroEntropy | InfiniteEntropy)
    return {
        "connected": CertificationLevel.CERTIFIED,
        "mixing": trail.mixing_level,
        "noetherian": CertificationLevel.CERTIFIED,
        "entropy_finite": CertificationLevel.CERTIFIED,
        "entropy_value": (
            CertificationLevel.CERTIFIED if exact_value else CertificationLevel.ASSUMED
        ),
    }


class MahlerReport(BaseModel):
    """Mahler measure estimates and periodic-point counts for one polynomial."""

    polynomial: str
    d: int
    estimates: list[MahlerEstimate] = Field(default_factory=list)
    entropy: EntropyReport | None = None
    periodic: list[PeriodicCount] = Field(default_factory=list)


class ZeroDivisorDoc(BaseModel):
    """Zero-divisor evidence and the zero-variety sample fraction for one polynomial."""

    polynomial: str
    check: ZeroDivisorReport
    variety_fraction: float
    variety_samples: int


class AnalysisReportDoc(BaseModel):
    """The single structured document produced by every zdrigid run."""

    schema_version: Literal["1"] = SCHEMA_VERSION
    tool_version: str
    command: Literal["analyze", "rigidity", "mahler", "vk-check", "zdc-check"]
    options: ResolvedOptions
    systems: list[SystemReport] = Field(default_factory=list)
    verdict: RigidityVerdict | None = None
    mahler: MahlerReport | None = None
    vk_check: VKCheckReport | None = None
    zero_divisor: ZeroDivisorDoc | None = None


class CliError(Exception):
    """Base exception for CLI failures, carrying the process exit code.

    Exit codes:
    - 1: Internal or numerical failure
    - 2: Parse or validation error in a system file or argument
    - 3: Gröbner budget exceeded
    - 4: Rigidity criterion inapplicable (with --strict)
    """

    def __init__(
        self,
        message: str,
        exit_code: int = 1,
        details: dict[str, str] | None = None,
    ):
        super().__init__(message)
        self.exit_code = exit_code
        self.details = details or {}


class SpecError(CliError):
    """Unreadable or invalid system file or argument (exit code 2)."""

    def __init__(self, message: str, details: dict[str, str] | None = None):
        super().__init__(message, exit_code=2, details=details)


class BudgetError(CliError):
    """Gröbner budget exhausted (exit code 3)."""

    def __init__(self, message: str, details: dict[str, str] | None = None):
        super().__init__(message, exit_code=3, details=details)


class InapplicableError(CliError):
    """A hypothesis of the rigidity criterion failed under --strict (exit code 4)."""

    def __init__(self, message: str, details: dict[str, str] | None = None):
        super().__init__(message, exit_code=4, details=details)

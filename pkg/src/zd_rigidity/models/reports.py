"""Report records produced by the decision procedures.

All records are pydantic models so the CLI can serialize them with
``model_dump(mode="json")``. Certificates carry polynomials as canonical text that
``parse_poly`` reads back in the presentation's dimension.
"""

from enum import Enum
from typing import Annotated, Literal

from pydantic import BaseModel, Field


class CertificationLevel(str, Enum):
    """How strongly a reported claim is backed."""

    CERTIFIED = "certified"
    BOUNDED_SEARCH = "bounded-search"
    ASSUMED = "assumed"


# Mixing


class NotMixing(BaseModel):
    """Witness n and element v with v ∉ relations and (u^n − 1)·v ∈ relations."""

    kind: Literal["not_mixing"] = "not_mixing"
    witness: list[int] = Field(..., description="Nonzero lattice vector n")
    certificate: list[str] = Field(
        ..., description="Module element v, one polynomial per generator"
    )


class NoWitnessUpTo(BaseModel):
    """No zero-divisor u^n − 1 found for any nonzero n with sup-norm at most bound."""

    kind: Literal["no_witness_up_to"] = "no_witness_up_to"
    bound: int = Field(..., description="Sup-norm bound of the completed search", ge=1)


class MixingCertified(BaseModel):
    """Mixing decided exactly."""

    kind: Literal["mixing_certified"] = "mixing_certified"
    reason: str = Field(..., description="Why the certificate holds")


MixingStatus = Annotated[
    NotMixing | NoWitnessUpTo | MixingCertified, Field(discriminator="kind")
]


def mixing_level(status: NotMixing | NoWitnessUpTo | MixingCertified) -> CertificationLevel:
    """Certification level of a mixing claim."""
    if isinstance(status, NoWitnessUpTo):
        return CertificationLevel.BOUNDED_SEARCH
    return CertificationLevel.CERTIFIED


# Connectedness


class ConnectednessReport(BaseModel):
    """Outcome of the Z-torsion test; X is connected iff M is torsion-free over Z."""

    connected: bool = Field(..., description="Whether M has no Z-torsion")
    prime: int | None = Field(default=None, description="Prime c with c·v ∈ relations")
    certificate: list[str] | None = Field(default=None, description="Element v ∉ relations")
    primes_tested: list[int] = Field(default_factory=list, description="Candidate primes checked")
    method: Literal["free", "content", "colon"] = Field(..., description="Decision route")


class NoetherianReport(BaseModel):
    """Noetherian hypothesis, which holds for every finite presentation."""

    noetherian: Literal[True] = True
    note: str = Field(..., description="Why the hypothesis holds")


# Entropy


class MahlerMethod(str, Enum):
    """Provenance of a Mahler measure estimate."""

    ROOT_FORMULA = "root-formula"
    QUADRATURE = "quadrature"
    ROOTS_OF_UNITY = "roots-of-unity-limit"


class MahlerEstimate(BaseModel):
    """Mahler measure estimate in nats."""

    estimate: float = Field(..., description="Estimated m(f) in nats", ge=0.0)
    method: MahlerMethod = Field(..., description="Estimation method")
    resolution: dict[str, int | float | list[float]] = Field(
        default_factory=dict, description="Grid, order or shift parameters"
    )
    error_indicator: float = Field(default=0.0, description="Heuristic error size", ge=0.0)
    skipped: int = Field(default=0, description="Sample points dropped because f vanished")


class PeriodicCount(BaseModel):
    """Number of points of period N·Z^d for R_d/(f)."""

    order: int = Field(..., description="Level N", ge=1)
    count: int | None = Field(default=None, description="Exact count; None when degenerate")
    growth: float | None = Field(default=None, description="log(count) / N^d")
    degenerate: bool = Field(default=False, description="The defining product vanished")


class InfiniteEntropy(BaseModel):
    kind: Literal["infinite"] = "infinite"


class ZeroEntropy(BaseModel):
    kind: Literal["zero"] = "zero"


class ExactEntropy(BaseModel):
    kind: Literal["exact"] = "exact"
    value: float = Field(..., ge=0.0)
    method: MahlerMethod


class IntervalEntropy(BaseModel):
    kind: Literal["interval"] = "interval"
    lo: float = Field(..., ge=0.0)
    hi: float = Field(..., ge=0.0)
    method: str = Field(..., description="Oracles combined into the interval")


class UpperBoundEntropy(BaseModel):
    kind: Literal["upper_bound"] = "upper_bound"
    value: float = Field(..., ge=0.0)
    method: str = Field(..., description="How the bound was obtained")


class FiniteUnknownEntropy(BaseModel):
    """Finite entropy without a numerical value."""

    kind: Literal["finite_no_value"] = "finite_no_value"


EntropyValue = Annotated[
    InfiniteEntropy
    | ZeroEntropy
    | ExactEntropy
    | IntervalEntropy
    | UpperBoundEntropy
    | FiniteUnknownEntropy,
    Field(discriminator="kind"),
]


class EntropyDiagnostics(BaseModel):
    """Resolutions and per-oracle estimates behind an entropy value."""

    quadrature_grid: int | None = None
    roots_of_unity_order: int | None = None
    estimates: list[MahlerEstimate] = Field(default_factory=list)
    discrepancy: float | None = Field(default=None, description="Spread between oracles")
    bound_sources: list[str] = Field(
        default_factory=list, description="Polynomials whose Mahler measures bound the entropy"
    )
    notes: list[str] = Field(default_factory=list)


class EntropyReport(BaseModel):
    """Finiteness flag and value of the topological entropy of X_M."""

    finite: bool = Field(..., description="Equals is_torsion(M)")
    value: EntropyValue
    diagnostics: EntropyDiagnostics = Field(default_factory=EntropyDiagnostics)


# Rigidity


class HypothesisTrail(BaseModel):
    """Every hypothesis of the rigidity criterion as established for one system."""

    system: str = Field(..., description="System label")
    connected: ConnectednessReport
    mixing: MixingStatus
    mixing_level: CertificationLevel
    noetherian: NoetherianReport
    entropy: EntropyReport


class VerdictKind(str, Enum):
    RIGID = "rigid"
    NOT_RIGID = "not_rigid"
    INAPPLICABLE = "inapplicable"


class RigidityVerdict(BaseModel):
    """Whether every equivariant continuous map X1 → X2 is affine."""

    verdict: VerdictKind
    failed_hypotheses: list[str] = Field(
        default_factory=list, description="Hypotheses refuted, each with its certificate"
    )
    assumptions: list[str] = Field(
        default_factory=list, description="Hypotheses only supported by bounded search"
    )
    source: HypothesisTrail = Field(..., description="Trail for X1")
    target: HypothesisTrail = Field(..., description="Trail for X2")


# Analytic checks


class VKCheckReport(BaseModel):
    """Summary of a splitting check on a sampled circle-valued map."""

    shape: list[int]
    character: list[int]
    residual: float
    unique: bool
    discrepancy: float
    homomorphism_error: float | None = None


class ZeroDivisorReport(BaseModel):
    """Truncated-kernel and Fourier-identity results for a convolution kernel g."""

    support: list[list[int]] = Field(..., description="Support of g")
    radius: int
    kernel_dimension: int = Field(..., description="Numerical kernel dimension at full radius")
    norm_ratio: float = Field(
        ..., description="Largest |P_ker f| / |f| over random baselines f"
    )
    sigma_trend: list[tuple[int, float]] = Field(
        default_factory=list, description="(radius, smallest relative singular value)"
    )
    fourier_residual: float
    trivial_kernel: bool = Field(
        ..., description="Numerical kernel misses every baseline; holds for any nonzero g"
    )
    sigma_decaying: bool = Field(
        default=False,
        description="Smallest relative singular value shrinks by the decay factor over the trend",
    )


__all__ = [
    "CertificationLevel",
    "ConnectednessReport",
    "EntropyDiagnostics",
    "EntropyReport",
    "EntropyValue",
    "ExactEntropy",
    "FiniteUnknownEntropy",
    "HypothesisTrail",
    "InfiniteEntropy",
    "IntervalEntropy",
    "MahlerEstimate",
    "MahlerMethod",
    "MixingCertified",
    "MixingStatus",
    "NoWitnessUpTo",
    "NoetherianReport",
    "NotMixing",
    "PeriodicCount",
    "RigidityVerdict",
    "UpperBoundEntropy",
    "VKCheckReport",
    "VerdictKind",
    "ZeroDivisorReport",
    "ZeroEntropy",
    "mixing_level",
]

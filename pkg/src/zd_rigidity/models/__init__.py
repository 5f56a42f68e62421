"""Domain records: module presentations and analysis reports."""

from zd_rigidity.models.presentation import ModulePresentation
from zd_rigidity.models.reports import (
    CertificationLevel,
    ConnectednessReport,
    EntropyDiagnostics,
    EntropyReport,
    EntropyValue,
    ExactEntropy,
    FiniteUnknownEntropy,
    HypothesisTrail,
    InfiniteEntropy,
    IntervalEntropy,
    MahlerEstimate,
    MahlerMethod,
    MixingCertified,
    MixingStatus,
    NoetherianReport,
    NotMixing,
    NoWitnessUpTo,
    PeriodicCount,
    RigidityVerdict,
    UpperBoundEntropy,
    VerdictKind,
    VKCheckReport,
    ZeroDivisorReport,
    ZeroEntropy,
    mixing_level,
)

__all__ = [
    # Presentations
    "ModulePresentation",
    # Hypothesis reports
    "CertificationLevel",
    "ConnectednessReport",
    "MixingCertified",
    "MixingStatus",
    "NoWitnessUpTo",
    "NoetherianReport",
    "NotMixing",
    "mixing_level",
    # Entropy reports
    "EntropyDiagnostics",
    "EntropyReport",
    "EntropyValue",
    "ExactEntropy",
    "FiniteUnknownEntropy",
    "InfiniteEntropy",
    "IntervalEntropy",
    "MahlerEstimate",
    "MahlerMethod",
    "PeriodicCount",
    "UpperBoundEntropy",
    "ZeroEntropy",
    # Verdicts and analytic checks
    "HypothesisTrail",
    "RigidityVerdict",
    "VKCheckReport",
    "VerdictKind",
    "ZeroDivisorReport",
]

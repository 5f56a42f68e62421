"""Rigidity verdicts for pairs of algebraic Z^d-actions.

For connected mixing Noetherian systems X1 and X2, every equivariant continuous map
X1 → X2 is affine exactly when X2 has finite topological entropy. ``verdict`` certifies
the hypotheses for both systems before answering, and refuses to answer when one fails.
"""

import logging

from zd_rigidity.analysis.connectedness import is_connected
from zd_rigidity.analysis.mixing import mixing_search
from zd_rigidity.analysis.structure import is_noetherian
from zd_rigidity.config import EngineSettings, get_settings
from zd_rigidity.entropy.classify import entropy_classify
from zd_rigidity.models.presentation import ModulePresentation
from zd_rigidity.models.reports import (
    HypothesisTrail,
    NotMixing,
    NoWitnessUpTo,
    RigidityVerdict,
    VerdictKind,
    mixing_level,
)

logger = logging.getLogger(__name__)


def hypothesis_trail(
    M: ModulePresentation, mixing_bound: int, settings: EngineSettings | None = None
) -> HypothesisTrail:
    """Run every hypothesis check and the entropy classification for one system."""
    settings = settings or get_settings()
    limits = settings.groebner_limits()
    mixing = mixing_search(M, mixing_bound, limits)
    return HypothesisTrail(
        system=M.label(),
        connected=is_connected(M, limits),
        mixing=mixing,
        mixing_level=mixing_level(mixing),
        noetherian=is_noetherian(M),
        entropy=entropy_classify(M, settings),
    )


def _hypothesis_findings(role: str, trail: HypothesisTrail) -> tuple[list[str], list[str]]:
    failed: list[str] = []
    assumed: list[str] = []
    if not trail.connected.connected:
        failed.append(
            f"{role} ({trail.system}) is not connected: {trail.connected.prime}-torsion, "
            f"certificate {trail.connected.certificate}"
        )
    if isinstance(trail.mixing, NotMixing):
        failed.append(
            f"{role} ({trail.system}) is not mixing: witness n={trail.mixing.witness}, "
            f"certificate {trail.mixing.certificate}"
        )
    elif isinstance(trail.mixing, NoWitnessUpTo):
        assumed.append(
            f"{role} ({trail.system}) mixing assumed: no witness up to {trail.mixing.bound}"
        )
    return failed, assumed


def verdict(
    M1: ModulePresentation,
    M2: ModulePresentation,
    mixing_bound: int,
    settings: EngineSettings | None = None,
) -> RigidityVerdict:
    """Decide whether every equivariant continuous map X1 → X2 is affine.

    Args:
        M1: Dual module of the source system X1
        M2: Dual module of the target system X2
        mixing_bound: Sup-norm bound of the mixing searches
        settings: Resolutions and budgets; process defaults when omitted

    Returns:
        Rigid or NotRigid when both systems are connected and no non-mixing witness is
        found, Inapplicable otherwise; the full hypothesis trail is always attached

    Raises:
        BudgetExceededError: If a Gröbner computation exceeds its budget
    """
    settings = settings or get_settings()
    source = hypothesis_trail(M1, mixing_bound, settings)
    target = hypothesis_trail(M2, mixing_bound, settings)

    failed: list[str] = []
    assumptions: list[str] = []
    for role, trail in (("X1", source), ("X2", target)):
        refuted, assumed = _hypothesis_findings(role, trail)
        failed.extend(refuted)
        assumptions.extend(assumed)
    if M1.d != M2.d:
        assumptions.append(
            f"X1 is a Z^{M1.d}-action and X2 a Z^{M2.d}-action; the verdict reads the "
            "entropy of X2 only"
        )

    if failed:
        kind = VerdictKind.INAPPLICABLE
    elif target.entropy.finite:
        kind = VerdictKind.RIGID
    else:
        kind = VerdictKind.NOT_RIGID
    logger.info("Rigidity verdict for %s -> %s: %s", source.system, target.system, kind.value)
    for note in assumptions:
        logger.warning(note)
    return RigidityVerdict(
        verdict=kind,
        failed_hypotheses=failed,
        assumptions=assumptions,
        source=source,
        target=target,
    )


__all__ = ["hypothesis_trail", "verdict"]

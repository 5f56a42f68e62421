"""Rank, torsion and finiteness properties of a presented module."""

import logging

from zd_rigidity.config import DEFAULT_LIMITS, GroebnerLimits
from zd_rigidity.grobner.submodule import is_member
from zd_rigidity.laurent.poly import LaurentPoly
from zd_rigidity.models.presentation import ModulePresentation
from zd_rigidity.models.reports import NoetherianReport

logger = logging.getLogger(__name__)

NOETHERIAN_NOTE = (
    "M is finitely presented over the Noetherian ring R_d, so it is Noetherian and every "
    "descending chain of closed invariant subgroups of X stabilizes."
)


def relation_rank(M: ModulePresentation) -> int:
    """Rank of the relation matrix over the fraction field of R_d."""
    return M.relations.rank()


def fraction_field_rank(M: ModulePresentation) -> int:
    """Dimension of M ⊗ F over the fraction field F of R_d.

    Equals k minus the relation rank; computed exactly by fraction-free elimination.

    Example:
        >>> M = ModulePresentation.from_text(2, 1, ["1 + u1 + u2"])
        >>> fraction_field_rank(M)
        0
    """
    rank = M.k - relation_rank(M)
    logger.debug("Module %s has fraction-field rank %d", M.label(), rank)
    return rank


def is_torsion(M: ModulePresentation) -> bool:
    """True iff every element of M is annihilated by a nonzero element of R_d."""
    return fraction_field_rank(M) == 0


def is_zero_module(M: ModulePresentation, limits: GroebnerLimits = DEFAULT_LIMITS) -> bool:
    """True iff every generator e_j lies in the relation submodule."""
    if M.is_free:
        return False
    for j in range(M.k):
        unit = tuple(
            LaurentPoly.one(M.d) if i == j else LaurentPoly.zero(M.d) for i in range(M.k)
        )
        if not is_member(unit, M.submodule, limits):
            return False
    return True


def is_noetherian(M: ModulePresentation) -> NoetherianReport:
    """The Noetherian hypothesis holds for every presentation; stated for reports."""
    return NoetherianReport(note=NOETHERIAN_NOTE)


__all__ = [
    "NOETHERIAN_NOTE",
    "fraction_field_rank",
    "is_noetherian",
    "is_torsion",
    "is_zero_module",
    "relation_rank",
]

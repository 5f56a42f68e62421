"""Bounded search for non-mixing witnesses.

X_M is mixing iff no u^n − 1 (n ≠ 0) lies in an associated prime of M, i.e. iff no such
u^n − 1 is a zero divisor on M. The search tests the zero-divisor property directly with
colon computations, shell by shell in the sup-norm.
"""

import logging
from collections.abc import Iterator
from itertools import product

from zd_rigidity.analysis.structure import is_zero_module
from zd_rigidity.config import DEFAULT_LIMITS, GroebnerLimits
from zd_rigidity.grobner.submodule import is_member, module_colon
from zd_rigidity.laurent.bridge import poly_gcd
from zd_rigidity.laurent.parser import parse_poly
from zd_rigidity.laurent.poly import LaurentPoly
from zd_rigidity.models.presentation import ModulePresentation
from zd_rigidity.models.reports import MixingCertified, NotMixing, NoWitnessUpTo

logger = logging.getLogger(__name__)

MixingResult = NotMixing | NoWitnessUpTo | MixingCertified


def shell(radius: int, d: int) -> Iterator[tuple[int, ...]]:
    """Vectors with sup-norm exactly radius, one of each pair {n, −n}, lexicographic.

    The representative kept is the one whose first nonzero coordinate is positive.

    Example:
        >>> list(shell(1, 2))
        [(0, 1), (1, -1), (1, 0), (1, 1)]
    """
    for n in product(range(-radius, radius + 1), repeat=d):
        if max(abs(x) for x in n) != radius:
            continue
        first = next(x for x in n if x)
        if first > 0:
            yield n


def cyclotomic_search_limit(degree: int) -> int:
    """Largest m whose cyclotomic polynomial can divide a polynomial of this degree.

    φ(m) ≥ sqrt(m/2) for every m, so Φ_m of degree at most ``degree`` has m ≤ 2·degree².
    """
    return 2 * degree * degree + 2


def _univariate_mixing(f: LaurentPoly) -> MixingResult:
    """Exact mixing decision for R_1/(f)."""
    limit = cyclotomic_search_limit(f.total_degree_span())
    for m in range(1, limit + 1):
        common = poly_gcd(f, LaurentPoly.binomial_unit((m,)))
        if not common.is_unit():
            certificate = f.exact_div(common)
            logger.info("R_1/(%s) is not mixing: shared factor %s with t^%d - 1", f, common, m)
            return NotMixing(witness=[m], certificate=[str(certificate)])
    return MixingCertified(reason=f"{f} has no cyclotomic factor (gcd test up to m = {limit})")


def mixing_search(
    M: ModulePresentation, bound: int, limits: GroebnerLimits = DEFAULT_LIMITS
) -> MixingResult:
    """Search for n ≠ 0 with ‖n‖_∞ ≤ bound such that u^n − 1 is a zero divisor on M.

    Free modules are certified mixing (their only associated prime is zero), as is the
    zero module. For d = 1 principal modules the decision is exact through gcds with
    t^m − 1, and the smallest witness is returned even when it exceeds the bound.

    Args:
        M: The presented module
        bound: Sup-norm bound of the search (at least 1)
        limits: Gröbner budget

    Returns:
        NotMixing with the first witness in search order, NoWitnessUpTo(bound), or
        MixingCertified

    Raises:
        ValueError: If bound < 1
        BudgetExceededError: If the Gröbner budget runs out
    """
    if bound < 1:
        raise ValueError(f"mixing bound must be positive, got {bound}")
    if M.is_free:
        return MixingCertified(reason="free module: the only associated prime is zero")
    if is_zero_module(M, limits):
        return MixingCertified(reason="zero module: the system is trivial")

    f = M.principal_generator()
    if f is not None and M.d == 1:
        return _univariate_mixing(f)

    relations = M.submodule
    for radius in range(1, bound + 1):
        logger.debug("Mixing search on %s: shell %d", M.label(), radius)
        for n in shell(radius, M.d):
            colon = module_colon(relations, LaurentPoly.binomial_unit(n), limits)
            for row in colon.rows:
                if not is_member(row, relations, limits):
                    logger.info("%s is not mixing: witness %s", M.label(), n)
                    return NotMixing(witness=list(n), certificate=[str(e) for e in row])
    logger.warning(
        "Mixing of %s is only supported by bounded search (bound %d)", M.label(), bound
    )
    return NoWitnessUpTo(bound=bound)


def verify_not_mixing(
    M: ModulePresentation, status: NotMixing, limits: GroebnerLimits = DEFAULT_LIMITS
) -> bool:
    """Re-check v ∉ relations and (u^n − 1)·v ∈ relations by two membership calls."""
    v = [parse_poly(text, M.d) for text in status.certificate]
    factor = LaurentPoly.binomial_unit(status.witness)
    if is_member(v, M.submodule, limits):
        return False
    return is_member([factor * e for e in v], M.submodule, limits)


__all__ = [
    "MixingResult",
    "cyclotomic_search_limit",
    "mixing_search",
    "shell",
    "verify_not_mixing",
]

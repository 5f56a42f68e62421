"""Connectedness of X_M, i.e. absence of Z-torsion in the dual module M."""

import logging

from sympy import primefactors

from zd_rigidity.config import DEFAULT_LIMITS, GroebnerLimits
from zd_rigidity.grobner.submodule import is_member, module_colon, saturate_vars
from zd_rigidity.laurent.parser import parse_poly
from zd_rigidity.laurent.poly import LaurentPoly
from zd_rigidity.models.presentation import ModulePresentation
from zd_rigidity.models.reports import ConnectednessReport

logger = logging.getLogger(__name__)


def is_connected(
    M: ModulePresentation, limits: GroebnerLimits = DEFAULT_LIMITS
) -> ConnectednessReport:
    """Decide whether M is torsion-free as an abelian group.

    Cyclic principal modules R_d/(f) are connected iff content(f) = 1 (Gauss's lemma).
    Otherwise the candidate primes are those dividing a leading coefficient of the strong
    basis of the saturated relations: if p divides none of them, p times an irreducible
    normal form is still irreducible, so p cannot be a zero divisor. Each candidate c is
    tested by comparing (relations : c) with the relations.

    Args:
        M: The presented module
        limits: Gröbner budget

    Returns:
        ConnectednessReport, with a prime and certificate when M has Z-torsion

    Raises:
        BudgetExceededError: If the Gröbner budget runs out
    """
    if M.is_free:
        return ConnectednessReport(connected=True, method="free")

    f = M.principal_generator()
    if f is not None:
        content = f.content()
        if content == 1:
            return ConnectednessReport(connected=True, method="content")
        prime = primefactors(content)[0]
        witness = f.exact_div(LaurentPoly.constant(prime, M.d))
        logger.info("Module %s has Z-torsion: content %d", M.label(), content)
        return ConnectednessReport(
            connected=False,
            prime=prime,
            certificate=[str(witness)],
            primes_tested=[prime],
            method="content",
        )

    relations = M.submodule
    basis = saturate_vars(relations, limits).basis(limits=limits)
    primes = sorted({p for lc in basis.leading_coefficients() for p in primefactors(lc)})
    logger.debug("Candidate torsion primes for %s: %s", M.label(), primes)
    for prime in primes:
        colon = module_colon(relations, LaurentPoly.constant(prime, M.d), limits)
        for row in colon.rows:
            if not is_member(row, relations, limits):
                logger.info("Module %s has %d-torsion", M.label(), prime)
                return ConnectednessReport(
                    connected=False,
                    prime=prime,
                    certificate=[str(e) for e in row],
                    primes_tested=primes,
                    method="colon",
                )
    return ConnectednessReport(connected=True, primes_tested=primes, method="colon")


def verify_connectedness_certificate(
    M: ModulePresentation, report: ConnectednessReport, limits: GroebnerLimits = DEFAULT_LIMITS
) -> bool:
    """Re-check c·v ∈ relations and v ∉ relations for a negative report."""
    if report.connected or report.prime is None or report.certificate is None:
        return False
    v = [parse_poly(text, M.d) for text in report.certificate]
    multiple = [entry * report.prime for entry in v]
    return is_member(multiple, M.submodule, limits) and not is_member(v, M.submodule, limits)


__all__ = ["is_connected", "verify_connectedness_certificate"]

"""Entropy classification of presented modules.

Finite entropy is equivalent to M being a torsion module. Values are claimed exactly only
for one-variable principal modules (and monomial relations); every other finite case is
reported as an interval from two independent oracles or as an upper bound.
"""

from __future__ import annotations

import logging
import math
from itertools import combinations

from zd_rigidity.analysis.structure import is_torsion, is_zero_module
from zd_rigidity.config import EngineSettings, get_settings
from zd_rigidity.entropy.mahler import mahler_d1_exact, mahler_quadrature, mahler_roots_of_unity
from zd_rigidity.errors import NumericalFailureError
from zd_rigidity.laurent.matrix import PolyMatrix
from zd_rigidity.laurent.poly import LaurentPoly
from zd_rigidity.models.presentation import ModulePresentation
from zd_rigidity.models.reports import (
    EntropyDiagnostics,
    EntropyReport,
    ExactEntropy,
    FiniteUnknownEntropy,
    InfiniteEntropy,
    IntervalEntropy,
    MahlerEstimate,
    MahlerMethod,
    UpperBoundEntropy,
    ZeroEntropy,
)

logger = logging.getLogger(__name__)

INTERVAL_FLOOR = 1e-6
MAX_MINORS = 500


def mahler_upper(f: LaurentPoly, settings: EngineSettings) -> tuple[float, MahlerEstimate]:
    """Upper estimate of m(f): exact for d = 1 and monomials, else quadrature plus indicator."""
    if f.dim == 1:
        estimate = mahler_d1_exact(f)
        return estimate.estimate, estimate
    estimate = mahler_quadrature(f, settings.mahler_grid)
    return estimate.estimate + estimate.error_indicator, estimate


def _principal_value(
    f: LaurentPoly, settings: EngineSettings, diagnostics: EntropyDiagnostics
) -> ExactEntropy | IntervalEntropy:
    if f.dim == 1:
        estimate = mahler_d1_exact(f)
        diagnostics.estimates.append(estimate)
        return ExactEntropy(value=estimate.estimate, method=MahlerMethod.ROOT_FORMULA)
    if f.is_monomial():
        (_, coeff), = f.items()
        diagnostics.notes.append("monomial relation: m(c·u^n) = log|c|")
        return ExactEntropy(value=math.log(abs(coeff)), method=MahlerMethod.ROOT_FORMULA)

    quadrature = mahler_quadrature(f, settings.mahler_grid)
    diagnostics.quadrature_grid = settings.mahler_grid
    diagnostics.estimates.append(quadrature)
    lo = quadrature.estimate - quadrature.error_indicator
    hi = quadrature.estimate + quadrature.error_indicator
    methods = [MahlerMethod.QUADRATURE.value]
    try:
        torsion = mahler_roots_of_unity(f, settings.roots_of_unity_order)
    except NumericalFailureError as exc:
        logger.warning("Roots-of-unity oracle unavailable for %s: %s", f, exc.message)
        diagnostics.notes.append(f"roots-of-unity oracle failed: {exc.message}")
    else:
        diagnostics.roots_of_unity_order = settings.roots_of_unity_order
        diagnostics.estimates.append(torsion)
        diagnostics.discrepancy = abs(quadrature.estimate - torsion.estimate)
        lo = min(lo, torsion.estimate - torsion.error_indicator)
        hi = max(hi, torsion.estimate + torsion.error_indicator)
        methods.append(MahlerMethod.ROOTS_OF_UNITY.value)
    return IntervalEntropy(
        lo=max(0.0, lo - INTERVAL_FLOOR), hi=hi + INTERVAL_FLOOR, method="+".join(methods)
    )


def generator_annihilators(M: ModulePresentation) -> list[list[LaurentPoly]]:
    """Known annihilators of each generator m_j of a torsion module.

    A relation row supported on column j alone annihilates m_j. The determinant D of a
    nonsingular k×k minor annihilates every generator, since adj(A)·A = D·I.
    """
    k = M.k
    found: list[list[LaurentPoly]] = [[] for _ in range(k)]
    for row in M.rows:
        support = [j for j, entry in enumerate(row) if not entry.is_zero()]
        if len(support) == 1:
            found[support[0]].append(row[support[0]])
    for count, chosen in enumerate(combinations(range(M.relations.rows), k)):
        if count >= MAX_MINORS:
            break
        minor = PolyMatrix(dim=M.d, cols=k, entries=tuple(M.rows[i] for i in chosen))
        determinant = minor.determinant()
        if not determinant.is_zero():
            for annihilators in found:
                annihilators.append(determinant)
            break
    return found


def entropy_classify(
    M: ModulePresentation, settings: EngineSettings | None = None
) -> EntropyReport:
    """Classify the topological entropy of X_M.

    Args:
        M: The presented module
        settings: Resolutions and budgets; process defaults when omitted

    Returns:
        EntropyReport with finite = is_torsion(M)

    Raises:
        BudgetExceededError: If the Gröbner budget runs out
        NumericalFailureError: If a Mahler estimate cannot be trusted
    """
    settings = settings or get_settings()
    limits = settings.groebner_limits()
    diagnostics = EntropyDiagnostics()
    finite = is_torsion(M)
    if not finite:
        logger.info("%s is not a torsion module: infinite entropy", M.label())
        return EntropyReport(finite=False, value=InfiniteEntropy(), diagnostics=diagnostics)
    if is_zero_module(M, limits):
        return EntropyReport(finite=True, value=ZeroEntropy(), diagnostics=diagnostics)

    f = M.principal_generator()
    if f is not None:
        value = _principal_value(f, settings, diagnostics)
        logger.info("Entropy of %s: %s", M.label(), value.kind)
        report = EntropyReport(finite=True, value=value, diagnostics=diagnostics)
    elif M.k == 1:
        bounds = []
        for (g,) in M.rows:
            bound, estimate = mahler_upper(g, settings)
            diagnostics.estimates.append(estimate)
            diagnostics.bound_sources.append(str(g))
            bounds.append(bound)
        diagnostics.notes.append("R_d/I is a quotient of each R_d/(g), g in I")
        report = EntropyReport(
            finite=True,
            value=UpperBoundEntropy(value=min(bounds), method="min over relations of m(g)"),
            diagnostics=diagnostics,
        )
    else:
        report = _module_bound(M, settings, diagnostics)
    assert report.finite == finite
    return report


def _module_bound(
    M: ModulePresentation, settings: EngineSettings, diagnostics: EntropyDiagnostics
) -> EntropyReport:
    """Sum over generators of the smallest Mahler bound of a known annihilator."""
    total = 0.0
    cache: dict[LaurentPoly, float] = {}
    for j, annihilators in enumerate(generator_annihilators(M)):
        if not annihilators:
            diagnostics.notes.append(f"no annihilator found for generator {j}")
            return EntropyReport(finite=True, value=FiniteUnknownEntropy(), diagnostics=diagnostics)
        best: tuple[float, LaurentPoly] | None = None
        for a in annihilators:
            if a not in cache:
                bound, estimate = mahler_upper(a, settings)
                cache[a] = bound
                diagnostics.estimates.append(estimate)
            if best is None or cache[a] < best[0]:
                best = (cache[a], a)
        assert best is not None
        diagnostics.bound_sources.append(str(best[1]))
        total += best[0]
    diagnostics.notes.append("each filtration quotient is a quotient of R_d/(a_j)")
    return EntropyReport(
        finite=True,
        value=UpperBoundEntropy(value=total, method="sum over generators of annihilator bounds"),
        diagnostics=diagnostics,
    )


__all__ = ["entropy_classify", "generator_annihilators", "mahler_upper"]

"""Periodic-point counts of principal systems X_{R_d/(f)}.

The number of points fixed by the subgroup N·Z^d is |∏ f(ω)| over ω ∈ μ_N^d whenever the
product is nonzero; log(count) / N^d tends to m(f) along suitable sequences.
"""

import logging
import math
from collections.abc import Sequence
from itertools import product

import mpmath

from zd_rigidity.errors import NumericalFailureError
from zd_rigidity.laurent.bridge import univariate_resultant
from zd_rigidity.laurent.poly import LaurentPoly
from zd_rigidity.models.reports import PeriodicCount

logger = logging.getLogger(__name__)

GUARD_DIGITS = 30


def _count_univariate(f: LaurentPoly, order: int) -> int:
    """|res(f, t^N − 1)|, exact."""
    return abs(univariate_resultant(f.monomial_normalize(), LaurentPoly.binomial_unit((order,))))


def _count_multivariate(f: LaurentPoly, order: int) -> int:
    """Round the high-precision product ∏ f(ω) to the integer it must equal."""
    d = f.dim
    norm = sum(abs(c) for _, c in f.items())
    digits = math.ceil(order**d * math.log10(max(norm, 2))) + GUARD_DIGITS
    terms = list(f.items())
    with mpmath.workdps(digits):
        roots = [mpmath.expjpi(mpmath.mpf(2 * j) / order) for j in range(order)]
        values = []
        for index in product(range(order), repeat=d):
            values.append(
                mpmath.fsum(
                    c * roots[sum(e * i for e, i in zip(mono, index, strict=True)) % order]
                    for mono, c in terms
                )
            )
        total = mpmath.fprod(values)
        if abs(total) < 0.5:
            return 0
        nearest = mpmath.nint(total.real)
        if abs(total - nearest) > mpmath.mpf("0.1"):
            raise NumericalFailureError(
                f"periodic-point product for {f} at N={order} is not an integer",
                details={"order": str(order), "digits": str(digits)},
            )
        return abs(int(nearest))


def periodic_point_growth(f: LaurentPoly, orders: Sequence[int]) -> list[PeriodicCount]:
    """Exact periodic-point counts and normalized growth rates log(count) / N^d.

    Counts for d = 1 are resultants computed with sympy; for d ≥ 2 the product over torsion
    points is formed with mpmath at a precision covering every digit of the result. A
    vanishing product marks that level as degenerate.

    Args:
        f: Nonzero polynomial defining R_d/(f)
        orders: Levels N ≥ 1

    Returns:
        One PeriodicCount per level, in the given order

    Raises:
        ValueError: If f is zero or some level is not positive

    Example:
        >>> f = LaurentPoly.from_univariate([-2, 1])
        >>> [c.count for c in periodic_point_growth(f, [1, 2, 3])]
        [1, 3, 7]
    """
    if f.is_zero():
        raise ValueError("periodic points of the zero polynomial are not finite")
    results: list[PeriodicCount] = []
    for order in orders:
        if order < 1:
            raise ValueError(f"levels must be positive, got {order}")
        count = _count_univariate(f, order) if f.dim == 1 else _count_multivariate(f, order)
        if count == 0:
            logger.debug("Periodic product of %s vanishes at N=%d", f, order)
            results.append(PeriodicCount(order=order, degenerate=True))
            continue
        growth = float(mpmath.log(count)) / order**f.dim
        results.append(PeriodicCount(order=order, count=count, growth=growth))
    return results


__all__ = ["periodic_point_growth"]

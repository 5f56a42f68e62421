"""Conversions between LaurentPoly and sympy polynomials over ZZ.

Only positive-orthant polynomials cross the bridge; callers normalize first.
"""

from __future__ import annotations

from sympy import ZZ, Poly, symbols

from zd_rigidity.errors import DimensionMismatchError
from zd_rigidity.laurent.poly import VARIABLE_PREFIX, LaurentPoly


def _gens(dim: int) -> tuple:
    return symbols(f"{VARIABLE_PREFIX}1:{dim + 1}")


def to_sympy(f: LaurentPoly) -> Poly:
    """Polynomial over ZZ in u1..ud; f must have nonnegative exponents."""
    if any(e < 0 for mono in f.support for e in mono):
        raise ValueError(f"{f} is outside the positive orthant")
    return Poly.from_dict(dict(f.items()) or {(0,) * f.dim: 0}, *_gens(f.dim), domain=ZZ)


def from_sympy(p: Poly, dim: int) -> LaurentPoly:
    if len(p.gens) != dim:
        raise DimensionMismatchError(len(p.gens), dim)
    return LaurentPoly(dim, {tuple(m): int(c) for m, c in p.terms() if c})


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Gcd in R_d, normalized and with positive leading coefficient.

    Example:
        >>> from zd_rigidity.laurent.parser import parse_poly
        >>> str(poly_gcd(parse_poly("u1^2 - 1"), parse_poly("u1^-1 - 1")))
        '-1 + u1'
    """
    if f.dim != g.dim:
        raise DimensionMismatchError(f.dim, g.dim)
    result = from_sympy(
        to_sympy(f.monomial_normalize()).gcd(to_sympy(g.monomial_normalize())), f.dim
    )
    return result.monomial_normalize()


def univariate_resultant(f: LaurentPoly, g: LaurentPoly) -> int:
    """Resultant of two one-variable polynomials with nonnegative exponents."""
    if f.dim != 1 or g.dim != 1:
        raise DimensionMismatchError(max(f.dim, g.dim), 1)
    return int(to_sympy(f).resultant(to_sympy(g)))


__all__ = ["from_sympy", "poly_gcd", "to_sympy", "univariate_resultant"]

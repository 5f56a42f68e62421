"""Exact arithmetic in R_d = Z[u1^±1, ..., ud^±1]."""

from zd_rigidity.laurent.bridge import poly_gcd, univariate_resultant
from zd_rigidity.laurent.matrix import PolyMatrix
from zd_rigidity.laurent.parser import infer_dimension, parse_poly
from zd_rigidity.laurent.poly import LaurentPoly, Monomial, grlex_key, monomial_mul

__all__ = [
    "LaurentPoly",
    "Monomial",
    "PolyMatrix",
    "grlex_key",
    "infer_dimension",
    "monomial_mul",
    "parse_poly",
    "poly_gcd",
    "univariate_resultant",
]

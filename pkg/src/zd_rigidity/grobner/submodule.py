"""Laurent submodules of R_d^k and the membership, saturation and colon operations.

A submodule of R_d^k is stored through positive-orthant generators. Because every u_i is
a unit in R_d, the polynomial submodule they span must be saturated at u1⋯ud before
polynomial membership agrees with Laurent membership; ``saturate_vars`` does this once
per handle and caches the result.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from zd_rigidity.config import DEFAULT_LIMITS, GroebnerLimits
from zd_rigidity.errors import DimensionMismatchError
from zd_rigidity.grobner.basis import StrongGBasis, Vec, complete_basis, vector_to_terms
from zd_rigidity.grobner.orders import GREVLEX, MonomialOrder, elimination_order
from zd_rigidity.laurent.bridge import poly_gcd
from zd_rigidity.laurent.matrix import PolyMatrix
from zd_rigidity.laurent.poly import LaurentPoly, Monomial

logger = logging.getLogger(__name__)

Row = tuple[LaurentPoly, ...]


def normalize_vector(vector: Sequence[LaurentPoly]) -> Row:
    """Shift a module element by the unit monomial that moves it into the positive orthant.

    Every exponent becomes nonnegative and each variable reaches exponent zero in some
    entry; the zero vector is returned unchanged.
    """
    nonzero = [entry for entry in vector if not entry.is_zero()]
    if not nonzero:
        return tuple(vector)
    low = tuple(min(col) for col in zip(*(e.min_exponents() for e in nonzero), strict=True))
    shift = tuple(-e for e in low)
    return tuple(entry if entry.is_zero() else entry.shift(shift) for entry in vector)


class SubmoduleHandle:
    """Submodule of R_d^k spanned by rows, with lazily cached strong bases.

    Rows are normalized into the positive orthant and zero rows are dropped on
    construction. ``saturated`` records that the rows already span a submodule closed
    under division by u1⋯ud.
    """

    __slots__ = ("dim", "rank", "rows", "saturated", "_bases", "_saturation")

    def __init__(
        self,
        rows: Sequence[Sequence[LaurentPoly]],
        rank: int,
        dim: int,
        saturated: bool = False,
    ):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        kept: list[Row] = []
        for row in rows:
            if len(row) != rank:
                raise DimensionMismatchError(len(row), rank)
            for entry in row:
                if entry.dim != dim:
                    raise DimensionMismatchError(entry.dim, dim)
            if any(not e.is_zero() for e in row):
                kept.append(normalize_vector(row))
        self.dim = dim
        self.rank = rank
        self.rows: tuple[Row, ...] = tuple(kept)
        self.saturated = saturated or not kept
        self._bases: dict[MonomialOrder, StrongGBasis] = {}
        self._saturation: SubmoduleHandle | None = self if self.saturated else None

    @classmethod
    def from_matrix(cls, matrix: PolyMatrix) -> SubmoduleHandle:
        return cls(matrix.entries, rank=matrix.cols, dim=matrix.dim)

    @classmethod
    def principal(cls, f: LaurentPoly) -> SubmoduleHandle:
        """The ideal (f) of R_d."""
        return cls([(f,)], rank=1, dim=f.dim)

    def is_zero(self) -> bool:
        return not self.rows

    def is_principal(self) -> bool:
        """True for an ideal with a single generator."""
        return self.rank == 1 and len(self.rows) == 1

    def basis(
        self, order: MonomialOrder = GREVLEX, limits: GroebnerLimits = DEFAULT_LIMITS
    ) -> StrongGBasis:
        """Strong basis of the polynomial submodule spanned by the rows (cached per order)."""
        cached = self._bases.get(order)
        if cached is None:
            cached = complete_basis(
                [vector_to_terms(r) for r in self.rows], self.rank, self.dim, order, limits
            )
            self._bases[order] = cached
        return cached

    def __repr__(self) -> str:
        rows = "; ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows)
        return f"SubmoduleHandle(d={self.dim}, k={self.rank}, rows=[{rows}])"


def _lift(vec: Vec, t_exponent: int) -> Vec:
    """Embed a term map into Z[t, u1..ud]^k with t placed first."""
    return {(pos, (t_exponent, *mono)): c for (pos, mono), c in vec.items()}


def _eliminate_t(
    gens: list[Vec], rank: int, dim: int, limits: GroebnerLimits
) -> list[Row]:
    """Generators of (span of gens) ∩ Z[u1..ud]^k by elimination of the first variable."""
    basis = complete_basis(gens, rank, dim + 1, elimination_order(1, dim), limits)
    rows: list[Row] = []
    for element in basis.elements:
        if any(mono[0] for (_, mono), _ in element):
            continue
        buckets: list[dict[Monomial, int]] = [{} for _ in range(rank)]
        for (pos, mono), coeff in element:
            buckets[pos][mono[1:]] = coeff
        rows.append(tuple(LaurentPoly(dim, b) for b in buckets))
    logger.debug(
        "Eliminated t: %d of %d basis elements are t-free (%d pairs)",
        len(rows),
        len(basis),
        basis.pairs_consumed,
    )
    return rows


def saturate_vars(U: SubmoduleHandle, limits: GroebnerLimits = DEFAULT_LIMITS) -> SubmoduleHandle:
    """Saturation (U : (u1⋯ud)^∞), the polynomial shadow of the Laurent submodule U·R_d.

    Adds (1 − t·u1⋯ud)·e_j for every position j and eliminates t. A single normalized
    generator of an ideal is already saturated.

    Example:
        >>> from zd_rigidity.laurent import parse_poly
        >>> sat = saturate_vars(SubmoduleHandle([[parse_poly("u1^2 - u1")]], rank=1, dim=1))
        >>> [str(r[0]) for r in sat.rows]
        ['-1 + u1']
    """
    if U._saturation is not None:
        return U._saturation
    if U.is_principal():
        result = SubmoduleHandle(U.rows, U.rank, U.dim, saturated=True)
    else:
        gens = [_lift(vector_to_terms(r), 0) for r in U.rows]
        for pos in range(U.rank):
            gens.append({(pos, (0,) * (U.dim + 1)): 1, (pos, (1,) * (U.dim + 1)): -1})
        rows = _eliminate_t(gens, U.rank, U.dim, limits)
        result = SubmoduleHandle(rows, U.rank, U.dim, saturated=True)
    U._saturation = result
    return result


def is_member(
    vector: Sequence[LaurentPoly],
    U: SubmoduleHandle,
    limits: GroebnerLimits = DEFAULT_LIMITS,
    order: MonomialOrder = GREVLEX,
) -> bool:
    """Laurent membership v ∈ U·R_d.

    The answer does not depend on ``order``; it only selects which strong basis of the
    saturation reduces v.

    Example:
        >>> from zd_rigidity.laurent import parse_poly
        >>> U = SubmoduleHandle([[parse_poly("u1 - 1")], [parse_poly("u1 + 1")]], rank=1, dim=1)
        >>> is_member([parse_poly("2")], U)
        True
    """
    if len(vector) != U.rank:
        raise DimensionMismatchError(len(vector), U.rank)
    row = normalize_vector(vector)
    if all(e.is_zero() for e in row):
        return True
    saturated = saturate_vars(U, limits)
    if saturated.is_zero():
        return False
    remainder = saturated.basis(order, limits).reduce_terms(vector_to_terms(row))
    return not remainder


def module_colon(
    U: SubmoduleHandle, h: LaurentPoly, limits: GroebnerLimits = DEFAULT_LIMITS
) -> SubmoduleHandle:
    """Colon submodule {v : h·v ∈ U·R_d}, returned saturated.

    Principal ideals use (f) : h = (f / gcd(f, h)). Otherwise U ∩ h·R^k is computed from
    t·U + (1 − t)·h·R^k by eliminating t, and each generator is divided by h.

    Raises:
        ValueError: If h is zero
        BudgetExceededError: If the Gröbner budget runs out
    """
    if h.is_zero():
        raise ValueError("colon by the zero polynomial")
    if h.dim != U.dim:
        raise DimensionMismatchError(h.dim, U.dim)
    saturated = saturate_vars(U, limits)
    h = h.monomial_normalize()
    if h.is_unit() or saturated.is_zero():
        return saturated
    if saturated.is_principal():
        (f,) = saturated.rows[0]
        quotient = f.exact_div(poly_gcd(f, h))
        return SubmoduleHandle([(quotient,)], 1, U.dim, saturated=True)

    gens: list[Vec] = [_lift(vector_to_terms(r), 1) for r in saturated.rows]
    for pos in range(U.rank):
        element: Vec = {}
        for mono, c in h.items():
            element[(pos, (0, *mono))] = c
            element[(pos, (1, *mono))] = -c
        gens.append(element)
    intersection = _eliminate_t(gens, U.rank, U.dim, limits)
    rows = [tuple(entry.exact_div(h) for entry in row) for row in intersection]
    return SubmoduleHandle(rows, U.rank, U.dim, saturated=True)


def submodule_equal(
    U: SubmoduleHandle, V: SubmoduleHandle, limits: GroebnerLimits = DEFAULT_LIMITS
) -> bool:
    """Equality of the Laurent submodules spanned by U and V."""
    if U.rank != V.rank:
        raise DimensionMismatchError(U.rank, V.rank)
    if U.dim != V.dim:
        raise DimensionMismatchError(U.dim, V.dim)
    return all(is_member(r, V, limits) for r in U.rows) and all(
        is_member(r, U, limits) for r in V.rows
    )


__all__ = [
    "SubmoduleHandle",
    "is_member",
    "module_colon",
    "normalize_vector",
    "saturate_vars",
    "submodule_equal",
]

"""Matrices over R_d and fraction-free elimination."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from zd_rigidity.errors import DimensionMismatchError
from zd_rigidity.laurent.poly import LaurentPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyMatrix:
    """Immutable rows × cols grid of Laurent polynomials sharing one dimension d."""

    dim: int
    cols: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self) -> None:
        if self.cols < 1:
            raise ValueError("a matrix needs at least one column")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError(f"row of length {len(row)} in a {self.cols}-column matrix")
            for entry in row:
                if entry.dim != self.dim:
                    raise DimensionMismatchError(entry.dim, self.dim)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[LaurentPoly]], dim: int, cols: int
    ) -> PolyMatrix:
        return cls(dim=dim, cols=cols, entries=tuple(tuple(r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    def row(self, index: int) -> tuple[LaurentPoly, ...]:
        return self.entries[index]

    def is_zero_row(self, index: int) -> bool:
        return all(e.is_zero() for e in self.entries[index])

    def drop_zero_rows(self) -> PolyMatrix:
        kept = tuple(r for r in self.entries if any(not e.is_zero() for e in r))
        return PolyMatrix(dim=self.dim, cols=self.cols, entries=kept)

    def select_rows(self, indices: Sequence[int]) -> PolyMatrix:
        return PolyMatrix(
            dim=self.dim, cols=self.cols, entries=tuple(self.entries[i] for i in indices)
        )

    def permute_rows(self, order: Sequence[int]) -> PolyMatrix:
        if sorted(order) != list(range(self.rows)):
            raise ValueError("order is not a permutation of the rows")
        return self.select_rows(order)

    def add_row_multiple(self, target: int, source: int, factor: LaurentPoly) -> PolyMatrix:
        """Return the matrix with row[target] += factor · row[source]."""
        if target == source:
            raise ValueError("target and source rows must differ")
        rows = list(self.entries)
        rows[target] = tuple(
            t + factor * s for t, s in zip(rows[target], rows[source], strict=True)
        )
        return PolyMatrix(dim=self.dim, cols=self.cols, entries=tuple(rows))

    def rank(self) -> int:
        """Rank over the fraction field of R_d."""
        rank, _ = _bareiss(self.entries, self.dim, self.cols)
        return rank

    def determinant(self) -> LaurentPoly:
        """Determinant of a square matrix by Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError(f"determinant of a non-square {self.rows}x{self.cols} matrix")
        rank, pivot = _bareiss(self.entries, self.dim, self.cols)
        if rank < self.cols:
            return LaurentPoly.zero(self.dim)
        return pivot

    def __str__(self) -> str:
        return "[" + "; ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries) + "]"


def _bareiss(
    rows: tuple[tuple[LaurentPoly, ...], ...], dim: int, cols: int
) -> tuple[int, LaurentPoly]:
    """Fraction-free echelon form.

    Entries after step k are k+1 minors of the input, so every division by the previous
    pivot is exact. Returns the rank and the signed last pivot (the determinant when the
    matrix is square and nonsingular).
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    previous = LaurentPoly.one(dim)
    sign = 1
    rank = 0
    for col in range(cols):
        if rank == nrows:
            break
        pivot_row = next((i for i in range(rank, nrows) if not work[i][col].is_zero()), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            work[rank], work[pivot_row] = work[pivot_row], work[rank]
            sign = -sign
        pivot = work[rank][col]
        for i in range(rank + 1, nrows):
            below = work[i][col]
            for j in range(col + 1, cols):
                work[i][j] = (pivot * work[i][j] - below * work[rank][j]).exact_div(previous)
            work[i][col] = LaurentPoly.zero(dim)
        previous = pivot
        rank += 1
    logger.debug("Bareiss elimination on %dx%d matrix: rank %d", nrows, cols, rank)
    last = previous if sign > 0 else -previous
    return rank, last


__all__ = ["PolyMatrix"]

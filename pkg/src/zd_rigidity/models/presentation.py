"""Finitely presented dual modules.

An algebraic Z^d-action on a compact abelian group X is described by its dual module
M = X̂ over R_d, where the shift by n acts as multiplication by u^n. A presentation
M = R_d^k / (row span of the relation matrix) is finitely generated, hence Noetherian:
every descending chain of closed invariant subgroups of X stabilizes.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property

from zd_rigidity.errors import PresentationError
from zd_rigidity.grobner.submodule import SubmoduleHandle, normalize_vector
from zd_rigidity.laurent.matrix import PolyMatrix
from zd_rigidity.laurent.parser import parse_poly
from zd_rigidity.laurent.poly import LaurentPoly


@dataclass(frozen=True)
class ModulePresentation:
    """M = R_d^k / row-span(relations), with monomial-normalized nonzero relation rows.

    Build instances through ``create`` or ``from_text``; both normalize rows and drop
    zero rows.
    """

    d: int
    k: int
    relations: PolyMatrix
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.d < 1 or self.k < 1:
            raise PresentationError(
                f"presentation needs d >= 1 and k >= 1, got d={self.d}, k={self.k}",
                details={"d": str(self.d), "k": str(self.k)},
            )
        if self.relations.dim != self.d or self.relations.cols != self.k:
            raise PresentationError(
                f"relation matrix of shape (*, {self.relations.cols}) over d={self.relations.dim}"
                f" does not match k={self.k}, d={self.d}"
            )

    @classmethod
    def create(
        cls,
        d: int,
        k: int,
        relations: Sequence[Sequence[LaurentPoly]] = (),
        name: str | None = None,
    ) -> ModulePresentation:
        """Build a presentation from relation rows.

        Raises:
            PresentationError: If a row has the wrong length or dimension
        """
        if d < 1 or k < 1:
            raise PresentationError(
                f"presentation needs d >= 1 and k >= 1, got d={d}, k={k}",
                details={"d": str(d), "k": str(k)},
            )
        rows: list[tuple[LaurentPoly, ...]] = []
        for index, row in enumerate(relations):
            if len(row) != k:
                raise PresentationError(
                    f"relation {index} has {len(row)} entries, expected {k}",
                    details={"relation": str(index)},
                )
            for entry in row:
                if entry.dim != d:
                    raise PresentationError(
                        f"relation {index} lives in dimension {entry.dim}, expected {d}",
                        details={"relation": str(index)},
                    )
            if any(not e.is_zero() for e in row):
                rows.append(normalize_vector(row))
        return cls(d=d, k=k, relations=PolyMatrix(dim=d, cols=k, entries=tuple(rows)), name=name)

    @classmethod
    def from_text(
        cls,
        d: int,
        k: int,
        relations: Sequence[str | Sequence[str]],
        name: str | None = None,
    ) -> ModulePresentation:
        """Build a presentation from polynomial text.

        For k = 1 each relation may be a single string; otherwise each relation is a list
        of k strings.

        Example:
            >>> M = ModulePresentation.from_text(2, 1, ["1 + u1 + u2"], name="ledrappier")
            >>> M.principal_generator() is not None
            True
        """
        rows: list[list[LaurentPoly]] = []
        for relation in relations:
            texts = [relation] if isinstance(relation, str) else list(relation)
            rows.append([parse_poly(text, d) for text in texts])
        return cls.create(d, k, rows, name=name)

    @property
    def rows(self) -> tuple[tuple[LaurentPoly, ...], ...]:
        return self.relations.entries

    @property
    def is_free(self) -> bool:
        """True when there are no relations, i.e. M = R_d^k."""
        return self.relations.rows == 0

    def principal_generator(self) -> LaurentPoly | None:
        """f when M = R_d/(f) is cyclic with a single relation, else None."""
        if self.k == 1 and self.relations.rows == 1:
            return self.relations.entries[0][0]
        return None

    @cached_property
    def submodule(self) -> SubmoduleHandle:
        """Relation submodule of R_d^k; shared so its Gröbner data is computed once."""
        return SubmoduleHandle.from_matrix(self.relations)

    def label(self) -> str:
        return self.name or f"R_{self.d}^{self.k}/({self.relations.rows} relations)"

    def __str__(self) -> str:
        return f"{self.label()}: d={self.d}, k={self.k}, relations={self.relations}"


__all__ = ["ModulePresentation"]

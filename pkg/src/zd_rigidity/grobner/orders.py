"""Monomial and module term orders."""

from collections.abc import Callable
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, model_validator

from zd_rigidity.laurent.poly import Monomial

Term = tuple[int, Monomial]
TermKey = Callable[[Term], Any]


class OrderKind(str, Enum):
    """Kinds of monomial orders supported by the engine."""

    GREVLEX = "grevlex"
    LEX = "lex"
    ELIMINATION = "elimination"


def _grevlex(mono: Monomial) -> tuple[int, tuple[int, ...]]:
    return (sum(mono), tuple(-e for e in reversed(mono)))


class MonomialOrder(BaseModel):
    """Term order on Z[u1..ud]^k.

    Elimination orders compare the variable blocks left to right, each block by
    graded reverse lexicographic order, so every term involving the first block
    dominates every term free of it. For module terms, position-over-term compares the
    component index first (e_0 largest); term-over-position compares monomials first.

    Example:
        >>> order = MonomialOrder(kind=OrderKind.ELIMINATION, blocks=(1, 2))
        >>> key = order.key_function()
        >>> key((0, (1, 0, 0))) > key((0, (0, 5, 5)))
        True
    """

    kind: OrderKind = Field(default=OrderKind.GREVLEX, description="Monomial order kind")
    blocks: tuple[int, ...] | None = Field(
        default=None, description="Variable block sizes for elimination orders"
    )
    position_over_term: bool = Field(
        default=True, description="Compare module positions before monomials"
    )

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_blocks(self) -> "MonomialOrder":
        if self.kind is OrderKind.ELIMINATION:
            if not self.blocks or any(b < 1 for b in self.blocks):
                raise ValueError("elimination orders need positive block sizes")
        elif self.blocks is not None:
            raise ValueError("block sizes are only meaningful for elimination orders")
        return self

    def monomial_key(self) -> Callable[[Monomial], Any]:
        """Sort key on exponent vectors; larger key means larger monomial."""
        if self.kind is OrderKind.LEX:
            return lambda mono: mono
        if self.kind is OrderKind.GREVLEX:
            return _grevlex
        assert self.blocks is not None
        cuts: list[tuple[int, int]] = []
        start = 0
        for size in self.blocks:
            cuts.append((start, start + size))
            start += size

        def elimination_key(mono: Monomial) -> tuple[Any, ...]:
            if start != len(mono):
                raise ValueError(f"blocks {self.blocks} do not cover {len(mono)} variables")
            return tuple(_grevlex(mono[a:b]) for a, b in cuts)

        return elimination_key

    def key_function(self) -> TermKey:
        """Sort key on module terms (position, monomial)."""
        mono_key = self.monomial_key()
        if self.position_over_term:
            return lambda term: (-term[0], mono_key(term[1]))
        return lambda term: (mono_key(term[1]), -term[0])


GREVLEX = MonomialOrder()
LEX = MonomialOrder(kind=OrderKind.LEX)


def elimination_order(first: int, rest: int) -> MonomialOrder:
    """Order eliminating the first block of variables, term-over-position on modules."""
    return MonomialOrder(
        kind=OrderKind.ELIMINATION, blocks=(first, rest), position_over_term=False
    )


__all__ = [
    "GREVLEX",
    "LEX",
    "MonomialOrder",
    "OrderKind",
    "Term",
    "TermKey",
    "elimination_order",
]

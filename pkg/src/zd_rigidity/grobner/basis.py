"""Strong Gröbner bases for submodules of Z[u1..ud]^k.

Module elements are handled internally as sparse maps from terms ``(position, monomial)``
to nonzero integers; the public API speaks in tuples of LaurentPoly with exponents in the
positive orthant.

The completion loop processes two kinds of critical pairs for basis elements f, g whose
leading terms share a position:

- S-pairs cancel the leading terms using the lcm of the leading coefficients,
- G-pairs form the Bézout combination whose leading coefficient is their gcd
  (skipped when one leading coefficient divides the other).

The running basis is kept interreduced. An admitted element retires every element whose
leading term it strongly divides (the retired element is reduced again and re-admitted),
and the tails of the remaining elements are reduced against it. Pairs of retired elements
are dropped. S-pairs are skipped by the product criterion (ideals only) and by the chain
criterion; G-pairs are skipped when some element already has a leading term dividing
``gcd(lc) · lcm(lm)``.

Reduction always uses the divisor with the smallest positive leading coefficient and leaves
the coefficient remainder in ``(-lc/2, lc/2]``, so normal forms against a finished basis
are unique.
"""

from __future__ import annotations

import heapq
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

from sympy.core.intfunc import igcdex

from zd_rigidity.config import DEFAULT_LIMITS, GroebnerLimits
from zd_rigidity.errors import BudgetExceededError, DimensionMismatchError
from zd_rigidity.grobner.orders import GREVLEX, MonomialOrder, Term, TermKey
from zd_rigidity.laurent.poly import LaurentPoly, Monomial

logger = logging.getLogger(__name__)

Vec = dict[Term, int]

G_PAIR = 0
S_PAIR = 1


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b, strict=True))


def _mono_add(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def _mono_sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def _mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b, strict=True))


class _Element:
    __slots__ = ("terms", "lead", "lc")

    def __init__(self, terms: Vec, key: TermKey):
        lead = max(terms, key=key)
        if terms[lead] < 0:
            terms = {t: -c for t, c in terms.items()}
        self.terms = terms
        self.lead = lead
        self.lc = terms[lead]

    def strongly_divides(self, lead: Term, coeff: int) -> bool:
        """True when this leading term divides coeff·lead, coefficient included."""
        return (
            self.lead[0] == lead[0]
            and _divides(self.lead[1], lead[1])
            and coeff % self.lc == 0
        )


def _scaled(element: _Element, shift: Monomial, factor: int, into: Vec) -> None:
    """Accumulate factor · u^shift · element into a sparse vector."""
    for (pos, mono), coeff in element.terms.items():
        term = (pos, _mono_add(mono, shift))
        value = into.get(term, 0) + factor * coeff
        if value:
            into[term] = value
        else:
            into.pop(term, None)


def _reduce(vec: Vec, elements: Sequence[_Element], key: TermKey) -> Vec:
    """Full reduction of vec; every remaining term is irreducible."""
    work = dict(vec)
    result: Vec = {}
    while work:
        term = max(work, key=key)
        coeff = work.pop(term)
        pos, mono = term
        divisor: _Element | None = None
        for element in elements:
            lead_pos, lead_mono = element.lead
            if lead_pos == pos and _divides(lead_mono, mono):
                if divisor is None or element.lc < divisor.lc:
                    divisor = element
        if divisor is None:
            result[term] = coeff
            continue
        quotient, remainder = divmod(coeff, divisor.lc)
        if 2 * remainder > divisor.lc:
            quotient += 1
            remainder -= divisor.lc
        if quotient:
            shift = _mono_sub(mono, divisor.lead[1])
            for (p, m), c in divisor.terms.items():
                if (p, m) == divisor.lead:
                    continue
                target = (p, _mono_add(m, shift))
                value = work.get(target, 0) - quotient * c
                if value:
                    work[target] = value
                else:
                    work.pop(target, None)
        if remainder:
            result[term] = remainder
    return result


def vector_to_terms(vector: Sequence[LaurentPoly]) -> Vec:
    """Sparse term map of a module element with nonnegative exponents.

    Raises:
        ValueError: If some exponent is negative
    """
    vec: Vec = {}
    for pos, entry in enumerate(vector):
        for mono, coeff in entry.items():
            if any(e < 0 for e in mono):
                raise ValueError(f"entry {entry} is outside the positive orthant")
            vec[(pos, mono)] = coeff
    return vec


def terms_to_vector(vec: Vec, rank: int, nvars: int) -> tuple[LaurentPoly, ...]:
    buckets: list[dict[Monomial, int]] = [{} for _ in range(rank)]
    for (pos, mono), coeff in vec.items():
        buckets[pos][mono] = coeff
    return tuple(LaurentPoly(nvars, bucket) for bucket in buckets)


@dataclass(frozen=True)
class StrongGBasis:
    """Finished strong Gröbner basis; immutable and shareable.

    Attributes:
        order: Term order the basis was computed for
        rank: Ambient rank k of the free module
        nvars: Number of polynomial variables
        elements: Sparse basis elements sorted by ascending leading term
        pairs_consumed: Critical pairs processed while completing the basis
    """

    order: MonomialOrder
    rank: int
    nvars: int
    elements: tuple[tuple[tuple[Term, int], ...], ...]
    pairs_consumed: int = 0

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def generators(self) -> tuple[tuple[LaurentPoly, ...], ...]:
        return tuple(terms_to_vector(dict(e), self.rank, self.nvars) for e in self.elements)

    def leading_terms(self) -> list[tuple[Term, int]]:
        """Leading (term, coefficient) of every element."""
        key = self.order.key_function()
        return [max(e, key=lambda item: key(item[0])) for e in self.elements]

    def leading_coefficients(self) -> list[int]:
        return [coeff for _, coeff in self.leading_terms()]

    def reduce_terms(self, vec: Vec) -> Vec:
        """Normal form of a sparse term map."""
        key = self.order.key_function()
        return _reduce(vec, [_Element(dict(e), key) for e in self.elements], key)


class _Completion:
    """Mutable state of one completion run."""

    def __init__(self, rank: int, key: TermKey, limits: GroebnerLimits):
        self.rank = rank
        self.key = key
        self.limits = limits
        self.elements: list[_Element] = []
        self.active: dict[int, _Element] = {}
        self.queue: list[tuple[int, int, int, int]] = []
        self.pending: set[tuple[int, int]] = set()
        self.consumed = 0

    def admit(self, vec: Vec) -> None:
        """Reduce vec and add it to the basis, retiring the elements it covers."""
        todo = [vec]
        while todo:
            reduced = _reduce(todo.pop(), list(self.active.values()), self.key)
            if not reduced:
                continue
            element = _Element(reduced, self.key)
            bits = max(abs(c).bit_length() for c in element.terms.values())
            if bits > self.limits.max_coeff_bits:
                raise BudgetExceededError(
                    "coefficient size", self.consumed, self.limits.max_coeff_bits
                )
            index = len(self.elements)
            self.elements.append(element)
            for other_index, other in list(self.active.items()):
                if element.strongly_divides(other.lead, other.lc):
                    del self.active[other_index]
                    todo.append(other.terms)
            for other_index, other in self.active.items():
                if other.lead[0] == element.lead[0]:
                    self._add_pairs(other_index, other, index, element)
            self.active[index] = element
            self._tail_reduce(element)

    def _add_pairs(self, i: int, f: _Element, j: int, g: _Element) -> None:
        degree = sum(_mono_lcm(f.lead[1], g.lead[1]))
        if f.lc % g.lc and g.lc % f.lc:
            heapq.heappush(self.queue, (degree, G_PAIR, i, j))
        if self.rank == 1 and _coprime(f.lead[1], g.lead[1]) and math.gcd(f.lc, g.lc) == 1:
            return
        self.pending.add((i, j))
        heapq.heappush(self.queue, (degree, S_PAIR, i, j))

    def _tail_reduce(self, new: _Element) -> None:
        """Reduce the tails of the other active elements that new can now reduce."""
        basis = list(self.active.values())
        for element in basis:
            if element is new:
                continue
            tail = {t: c for t, c in element.terms.items() if t != element.lead}
            if not any(
                pos == new.lead[0] and _divides(new.lead[1], mono) for pos, mono in tail
            ):
                continue
            terms = _reduce(tail, basis, self.key)
            terms[element.lead] = element.lc
            element.terms = terms

    def _chain_skip(self, i: int, j: int, lcm_mono: Monomial, lcm_coeff: int) -> bool:
        """Chain criterion: some k covers lcm(i, j) and both pairs (i, k), (j, k) are done."""
        lead = (self.active[i].lead[0], lcm_mono)
        for k, element in self.active.items():
            if k in (i, j) or not element.strongly_divides(lead, lcm_coeff):
                continue
            if (min(i, k), max(i, k)) in self.pending or (min(j, k), max(j, k)) in self.pending:
                continue
            return True
        return False

    def _covered(self, lead: Term, coeff: int) -> bool:
        return any(e.strongly_divides(lead, coeff) for e in self.active.values())

    def run(self) -> None:
        while self.queue:
            _, kind, i, j = heapq.heappop(self.queue)
            if kind == S_PAIR:
                self.pending.discard((i, j))
            if i not in self.active or j not in self.active:
                continue
            f, g = self.active[i], self.active[j]
            lcm_mono = _mono_lcm(f.lead[1], g.lead[1])
            shift_f = _mono_sub(lcm_mono, f.lead[1])
            shift_g = _mono_sub(lcm_mono, g.lead[1])
            poly: Vec = {}
            if kind == S_PAIR:
                coeff_lcm = math.lcm(f.lc, g.lc)
                if self._chain_skip(i, j, lcm_mono, coeff_lcm):
                    continue
                self._consume()
                _scaled(f, shift_f, coeff_lcm // f.lc, poly)
                _scaled(g, shift_g, -(coeff_lcm // g.lc), poly)
            else:
                if self._covered((f.lead[0], lcm_mono), math.gcd(f.lc, g.lc)):
                    continue
                self._consume()
                s, t, _ = igcdex(f.lc, g.lc)
                _scaled(f, shift_f, int(s), poly)
                _scaled(g, shift_g, int(t), poly)
            self.admit(poly)

    def _consume(self) -> None:
        self.consumed += 1
        if self.consumed > self.limits.max_pairs:
            raise BudgetExceededError("pair limit", self.consumed - 1, self.limits.max_pairs)

    def finished(self) -> list[_Element]:
        """Active elements, tail-reduced once more and sorted by ascending leading term."""
        basis = list(self.active.values())
        reduced: list[_Element] = []
        for element in basis:
            tail = {t: c for t, c in element.terms.items() if t != element.lead}
            terms = _reduce(tail, basis, self.key)
            terms[element.lead] = element.lc
            reduced.append(_Element(terms, self.key))
        reduced.sort(key=lambda e: self.key(e.lead))
        return reduced


def complete_basis(
    gens: Sequence[Vec],
    rank: int,
    nvars: int,
    order: MonomialOrder = GREVLEX,
    limits: GroebnerLimits = DEFAULT_LIMITS,
) -> StrongGBasis:
    """Strong Gröbner basis of the submodule generated by sparse term maps.

    Args:
        gens: Generators as term maps with nonnegative exponents
        rank: Ambient rank k
        nvars: Number of variables
        order: Term order
        limits: Pair and coefficient-size budget

    Returns:
        The interreduced strong basis

    Raises:
        BudgetExceededError: If the pair count or a coefficient size exceeds the limits
    """
    key = order.key_function()
    completion = _Completion(rank, key, limits)
    for vec in gens:
        if vec:
            completion.admit(dict(vec))
    completion.run()
    elements = completion.finished()
    logger.debug(
        "Strong basis completed: %d elements (%d admitted), %d pairs, rank %d, %d variables",
        len(elements),
        len(completion.elements),
        completion.consumed,
        rank,
        nvars,
    )
    return StrongGBasis(
        order=order,
        rank=rank,
        nvars=nvars,
        elements=tuple(
            tuple(sorted(e.terms.items(), key=lambda item: key(item[0]))) for e in elements
        ),
        pairs_consumed=completion.consumed,
    )


def strong_groebner(
    rows: Sequence[Sequence[LaurentPoly]],
    order: MonomialOrder = GREVLEX,
    limits: GroebnerLimits = DEFAULT_LIMITS,
    rank: int | None = None,
) -> StrongGBasis:
    """Strong Gröbner basis of the submodule spanned by rows.

    Rows must already lie in the positive orthant (see LaurentPoly.monomial_normalize).

    Example:
        >>> from zd_rigidity.laurent import parse_poly
        >>> basis = strong_groebner([[parse_poly("u1 - 1")], [parse_poly("u1 + 1")]])
        >>> [str(g[0]) for g in basis.generators]
        ['2', '1 + u1']
    """
    if rank is None:
        if not rows:
            raise ValueError("rank is required for an empty generator list")
        rank = len(rows[0])
    nvars = _common_dimension(rows)
    for row in rows:
        if len(row) != rank:
            raise DimensionMismatchError(len(row), rank)
    return complete_basis([vector_to_terms(r) for r in rows], rank, nvars, order, limits)


def normal_form(vector: Sequence[LaurentPoly], basis: StrongGBasis) -> tuple[LaurentPoly, ...]:
    """Unique remainder of vector against basis; zero exactly for members."""
    if len(vector) != basis.rank:
        raise DimensionMismatchError(len(vector), basis.rank)
    for entry in vector:
        if entry.dim != basis.nvars:
            raise DimensionMismatchError(entry.dim, basis.nvars)
    remainder = basis.reduce_terms(vector_to_terms(vector))
    return terms_to_vector(remainder, basis.rank, basis.nvars)


def _common_dimension(rows: Sequence[Sequence[LaurentPoly]]) -> int:
    dims = {entry.dim for row in rows for entry in row}
    if len(dims) > 1:
        low, high = sorted(dims)[0], sorted(dims)[-1]
        raise DimensionMismatchError(low, high)
    if not dims:
        raise ValueError("cannot infer the number of variables from no entries")
    return dims.pop()


__all__ = [
    "StrongGBasis",
    "Vec",
    "complete_basis",
    "normal_form",
    "strong_groebner",
    "terms_to_vector",
    "vector_to_terms",
]

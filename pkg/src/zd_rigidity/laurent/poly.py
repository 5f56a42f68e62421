"""Exact multivariate Laurent polynomials with integer coefficients.

Elements of R_d = Z[u1^±1, ..., ud^±1] are stored as immutable canonical term tuples.
Terms are kept in graded-lexicographic order: ascending total degree, and within one
degree descending lexicographic order on the exponent vector, so that ``1 + u1 + u2``
prints the way it reads. Two polynomials are equal exactly when their term tuples are.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from functools import reduce
from typing import Any

import numpy as np
import numpy.typing as npt

from zd_rigidity.errors import DimensionMismatchError

Monomial = tuple[int, ...]

VARIABLE_PREFIX = "u"


def grlex_key(mono: Monomial) -> tuple[int, tuple[int, ...]]:
    """Sort key of the canonical (print) order of terms."""
    return (sum(mono), tuple(-e for e in mono))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    """Product u^a · u^b = u^(a+b)."""
    return tuple(x + y for x, y in zip(a, b, strict=True))


def format_monomial(mono: Monomial) -> str:
    """Render a monomial as ``u1^-1*u2`` (empty string for the unit monomial)."""
    factors: list[str] = []
    for index, exp in enumerate(mono, start=1):
        if exp == 0:
            continue
        name = f"{VARIABLE_PREFIX}{index}"
        factors.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(factors)


class LaurentPoly:
    """Immutable element of R_d.

    Example:
        >>> f = LaurentPoly.one(2) + LaurentPoly.variable(0, 2) + LaurentPoly.variable(1, 2)
        >>> str(f)
        '1 + u1 + u2'
        >>> f.content()
        1
    """

    __slots__ = ("_dim", "_terms", "_hash")

    def __init__(
        self,
        dim: int,
        terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = (),
    ):
        """Build a polynomial, merging repeated monomials and dropping zero coefficients.

        Args:
            dim: Ambient dimension d (number of variables)
            terms: Monomial to coefficient mapping, or an iterable of pairs

        Raises:
            ValueError: If dim is not positive
            DimensionMismatchError: If an exponent vector has the wrong length
        """
        if dim < 1:
            raise ValueError(f"dimension must be positive, got {dim}")
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for mono, coeff in pairs:
            key = tuple(int(e) for e in mono)
            if len(key) != dim:
                raise DimensionMismatchError(len(key), dim)
            acc[key] = acc.get(key, 0) + int(coeff)
        self._dim = dim
        self._terms = _canonical(acc)
        self._hash: int | None = None

    @classmethod
    def _raw(cls, dim: int, acc: dict[Monomial, int]) -> LaurentPoly:
        """Build from an already validated accumulator (internal fast path)."""
        poly = object.__new__(cls)
        poly._dim = dim
        poly._terms = _canonical(acc)
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls, dim: int) -> LaurentPoly:
        return cls(dim)

    @classmethod
    def one(cls, dim: int) -> LaurentPoly:
        return cls.constant(1, dim)

    @classmethod
    def constant(cls, value: int, dim: int) -> LaurentPoly:
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1) -> LaurentPoly:
        """Build ``coeff · u^exponents``."""
        return cls(len(exponents), {tuple(exponents): coeff})

    @classmethod
    def variable(cls, index: int, dim: int) -> LaurentPoly:
        """Build the variable u_{index+1} (zero-based index)."""
        if not 0 <= index < dim:
            raise ValueError(f"variable index {index} outside dimension {dim}")
        exps = [0] * dim
        exps[index] = 1
        return cls.monomial(exps)

    @classmethod
    def from_univariate(cls, coeffs: Sequence[int], low: int = 0) -> LaurentPoly:
        """Build a one-variable polynomial from ascending coefficients starting at t^low."""
        return cls(1, {(low + i,): c for i, c in enumerate(coeffs)})

    @classmethod
    def binomial_unit(cls, n: Sequence[int]) -> LaurentPoly:
        """Build u^n − 1, the polynomial of the mixing criterion."""
        dim = len(n)
        return cls(dim, [(tuple(n), 1), ((0,) * dim, -1)])

    # Accessors

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def terms(self) -> dict[Monomial, int]:
        """Copy of the term map."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Iterate over (monomial, coefficient) in canonical order."""
        return iter(self._terms)

    @property
    def support(self) -> tuple[Monomial, ...]:
        return tuple(m for m, _ in self._terms)

    def coefficient(self, mono: Sequence[int]) -> int:
        key = tuple(mono)
        for m, c in self._terms:
            if m == key:
                return c
        return 0

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return self.is_zero() or (len(self._terms) == 1 and not any(self._terms[0][0]))

    def is_monomial(self) -> bool:
        """True for c·u^n with c ≠ 0."""
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for ±u^n, the units of R_d."""
        return len(self._terms) == 1 and abs(self._terms[0][1]) == 1

    def min_exponents(self) -> Monomial:
        if self.is_zero():
            return (0,) * self._dim
        return tuple(min(col) for col in zip(*self.support, strict=True))

    def max_exponents(self) -> Monomial:
        if self.is_zero():
            return (0,) * self._dim
        return tuple(max(col) for col in zip(*self.support, strict=True))

    def total_degree_span(self) -> int:
        """Largest coordinate width of the Newton box; 0 for monomials."""
        lo, hi = self.min_exponents(), self.max_exponents()
        return max((h - low for low, h in zip(lo, hi, strict=True)), default=0)

    def leading_term(self, key: Any) -> tuple[Monomial, int]:
        """Leading (monomial, coefficient) under the given sort key function."""
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=lambda t: key(t[0]))

    # Ring structure

    def _check(self, other: LaurentPoly) -> None:
        if self._dim != other._dim:
            raise DimensionMismatchError(self._dim, other._dim)

    def _coerce(self, other: object) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly.constant(other, self._dim)
        return None

    def __add__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in rhs._terms:
            acc[m] = acc.get(m, 0) + c
        return LaurentPoly._raw(self._dim, acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self._dim, {m: -c for m, c in self._terms})

    def __sub__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> LaurentPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._terms:
            for m2, c2 in rhs._terms:
                key = monomial_mul(m1, m2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentPoly._raw(self._dim, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            if not self.is_unit():
                raise ValueError("negative powers are defined only for unit monomials")
            (mono, coeff), = self._terms
            return LaurentPoly.monomial([-e * -exponent for e in mono], coeff ** (-exponent))
        result = LaurentPoly.one(self._dim)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, n: Sequence[int]) -> LaurentPoly:
        """Multiply by the unit monomial u^n."""
        if len(n) != self._dim:
            raise DimensionMismatchError(len(n), self._dim)
        return LaurentPoly._raw(self._dim, {monomial_mul(m, tuple(n)): c for m, c in self._terms})

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient self / other in R_d.

        Division runs on lexicographic leading terms; every quotient exponent must stay
        inside the Newton box difference, which makes the loop finite.

        Raises:
            ZeroDivisionError: If other is zero
            ArithmeticError: If other does not divide self
        """
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        lo = tuple(a - b for a, b in zip(self.min_exponents(), other.min_exponents(), strict=True))
        hi = tuple(a - b for a, b in zip(self.max_exponents(), other.max_exponents(), strict=True))
        lead_mono, lead_coeff = max(other._terms)
        remainder = dict(self._terms)
        quotient: dict[Monomial, int] = {}
        while remainder:
            mono = max(remainder)
            coeff = remainder[mono]
            q_mono = tuple(a - b for a, b in zip(mono, lead_mono, strict=True))
            if coeff % lead_coeff or any(
                not low <= e <= h for e, low, h in zip(q_mono, lo, hi, strict=True)
            ):
                raise ArithmeticError(f"{other} does not divide {self}")
            q_coeff = coeff // lead_coeff
            quotient[q_mono] = q_coeff
            for m, c in other._terms:
                key = monomial_mul(m, q_mono)
                value = remainder.get(key, 0) - q_coeff * c
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return LaurentPoly._raw(self._dim, quotient)

    def divides(self, other: LaurentPoly) -> bool:
        """True when self divides other in R_d."""
        try:
            other.exact_div(self)
        except (ArithmeticError, ZeroDivisionError):
            return False
        return True

    # Arithmetic invariants

    def content(self) -> int:
        """Gcd of all coefficients; 0 exactly for the zero polynomial."""
        return reduce(math.gcd, (abs(c) for _, c in self._terms), 0)

    def normalizing_shift(self) -> Monomial:
        """Exponent n such that u^n · self is monomial-normalized."""
        return tuple(-e for e in self.min_exponents())

    def monomial_normalize(self) -> LaurentPoly:
        """Representative of the unit orbit touching every coordinate hyperplane.

        All exponents become nonnegative and each variable attains exponent zero, so the
        result generates the same Laurent ideal and lives in the positive orthant.
        """
        if self.is_zero():
            return self
        return self.shift(self.normalizing_shift())

    def substitute_monomial(self, n: Sequence[int]) -> LaurentPoly:
        """Image under u_i ↦ t^{n_i}, a one-variable Laurent polynomial.

        Raises:
            ValueError: If n is the zero vector
        """
        if len(n) != self._dim:
            raise DimensionMismatchError(len(n), self._dim)
        if not any(n):
            raise ValueError("substitution direction must be nonzero")
        acc: dict[Monomial, int] = {}
        for mono, coeff in self._terms:
            key = (sum(e * k for e, k in zip(mono, n, strict=True)),)
            acc[key] = acc.get(key, 0) + coeff
        return LaurentPoly._raw(1, acc)

    def univariate_coefficients(self) -> tuple[int, list[int]]:
        """For d = 1, return (lowest exponent, ascending dense coefficient list)."""
        if self._dim != 1:
            raise DimensionMismatchError(self._dim, 1)
        if self.is_zero():
            return 0, []
        low = self.min_exponents()[0]
        high = self.max_exponents()[0]
        dense = [0] * (high - low + 1)
        for (e,), c in self._terms:
            dense[e - low] = c
        return low, dense

    # Evaluation

    def eval(self, z: Sequence[complex]) -> complex:
        """Evaluate at a point with nonzero coordinates.

        Real and imaginary parts are accumulated with math.fsum so that cancellation near
        the zero variety does not lose digits.

        Raises:
            ValueError: If a coordinate is zero
        """
        if len(z) != self._dim:
            raise DimensionMismatchError(len(z), self._dim)
        point = [complex(v) for v in z]
        if any(v == 0 for v in point):
            raise ValueError("evaluation point has a zero coordinate")
        values: list[complex] = []
        for mono, coeff in self._terms:
            value = complex(coeff)
            for v, e in zip(point, mono, strict=True):
                if e:
                    value *= v**e
            values.append(value)
        return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))

    def eval_angles(self, theta: npt.NDArray[np.float64]) -> npt.NDArray[np.complex128]:
        """Evaluate on torus points given by angles in turns.

        Args:
            theta: Array of shape (..., d); the point is exp(2πi θ)

        Returns:
            Complex array of shape theta.shape[:-1]
        """
        theta = np.asarray(theta, dtype=np.float64)
        if theta.shape[-1] != self._dim:
            raise DimensionMismatchError(theta.shape[-1], self._dim)
        if self.is_zero():
            return np.zeros(theta.shape[:-1], dtype=np.complex128)
        exps = np.array(self.support, dtype=np.float64)
        coeffs = np.array([float(c) for _, c in self._terms], dtype=np.float64)
        phases = theta @ exps.T
        return np.exp(2j * np.pi * phases) @ coeffs.astype(np.complex128)

    # Equality, hashing, printing

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._dim == other._dim and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._dim, self._terms))
        return self._hash

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for index, (mono, coeff) in enumerate(self._terms):
            body = format_monomial(mono)
            magnitude = abs(coeff)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if index == 0:
                parts.append(f"-{text}" if coeff < 0 else text)
            else:
                parts.append(f" - {text}" if coeff < 0 else f" + {text}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly(dim={self._dim}, '{self}')"


def _canonical(acc: dict[Monomial, int]) -> tuple[tuple[Monomial, int], ...]:
    return tuple(sorted(((m, c) for m, c in acc.items() if c), key=lambda t: grlex_key(t[0])))


def unit_torus_point(theta: Sequence[float]) -> list[complex]:
    """Point exp(2πi θ) of the torus for angles given in turns."""
    return [cmath.exp(2j * math.pi * t) for t in theta]


__all__ = [
    "LaurentPoly",
    "Monomial",
    "format_monomial",
    "grlex_key",
    "monomial_mul",
    "unit_torus_point",
]

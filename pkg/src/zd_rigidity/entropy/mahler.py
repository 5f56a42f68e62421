"""Mahler measure m(f) = ∫ log|f| dλ over the torus, in nats.

Three estimators are provided:

- ``mahler_d1_exact`` applies Jensen's formula to companion-matrix roots (d = 1),
- ``mahler_quadrature`` averages log|f| over a shifted uniform lattice,
- ``mahler_roots_of_unity`` averages log|f| over the N-torsion points of the torus.
"""

from __future__ import annotations

import logging
import math

import numpy as np
import numpy.typing as npt

from zd_rigidity.errors import DimensionMismatchError, NumericalFailureError, SingularGridError
from zd_rigidity.laurent.poly import LaurentPoly
from zd_rigidity.models.reports import MahlerEstimate, MahlerMethod

logger = logging.getLogger(__name__)

ZERO_THRESHOLD = 1e-13
SINGULAR_FRACTION = 1e-3
SHIFT_BASES = (2, 3, 5)
NEWTON_STEPS = 8
ROOT_RESIDUAL = 1e-8
BLOCK_POINTS = 1 << 18


def _require_nonzero(f: LaurentPoly) -> None:
    if f.is_zero():
        raise ValueError("the Mahler measure of the zero polynomial is -infinity")


def _polish(coeffs: npt.NDArray[np.float64], roots: npt.NDArray[np.complex128]) -> tuple[
    npt.NDArray[np.complex128], float
]:
    """Newton-polish roots; returns polished roots and the largest final correction."""
    derivative = np.polyder(coeffs)
    largest = 0.0
    polished = roots.copy()
    for index, root in enumerate(roots):
        z = complex(root)
        step = 0.0
        for _ in range(NEWTON_STEPS):
            value = np.polyval(coeffs, z)
            slope = np.polyval(derivative, z)
            if slope == 0:
                break
            candidate = z - value / slope
            if abs(np.polyval(coeffs, candidate)) >= abs(value):
                break
            step = abs(candidate - z)
            z = candidate
        polished[index] = z
        largest = max(largest, step)
    return polished, largest


def mahler_d1_exact(f: LaurentPoly) -> MahlerEstimate:
    """m(f) = log|lead| + Σ log max(1, |ρ|) over the complex roots ρ of f.

    Roots are companion-matrix eigenvalues (numpy.roots) refined by Newton steps.

    Raises:
        ValueError: If f is zero
        DimensionMismatchError: If f is not a one-variable polynomial
        NumericalFailureError: If a polished root still has a large residual

    Example:
        >>> round(mahler_d1_exact(LaurentPoly.from_univariate([-2, 1])).estimate, 6)
        0.693147
    """
    _require_nonzero(f)
    if f.dim != 1:
        raise DimensionMismatchError(f.dim, 1)
    _, ascending = f.univariate_coefficients()
    lead = ascending[-1]
    if len(ascending) == 1:
        return MahlerEstimate(
            estimate=math.log(abs(lead)),
            method=MahlerMethod.ROOT_FORMULA,
            resolution={"degree": 0},
        )
    coeffs = np.array([float(c) for c in reversed(ascending)], dtype=np.float64)
    roots, correction = _polish(coeffs, np.roots(coeffs).astype(np.complex128))
    scale = np.abs(coeffs).sum()
    for root in roots:
        magnitude = max(1.0, abs(root)) ** (len(coeffs) - 1)
        residual = abs(np.polyval(coeffs, root)) / (scale * magnitude)
        if residual > ROOT_RESIDUAL:
            raise NumericalFailureError(
                f"root finder did not converge for {f}",
                details={"root": repr(complex(root)), "residual": repr(residual)},
            )
    value = math.fsum([math.log(abs(lead))] + [math.log(max(1.0, abs(r))) for r in roots])
    return MahlerEstimate(
        estimate=max(value, 0.0),
        method=MahlerMethod.ROOT_FORMULA,
        resolution={"degree": len(coeffs) - 1},
        error_indicator=correction,
    )


def lattice_shift(d: int, base: int = 2) -> tuple[float, ...]:
    """Irrational offsets (frac(k·√base))_{k=1..d} in turns."""
    root = math.sqrt(base)
    return tuple((k * root) % 1.0 for k in range(1, d + 1))


def _lattice_mean(f: LaurentPoly, n: int, shift: tuple[float, ...]) -> tuple[float, int]:
    """Mean of log|f| over ((i + shift) / n) for i in [0, n)^d, and the vanishing count.

    Points where |f| falls below the zero threshold are left out of the mean.
    """
    d = f.dim
    axes = [(np.arange(n, dtype=np.float64) + s) / n for s in shift]
    rows_per_block = max(1, BLOCK_POINTS // n ** (d - 1))
    sums: list[float] = []
    kept = 0
    vanishing = 0
    for start in range(0, n, rows_per_block):
        grids = np.meshgrid(axes[0][start : start + rows_per_block], *axes[1:], indexing="ij")
        theta = np.stack(grids, axis=-1).reshape(-1, d)
        magnitude = np.abs(f.eval_angles(theta))
        mask = magnitude >= ZERO_THRESHOLD
        vanishing += int(magnitude.size - mask.sum())
        kept += int(mask.sum())
        sums.append(float(np.log(magnitude[mask]).sum()))
    total = n**d
    if vanishing > SINGULAR_FRACTION * total:
        raise SingularGridError(vanishing / total, shift)
    if kept == 0:
        raise SingularGridError(1.0, shift)
    return math.fsum(sums) / kept, vanishing


def _checked(value: float, indicator: float, f: LaurentPoly, method: MahlerMethod) -> float:
    """Enforce m(f) ≥ 0 up to the error indicator, then clamp."""
    if value < -(3.0 * indicator + 1e-6):
        raise NumericalFailureError(
            f"negative Mahler estimate {value:.6g} for {f} by {method.value}",
            details={"estimate": repr(value), "error_indicator": repr(indicator)},
        )
    return max(value, 0.0)


def mahler_quadrature(f: LaurentPoly, grid: int = 512) -> MahlerEstimate:
    """Shifted-lattice quadrature of log|f| on the torus.

    The estimate is the mean on the 2N lattice; |Q(2N) − Q(N)| is the error indicator.
    When more than 0.1% of samples vanish the lattice is retried with the offsets built
    from √3 and then √5.

    Raises:
        ValueError: If f is zero or grid < 2
        SingularGridError: If every shift produces a singular grid
        NumericalFailureError: If the estimate is significantly negative
    """
    _require_nonzero(f)
    if grid < 2:
        raise ValueError(f"grid must be at least 2, got {grid}")
    if f.is_monomial():
        (_, coeff), = f.items()
        return MahlerEstimate(
            estimate=math.log(abs(coeff)),
            method=MahlerMethod.QUADRATURE,
            resolution={"grid": grid},
        )
    failure: SingularGridError | None = None
    for base in SHIFT_BASES:
        shift = lattice_shift(f.dim, base)
        try:
            coarse, _ = _lattice_mean(f, grid, shift)
            fine, skipped = _lattice_mean(f, 2 * grid, shift)
        except SingularGridError as exc:
            logger.warning("Singular grid for %s with shift base %d: %s", f, base, exc.message)
            failure = exc
            continue
        indicator = abs(fine - coarse)
        return MahlerEstimate(
            estimate=_checked(fine, indicator, f, MahlerMethod.QUADRATURE),
            method=MahlerMethod.QUADRATURE,
            resolution={"grid": grid, "fine_grid": 2 * grid, "shift": list(shift)},
            error_indicator=indicator,
            skipped=skipped,
        )
    assert failure is not None
    raise failure


def _torsion_mean(f: LaurentPoly, order: int) -> tuple[float, int]:
    """Mean of log|f(ω)| over ω ∈ μ_N^d with f(ω) ≠ 0, and the number of zeros skipped."""
    threshold = 1e-9 * sum(abs(c) for _, c in f.items())
    d = f.dim
    axis = np.arange(order, dtype=np.float64) / order
    rows_per_block = max(1, BLOCK_POINTS // order ** (d - 1))
    sums: list[float] = []
    kept = 0
    for start in range(0, order, rows_per_block):
        grids = np.meshgrid(
            axis[start : start + rows_per_block], *([axis] * (d - 1)), indexing="ij"
        )
        magnitude = np.abs(f.eval_angles(np.stack(grids, axis=-1).reshape(-1, d)))
        mask = magnitude > threshold
        kept += int(mask.sum())
        sums.append(float(np.log(magnitude[mask]).sum()))
    skipped = order**d - kept
    if kept == 0:
        raise NumericalFailureError(
            f"{f} vanishes at every {order}-torsion point; increase the order",
            details={"order": str(order)},
        )
    return math.fsum(sums) / kept, skipped


def mahler_roots_of_unity(f: LaurentPoly, order: int = 64) -> MahlerEstimate:
    """Average of log|f| over the N-torsion points of the torus.

    The estimate is the level-N mean; |R(2N) − R(N)| is the error indicator.

    Raises:
        ValueError: If f is zero or order < 2
        NumericalFailureError: If f vanishes at every N-torsion point

    Example:
        >>> round(mahler_roots_of_unity(LaurentPoly.from_univariate([-2, 1]), 16).estimate, 5)
        0.69315
    """
    _require_nonzero(f)
    if order < 2:
        raise ValueError(f"order must be at least 2, got {order}")
    value, skipped = _torsion_mean(f, order)
    finer, _ = _torsion_mean(f, 2 * order)
    indicator = abs(finer - value)
    return MahlerEstimate(
        estimate=_checked(value, indicator, f, MahlerMethod.ROOTS_OF_UNITY),
        method=MahlerMethod.ROOTS_OF_UNITY,
        resolution={"order": order, "check_order": 2 * order},
        error_indicator=indicator,
        skipped=skipped,
    )


__all__ = [
    "lattice_shift",
    "mahler_d1_exact",
    "mahler_quadrature",
    "mahler_roots_of_unity",
]

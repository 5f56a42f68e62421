"""Numerical checks around convolution zero divisors in ℓ¹(Z^d).

A nonzero g ∈ ℓ¹(Z^d) is a zero divisor when g ∗ f = 0 for some nonzero f ∈ ℓ¹(Z^d),
equivalently when the zero set of ĝ on T^d supports a nonzero Fourier transform. These
checks are evidence, not proofs: the convolution operator is truncated to a finite box
and its singular values are inspected.

On finitely supported inputs f ↦ g ∗ f is injective for every nonzero g, since Z[u^±1]
has no zero divisors, so the truncated kernel is always trivial. What separates kernels
whose transform vanishes somewhere on T^d is the trend of the smallest relative singular
value: it is bounded below by min |ĝ| / max |ĝ| and decays with the radius exactly when
ĝ has a zero.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from itertools import product

import numpy as np
import numpy.typing as npt

from zd_rigidity.errors import DimensionMismatchError
from zd_rigidity.laurent.poly import LaurentPoly
from zd_rigidity.models.reports import ZeroDivisorReport

logger = logging.getLogger(__name__)

KERNEL_TOLERANCE = 1e-8
TRIVIAL_RATIO = 1e-6
DECAY_FACTOR = 0.5
VARIETY_THRESHOLD = 1e-12

Kernel = Mapping[tuple[int, ...], complex]


def convolution_kernel(p: LaurentPoly) -> dict[tuple[int, ...], complex]:
    """The finitely supported sequence of coefficients of p."""
    return {mono: complex(c) for mono, c in p.items()}


def _checked_kernel(g: Kernel) -> tuple[int, dict[tuple[int, ...], complex]]:
    support = {tuple(int(e) for e in n): complex(v) for n, v in g.items() if v != 0}
    if not support:
        raise ValueError("the zero sequence is a zero divisor of everything")
    dims = {len(n) for n in support}
    if len(dims) != 1:
        raise ValueError(f"support points have mixed dimensions {sorted(dims)}")
    return dims.pop(), support


def convolution_matrix(g: Kernel, radius: int) -> npt.NDArray[np.complex128]:
    """Matrix of f ↦ g ∗ f from sequences on [-R, R]^d to sequences on [-R, R]^d + supp g.

    Columns follow the row-major order of the input box, rows that of the output box. The
    output box holds all of g ∗ f, so the matrix has full column rank for nonzero g.
    """
    d, support = _checked_kernel(g)
    low = [min(n[j] for n in support) for j in range(d)]
    high = [max(n[j] for n in support) for j in range(d)]
    in_width = 2 * radius + 1
    out_shape = tuple(in_width + high[j] - low[j] for j in range(d))
    inputs = np.array(list(product(range(in_width), repeat=d)), dtype=np.int64).reshape(-1, d)
    matrix = np.zeros((int(np.prod(out_shape)), len(inputs)), dtype=np.complex128)
    columns = np.arange(len(inputs))
    for n, value in support.items():
        # both boxes are indexed from their lower corner
        positions = inputs + (np.array(n, dtype=np.int64) - np.array(low, dtype=np.int64))
        rows = np.ravel_multi_index(tuple(positions.T), out_shape)
        matrix[rows, columns] += value
    return matrix


def _relative_spectrum(
    g: Kernel, radius: int
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.complex128]]:
    _, singular, vh = np.linalg.svd(convolution_matrix(g, radius), full_matrices=False)
    return singular / singular[0], vh


def fourier_identity_residual(f: Kernel, g: Kernel) -> float:
    """Relative residual of (f ∗ g)^ = f̂ · ĝ, with f ∗ g summed directly.

    Both sequences are placed on a grid wide enough that the discrete transform has no
    wrap-around, so the identity holds up to rounding.
    """
    d, f_support = _checked_kernel(f)
    e, g_support = _checked_kernel(g)
    if d != e:
        raise DimensionMismatchError(d, e)
    f_low = [min(n[j] for n in f_support) for j in range(d)]
    g_low = [min(n[j] for n in g_support) for j in range(d)]
    shape = tuple(
        max(n[j] for n in f_support) - f_low[j] + max(n[j] for n in g_support) - g_low[j] + 1
        for j in range(d)
    )
    direct = np.zeros(shape, dtype=np.complex128)
    for a, fa in f_support.items():
        for b, gb in g_support.items():
            direct[tuple(a[j] - f_low[j] + b[j] - g_low[j] for j in range(d))] += fa * gb
    f_grid = np.zeros(shape, dtype=np.complex128)
    for a, fa in f_support.items():
        f_grid[tuple(a[j] - f_low[j] for j in range(d))] = fa
    g_grid = np.zeros(shape, dtype=np.complex128)
    for b, gb in g_support.items():
        g_grid[tuple(b[j] - g_low[j] for j in range(d))] = gb
    transformed = np.fft.fftn(direct)
    product_of_transforms = np.fft.fftn(f_grid) * np.fft.fftn(g_grid)
    scale = max(1.0, float(np.max(np.abs(transformed))))
    return float(np.max(np.abs(transformed - product_of_transforms))) / scale


def _random_box_sequence(
    rng: np.random.Generator, d: int, radius: int
) -> dict[tuple[int, ...], complex]:
    width = 2 * radius + 1
    values = rng.standard_normal(width**d) + 1j * rng.standard_normal(width**d)
    points = product(range(-radius, radius + 1), repeat=d)
    return {n: complex(v) for n, v in zip(points, values, strict=True)}


def zero_divisor_check(
    g: Kernel, trials: int = 16, radius: int = 8, seed: int = 0
) -> ZeroDivisorReport:
    """Look for nonzero f supported in [-R, R]^d with g ∗ f = 0.

    The truncated convolution operator is decomposed by SVD. Random f are projected onto
    its numerical kernel (relative singular values below 1e-8), and the largest ratio
    |P_ker f| / |f| over the trials is reported. The smallest relative singular value is
    also tracked over the radii 1, 2, 4, ... up to R, and the Fourier identity is checked
    on the same random f. The kernel part always comes out trivial for nonzero g;
    sigma_decaying, set when the last value of the trend is below half the first, flags
    a transform with zeros on the torus.

    Args:
        g: Finitely supported sequence, mapping points of Z^d to values
        trials: Number of random baselines f
        radius: Truncation radius R
        seed: Seed of the numpy random generator

    Returns:
        ZeroDivisorReport; trivial_kernel holds when the ratio is below 1e-6

    Raises:
        ValueError: If g is zero, trials < 1 or radius < 1

    Example:
        >>> zero_divisor_check({(0,): 1, (1,): -1}, trials=2, radius=4).trivial_kernel
        True
    """
    if trials < 1 or radius < 1:
        raise ValueError(f"need trials >= 1 and radius >= 1, got {trials} and {radius}")
    d, support = _checked_kernel(g)
    rng = np.random.default_rng(seed)

    trend: list[tuple[int, float]] = []
    r = 1
    while r < radius:
        spectrum, _ = _relative_spectrum(support, r)
        trend.append((r, float(spectrum[-1])))
        r *= 2
    spectrum, vh = _relative_spectrum(support, radius)
    trend.append((radius, float(spectrum[-1])))
    kernel_basis = vh[spectrum < KERNEL_TOLERANCE]

    ratios: list[float] = []
    residuals: list[float] = []
    for _ in range(trials):
        f = _random_box_sequence(rng, d, radius)
        vector = np.array(list(f.values()), dtype=np.complex128)
        projected = float(np.linalg.norm(kernel_basis @ vector)) if len(kernel_basis) else 0.0
        ratios.append(projected / float(np.linalg.norm(vector)))
        residuals.append(fourier_identity_residual(f, support))

    norm_ratio = max(ratios)
    logger.info(
        "Zero-divisor check at radius %d: kernel dimension %d, ratio %.3g, sigma %.3g -> %.3g",
        radius,
        len(kernel_basis),
        norm_ratio,
        trend[0][1],
        trend[-1][1],
    )
    return ZeroDivisorReport(
        support=[list(n) for n in sorted(support)],
        radius=radius,
        kernel_dimension=len(kernel_basis),
        norm_ratio=norm_ratio,
        sigma_trend=trend,
        fourier_residual=max(residuals),
        trivial_kernel=norm_ratio < TRIVIAL_RATIO,
        sigma_decaying=len(trend) > 1 and trend[-1][1] < DECAY_FACTOR * trend[0][1],
    )


def variety_measure_check(p: LaurentPoly, samples: int = 100_000, seed: int = 0) -> float:
    """Fraction of uniform random torus points where |p| < 1e-12.

    For a nonzero Laurent polynomial the zero variety has Haar measure zero, so the
    fraction should vanish.

    Raises:
        ValueError: If p is zero or samples < 1
    """
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    rng = np.random.default_rng(seed)
    hits = 0
    for start in range(0, samples, 1 << 16):
        count = min(1 << 16, samples - start)
        theta = rng.random((count, p.dim))
        hits += int(np.count_nonzero(np.abs(p.eval_angles(theta)) < VARIETY_THRESHOLD))
    return hits / samples


__all__ = [
    "convolution_kernel",
    "convolution_matrix",
    "fourier_identity_residual",
    "variety_measure_check",
    "zero_divisor_check",
]

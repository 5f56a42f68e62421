"""Character-plus-lift splitting of sampled circle-valued maps on tori.

A continuous f: T^m → T with f(0) = 1 factors uniquely as f(x) = exp(2πi (k·x + S(x)))
with k ∈ Z^m (a character) and S: T^m → R continuous with S(0) = 0. On a uniform grid
the splitting is recovered by unwrapping phases along axis-parallel paths from the origin:
the winding along each origin line is k_j, and the unwrapped phase minus k·x is S.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from zd_rigidity.errors import GridMismatchError, ResolutionTooCoarseError

logger = logging.getLogger(__name__)

UNIT_TOLERANCE = 1e-12
STEP_TOLERANCE = 0.4
UNIQUENESS_TOLERANCE = 1e-9

ComplexGrid = npt.NDArray[np.complex128]
RealGrid = npt.NDArray[np.float64]


def _wrap(turns: RealGrid) -> RealGrid:
    """Representative of each value mod 1 in [-1/2, 1/2]."""
    return turns - np.round(turns)


def grid_angles(shape: Sequence[int]) -> RealGrid:
    """Grid points i/N in turns, shape (*shape, m)."""
    axes = [np.arange(n, dtype=np.float64) / n for n in shape]
    return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)


@dataclass(frozen=True)
class SampledTorusMap:
    """Samples of a map T^m → T on the uniform grid, normalized so f(origin) = 1."""

    values: ComplexGrid

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.complex128)
        if values.ndim < 1 or min(values.shape) < 2:
            raise ValueError(f"need at least two samples per axis, got shape {values.shape}")
        deviation = float(np.max(np.abs(np.abs(values) - 1.0)))
        if deviation > UNIT_TOLERANCE:
            raise ValueError(f"samples are not unit complex numbers (deviation {deviation:.3g})")
        origin = values[(0,) * values.ndim]
        object.__setattr__(self, "values", values / origin)

    @classmethod
    def from_phases(cls, phases: RealGrid) -> SampledTorusMap:
        """Build from phases in turns."""
        return cls(np.exp(2j * np.pi * np.asarray(phases, dtype=np.float64)))

    @classmethod
    def from_function(
        cls, func: Callable[[RealGrid], ComplexGrid], shape: Sequence[int]
    ) -> SampledTorusMap:
        """Sample func (taking angles of shape (..., m) in turns) on the grid."""
        return cls(func(grid_angles(shape)))

    @classmethod
    def from_splitting(
        cls,
        character: Sequence[int],
        lift: Callable[[RealGrid], RealGrid] | None,
        resolution: int,
    ) -> SampledTorusMap:
        """Sample exp(2πi (k·x + S(x))) on the resolution^m grid.

        Example:
            >>> f = SampledTorusMap.from_splitting([2], None, 64)
            >>> vk_decompose(f).character
            (2,)
        """
        k = np.asarray(character, dtype=np.float64)
        theta = grid_angles([resolution] * len(character))
        phase = theta @ k
        if lift is not None:
            phase = phase + lift(theta)
        return cls.from_phases(phase)

    @property
    def m(self) -> int:
        return self.values.ndim

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(self.values.shape)

    def phases(self) -> RealGrid:
        """Wrapped phases in turns, in [-1/2, 1/2]."""
        return np.angle(self.values) / (2 * np.pi)

    def __mul__(self, other: SampledTorusMap) -> SampledTorusMap:
        if self.shape != other.shape:
            raise GridMismatchError(self.shape, other.shape)
        return SampledTorusMap(self.values * other.values)

    def conjugate(self) -> SampledTorusMap:
        return SampledTorusMap(np.conj(self.values))

    def translate(self, offset: Sequence[int]) -> SampledTorusMap:
        """x ↦ f(x + a) / f(a) for the grid point a with index offset."""
        rolled = np.roll(self.values, shift=[-o for o in offset], axis=tuple(range(self.m)))
        return SampledTorusMap(rolled)

    def compose(self, matrix: Sequence[Sequence[int]]) -> SampledTorusMap:
        """f ∘ A for the toral endomorphism x ↦ A·x, A an integer m×m matrix."""
        index_map = endomorphism_indices(matrix, self.shape)
        return SampledTorusMap(self.values[index_map])


def endomorphism_indices(
    matrix: Sequence[Sequence[int]], shape: tuple[int, ...]
) -> tuple[npt.NDArray[np.int64], ...]:
    """Index arrays sending grid index i to (A·i) mod N.

    Raises:
        ValueError: If A is not m×m or the axes have different resolutions
    """
    a = np.asarray(matrix, dtype=np.int64)
    m = len(shape)
    if a.shape != (m, m):
        raise ValueError(f"endomorphism must be {m}x{m}, got {a.shape}")
    if len(set(shape)) != 1:
        raise ValueError("endomorphisms need the same resolution on every axis")
    n = shape[0]
    indices = np.stack(np.meshgrid(*[np.arange(s) for s in shape], indexing="ij"), axis=-1)
    image = (indices @ a.T) % n
    return tuple(image[..., j] for j in range(m))


@dataclass(frozen=True)
class VKDecomposition:
    """f = exp(2πi k·x) · exp(2πi S(x)) on the grid."""

    character: tuple[int, ...]
    lift: RealGrid
    residual: float
    axis_order: tuple[int, ...]


def _check_steps(phases: RealGrid) -> None:
    largest = 0.0
    for axis in range(phases.ndim):
        rolled = np.roll(phases, -1, axis=axis)
        largest = max(largest, float(np.max(np.abs(_wrap(rolled - phases)))))
    if largest > STEP_TOLERANCE:
        raise ResolutionTooCoarseError(largest, STEP_TOLERANCE)


def _unwrap(phases: RealGrid, order: Sequence[int]) -> RealGrid:
    """Lift phases to real values along paths that visit the axes in the given order."""
    m = phases.ndim
    current = np.zeros((1,) * m, dtype=np.float64)
    done: set[int] = set()
    for axis in order:
        done.add(axis)
        index = tuple(slice(None) if j in done else slice(0, 1) for j in range(m))
        sub = phases[index]
        steps = _wrap(np.diff(sub, axis=axis))
        zero = np.zeros_like(np.take(sub, [0], axis=axis))
        cumulative = np.concatenate([zero, np.cumsum(steps, axis=axis)], axis=axis)
        current = current + cumulative
    return current


def vk_decompose(f: SampledTorusMap, axis_order: Sequence[int] | None = None) -> VKDecomposition:
    """Split a sampled map into its character and continuous lift.

    Args:
        f: Sampled map with f(origin) = 1
        axis_order: Sweep order of the unwrapping paths; row-major when omitted

    Returns:
        VKDecomposition with lift(origin) = 0

    Raises:
        ResolutionTooCoarseError: If neighbouring samples differ by more than 0.4 turn
    """
    order = tuple(axis_order) if axis_order is not None else tuple(range(f.m))
    if sorted(order) != list(range(f.m)):
        raise ValueError(f"axis order {order} is not a permutation of {f.m} axes")
    phases = f.phases()
    _check_steps(phases)
    unwrapped = _unwrap(phases, order)

    character: list[int] = []
    for axis in range(f.m):
        line = tuple(slice(None) if j == axis else 0 for j in range(f.m))
        winding = float(unwrapped[line][-1]) + float(_wrap(phases[line][0] - phases[line][-1]))
        character.append(int(round(winding)))

    theta = grid_angles(f.shape)
    linear = theta @ np.asarray(character, dtype=np.float64)
    lift = unwrapped - linear
    reconstruction = np.exp(2j * np.pi * (linear + lift))
    residual = float(np.max(np.abs(reconstruction - f.values)))
    logger.debug("Decomposed %s map: character %s, residual %.3g", f.shape, character, residual)
    return VKDecomposition(
        character=tuple(character), lift=lift, residual=residual, axis_order=order
    )


def vk_verify_uniqueness(f: SampledTorusMap) -> tuple[bool, float]:
    """Compare row-major and reversed-axis unwrapping paths.

    Returns:
        (characters equal and lifts within 1e-9, largest lift discrepancy)
    """
    forward = vk_decompose(f)
    backward = vk_decompose(f, tuple(reversed(range(f.m))))
    discrepancy = float(np.max(np.abs(forward.lift - backward.lift)))
    unique = forward.character == backward.character and discrepancy < UNIQUENESS_TOLERANCE
    return unique, discrepancy


def vk_homomorphism_check(
    f1: SampledTorusMap,
    f2: SampledTorusMap,
    endomorphism: Sequence[Sequence[int]] | None = None,
) -> float:
    """Largest deviation from additivity and equivariance of the lift.

    Measures max |S(f1·f2) − S(f1) − S(f2)| and, when an integer matrix A is given,
    max |S(f1∘A) − S(f1)∘A|.

    Raises:
        GridMismatchError: If the maps live on different grids
    """
    if f1.shape != f2.shape:
        raise GridMismatchError(f1.shape, f2.shape)
    s1 = vk_decompose(f1).lift
    s2 = vk_decompose(f2).lift
    product_error = float(np.max(np.abs(vk_decompose(f1 * f2).lift - s1 - s2)))
    if endomorphism is None:
        return product_error
    composed = vk_decompose(f1.compose(endomorphism)).lift
    pulled_back = s1[endomorphism_indices(endomorphism, f1.shape)]
    return max(product_error, float(np.max(np.abs(composed - pulled_back))))


__all__ = [
    "SampledTorusMap",
    "VKDecomposition",
    "endomorphism_indices",
    "grid_angles",
    "vk_decompose",
    "vk_homomorphism_check",
    "vk_verify_uniqueness",
]

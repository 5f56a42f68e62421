"""Numerical evidence for the analytic ingredients of the rigidity argument."""

from zd_rigidity.analytic.storage import load_sampled_map, save_sampled_map
from zd_rigidity.analytic.vankampen import (
    SampledTorusMap,
    VKDecomposition,
    endomorphism_indices,
    grid_angles,
    vk_decompose,
    vk_homomorphism_check,
    vk_verify_uniqueness,
)
from zd_rigidity.analytic.zero_divisor import (
    convolution_kernel,
    convolution_matrix,
    fourier_identity_residual,
    variety_measure_check,
    zero_divisor_check,
)

__all__ = [
    "SampledTorusMap",
    "VKDecomposition",
    "convolution_kernel",
    "convolution_matrix",
    "endomorphism_indices",
    "fourier_identity_residual",
    "grid_angles",
    "load_sampled_map",
    "save_sampled_map",
    "variety_measure_check",
    "vk_decompose",
    "vk_homomorphism_check",
    "vk_verify_uniqueness",
    "zero_divisor_check",
]

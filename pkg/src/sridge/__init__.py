"""Spherical harmonic, Radon, wavelet and ridgelet transforms on the sphere."""

from .core import EulerAngles, HarmonicCoeffs, QuadratureRule, gauss_legendre, lm_index, wigner_d_slice
from .errors import DomainError, FormatError, InadmissibleError, PreconditionError, SridgeError
from .radon import (
    PROJECT,
    STRICT,
    RadonEigenvalues,
    funk_radon_kernel_coeffs,
    odd_parity_fraction,
    radon_eigenvalues,
    radon_forward,
    radon_inverse,
)
from .ridgelet import RidgeletBank, build_ridgelets, ridgelet_analysis, ridgelet_map, ridgelet_synthesis
from .sht import SphereSignal, axiconv, rotate_coeffs, sht_forward, sht_inverse
from .wavelet import (
    KernelBank,
    MultiScaleCoeffs,
    WaveletParams,
    admissibility,
    build_kernels,
    wavelet_analysis,
    wavelet_synthesis,
)

__version__ = "0.1.0"

__all__ = [
    "EulerAngles",
    "HarmonicCoeffs",
    "QuadratureRule",
    "gauss_legendre",
    "lm_index",
    "wigner_d_slice",
    "SridgeError",
    "DomainError",
    "FormatError",
    "PreconditionError",
    "InadmissibleError",
    "STRICT",
    "PROJECT",
    "RadonEigenvalues",
    "funk_radon_kernel_coeffs",
    "odd_parity_fraction",
    "radon_eigenvalues",
    "radon_forward",
    "radon_inverse",
    "RidgeletBank",
    "build_ridgelets",
    "ridgelet_analysis",
    "ridgelet_map",
    "ridgelet_synthesis",
    "SphereSignal",
    "axiconv",
    "rotate_coeffs",
    "sht_forward",
    "sht_inverse",
    "KernelBank",
    "MultiScaleCoeffs",
    "WaveletParams",
    "admissibility",
    "build_kernels",
    "wavelet_analysis",
    "wavelet_synthesis",
]

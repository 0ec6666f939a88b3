"""Spherical ridgelets: the Radon transform followed by the scale-discretised wavelet transform.

A ridgelet is the convolution of the equatorial Radon kernel with an axisymmetric
wavelet, so its harmonic profile is ``lambda_l psi_l0^(j)``. It is constant along
great circles and wavelet-like across them. Analysis composes the two transforms;
synthesis inverts them in reverse order and is exact for signals supported on
``l + s`` even.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import HarmonicCoeffs, _frozen, check_spin, lm_arrays
from .errors import DomainError
from .radon import STRICT, RadonEigenvalues, radon_eigenvalues, radon_forward, radon_inverse
from .sht import SphereSignal, sht_inverse
from .wavelet import (
    KernelBank,
    MultiScaleCoeffs,
    WaveletParams,
    build_kernels,
    wavelet_analysis,
    wavelet_synthesis,
)

__all__ = [
    "RidgeletBank",
    "build_ridgelets",
    "ridgelet_map",
    "ridgelet_analysis",
    "ridgelet_synthesis",
]


@dataclass(frozen=True, eq=False)
class RidgeletBank:
    """Wavelet kernels, Radon eigenvalues and the resulting ridgelet profiles for one spin.

    ``scaling_profile`` and ``wavelet_profiles[i]`` (scale ``J0 + i``) hold
    ``sqrt(4pi/(2l+1)) xi_l0 k_l0 = lambda_l k_l0`` for the corresponding wavelet kernel ``k``.
    """

    bank: KernelBank
    radon: RadonEigenvalues
    scaling_profile: np.ndarray
    wavelet_profiles: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "scaling_profile", _frozen(self.scaling_profile))
        object.__setattr__(self, "wavelet_profiles", _frozen(self.wavelet_profiles))

    @property
    def params(self) -> WaveletParams:
        return self.bank.params

    @property
    def L(self) -> int:
        return self.bank.L

    @property
    def s(self) -> int:
        return self.radon.s

    def profile(self, j: int) -> np.ndarray:
        if j not in self.params.scales:
            raise DomainError(f"scale {j} outside [{self.params.J0}, {self.params.J}]")
        return self.wavelet_profiles[j - self.params.J0]

    def profiles(self) -> np.ndarray:
        return np.vstack([self.scaling_profile[None, :], self.wavelet_profiles])


def build_ridgelets(params: WaveletParams, s: int = 0) -> RidgeletBank:
    s = check_spin(s, params.L)
    bank = build_kernels(params)
    ev = radon_eigenvalues(params.L, s)
    return RidgeletBank(
        bank,
        ev,
        ev.values * bank.scaling,
        ev.values[None, :] * bank.wavelets,
    )


def ridgelet_map(rb: RidgeletBank, j: int | None = None) -> SphereSignal:
    """Ridgelet at scale ``j`` (the ridgelet scaling function when ``j`` is None), centred on the north pole."""
    profile = rb.scaling_profile if j is None else rb.profile(j)
    L = rb.L
    el, m = lm_arrays(L)
    data = np.zeros(L * L, dtype=np.complex128)
    data[m == 0] = profile
    return sht_inverse(HarmonicCoeffs(L, 0, data))


def ridgelet_analysis(f: HarmonicCoeffs, rb: RidgeletBank) -> MultiScaleCoeffs:
    """Ridgelet coefficients of ``f``: wavelet analysis of its Radon transform."""
    if f.L != rb.L:
        raise DomainError(f"band-limit mismatch: signal L={f.L}, ridgelets L={rb.L}")
    if f.s != rb.s:
        raise DomainError(f"spin mismatch: signal s={f.s}, ridgelets built for s={rb.s}")
    return wavelet_analysis(radon_forward(f), rb.bank)


def ridgelet_synthesis(
    g: MultiScaleCoeffs, rb: RidgeletBank, s: int | None = None, policy: str = STRICT
) -> HarmonicCoeffs:
    """Invert :func:`ridgelet_analysis`: wavelet synthesis at spin 0, then the inverse Radon transform.

    ``s`` defaults to the spin the bank was built for. ``policy`` is passed to
    :func:`sridge.radon.radon_inverse`.
    """
    s = rb.s if s is None else s
    return radon_inverse(wavelet_synthesis(g, rb.bank, 0), s, policy)

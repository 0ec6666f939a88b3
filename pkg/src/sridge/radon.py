"""Spherical (Funk-)Radon transform as an axisymmetric convolution with the equatorial Dirac kernel.

The transform is diagonal in harmonic space with eigenvalues

    lambda_l = 2 pi (-1)^s sqrt((l-s)!/(l+s)!) P_l^s(0),

which vanish for ``l + s`` odd. Signals supported on ``l + s`` even are recovered
exactly by dividing by the eigenvalues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from .core import HarmonicCoeffs, _frozen, check_band_limit, check_spin, legendre_origin, lm_arrays
from .errors import DomainError, InadmissibleError

__all__ = [
    "RadonEigenvalues",
    "STRICT",
    "PROJECT",
    "ODD_ENERGY_TOL",
    "funk_radon_kernel_coeffs",
    "radon_eigenvalues",
    "radon_forward",
    "radon_inverse",
    "odd_parity_fraction",
]

STRICT = "strict"
PROJECT = "project"
# relative squared-norm threshold separating rounding noise from odd-parity content
ODD_ENERGY_TOL = 1e-20


@dataclass(frozen=True, eq=False)
class RadonEigenvalues:
    """Eigenvalues ``lambda[l]`` of the Radon transform on spin-``s`` harmonics of degree ``l``."""

    L: int
    s: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(np.asarray(self.values, dtype=float)))

    @property
    def admissible(self) -> np.ndarray:
        """Mask of degrees with ``l + s`` even (and ``l >= |s|``)."""
        el = np.arange(self.L)
        return ((el + self.s) % 2 == 0) & (el >= abs(self.s))

    def __getitem__(self, el):
        return self.values[el]


def _d_equator(el: int, s: int) -> float:
    """``d^l_{s,0}(pi/2) = sqrt((l-s)!/(l+s)!) P_l^s(0)``, extended to negative ``s``.

    For ``s < 0`` the identity ``d^l_{-k,0} = (-1)^k d^l_{k,0}`` is used, so only
    ``P_l^{|s|}(0)`` is ever evaluated.
    """
    k = abs(s)
    if el < k or (el + k) % 2:
        return 0.0
    p = legendre_origin(el, k)
    ratio = math.exp(0.5 * (gammaln(el - k + 1) - gammaln(el + k + 1)))
    value = ratio * p
    return -value if (s < 0 and k % 2) else value


@lru_cache(maxsize=64)
def _eigenvalues(L: int, s: int) -> np.ndarray:
    sign = -1.0 if s % 2 else 1.0
    vals = np.array([2 * math.pi * sign * _d_equator(el, s) for el in range(L)])
    vals.flags.writeable = False
    return vals


def radon_eigenvalues(L: int, s: int = 0) -> RadonEigenvalues:
    L = check_band_limit(L)
    s = check_spin(s, L)
    return RadonEigenvalues(L, s, _eigenvalues(L, s))


def funk_radon_kernel_coeffs(L: int, s: int = 0) -> HarmonicCoeffs:
    """Spin-``s`` harmonic coefficients of the kernel ``delta(theta - pi/2)``.

    ``xi_l0 = (-1)^s sqrt(pi (2l+1)) sqrt((l-s)!/(l+s)!) P_l^s(0)``, zero for ``m != 0``
    and for ``l + s`` odd.
    """
    ev = radon_eigenvalues(L, s)
    el, m = lm_arrays(L)
    data = np.zeros(L * L, dtype=np.complex128)
    # xi_l0 = sqrt((2l+1)/4pi) lambda_l
    data[m == 0] = np.sqrt((2 * np.arange(L) + 1) / (4 * np.pi)) * ev.values
    return HarmonicCoeffs(L, s, data)


def radon_forward(f: HarmonicCoeffs) -> HarmonicCoeffs:
    """Radon transform in harmonic space, ``(Sf)_lm = lambda_l f_lm``; the result is spin 0."""
    ev = _eigenvalues(f.L, f.s)
    el, _ = lm_arrays(f.L)
    return HarmonicCoeffs(f.L, 0, f.data * ev[el])


def odd_parity_fraction(data: np.ndarray, L: int, s: int) -> float:
    """Share of ``sum |g_lm|^2`` carried by degrees with ``l + s`` odd (or ``l < |s|``)."""
    el, _ = lm_arrays(L)
    power = np.abs(data) ** 2
    total = power.sum()
    if total == 0:
        return 0.0
    odd = ((el + s) % 2 == 1) | (el < abs(s))
    return float(power[odd].sum() / total)


def radon_inverse(g: HarmonicCoeffs, s: int = 0, policy: str = STRICT) -> HarmonicCoeffs:
    """Recover the spin-``s`` signal whose Radon transform is ``g``.

    Coefficients with ``l + s`` even are divided by the eigenvalues; the others cannot be
    recovered and are set to zero.

    Args:
        g: spin-0 coefficients, typically the output of :func:`radon_forward`.
        s: spin of the signal to recover.
        policy: ``"strict"`` raises when the unrecoverable part of ``g`` holds more than
            ``ODD_ENERGY_TOL`` of its squared norm; ``"project"`` discards it silently.

    Raises:
        InadmissibleError: under ``"strict"``, for input with odd-parity energy.
    """
    if policy not in (STRICT, PROJECT):
        raise DomainError(f"unknown parity policy {policy!r}; expected 'strict' or 'project'")
    if g.s != 0:
        raise DomainError(f"Radon-domain coefficients must be spin 0, got s={g.s}")
    s = check_spin(s, g.L)
    if policy == STRICT:
        frac = odd_parity_fraction(g.data, g.L, s)
        if frac > ODD_ENERGY_TOL:
            raise InadmissibleError(frac)
    ev = _eigenvalues(g.L, s)
    el, _ = lm_arrays(g.L)
    inv = np.zeros(g.L)
    nz = ev != 0
    inv[nz] = 1.0 / ev[nz]
    return HarmonicCoeffs(g.L, s, g.data * inv[el])

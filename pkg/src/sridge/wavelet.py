"""Axisymmetric scale-discretised wavelets on the sphere.

The harmonic line is tiled by a scaling function below ``alpha**J0`` and wavelets
``j = J0..J`` whose squared profiles telescope to one:

    k(l / alpha**J0) + sum_j [k(l / alpha**(j+1)) - k(l / alpha**j)] = k(l / alpha**(J+1)) = 1

for every ``l <= alpha**J``. Both analysis and synthesis are axisymmetric
convolutions, carried out in harmonic space; the wavelet coefficients are stored
as sampled spin-0 maps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .core import HarmonicCoeffs, _frozen, check_band_limit, check_spin, lm_arrays
from .errors import DomainError, FormatError
from .sht import SphereSignal, analyse_many, synthesize_many

__all__ = [
    "WaveletParams",
    "KernelBank",
    "MultiScaleCoeffs",
    "max_scale",
    "generating_k",
    "kappa",
    "build_kernels",
    "admissibility",
    "wavelet_analysis",
    "wavelet_synthesis",
]


def max_scale(L: int, alpha: float) -> int:
    """Smallest ``J`` with ``alpha**J >= L - 1``, i.e. ``ceil(log_alpha(L - 1))``."""
    J = 0
    while alpha**J < L - 1:
        J += 1
    return J


@dataclass(frozen=True)
class WaveletParams:
    L: int
    alpha: float = 2.0
    J0: int = 0
    J: int = field(init=False)

    def __post_init__(self):
        L = check_band_limit(self.L)
        alpha = float(self.alpha)
        if not alpha > 1.0:
            raise DomainError(f"dilation parameter must exceed 1, got {alpha}")
        if isinstance(self.J0, bool) or int(self.J0) != self.J0 or self.J0 < 0:
            raise DomainError(f"J0 must be a non-negative integer, got {self.J0!r}")
        J = max_scale(L, alpha)
        if self.J0 > J:
            raise DomainError(f"J0={self.J0} exceeds the maximum scale J={J} for L={L}, alpha={alpha}")
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "J0", int(self.J0))
        object.__setattr__(self, "J", J)

    @property
    def scales(self) -> range:
        return range(self.J0, self.J + 1)

    @property
    def n_scales(self) -> int:
        return self.J - self.J0 + 1


def _bump(t):
    """``exp(-1/(1-t^2))`` on (-1, 1), zero elsewhere."""
    if abs(t) >= 1.0:
        return 0.0
    return math.exp(-1.0 / (1.0 - t * t))


def _integrand(u, alpha):
    # s_alpha(u) = bump(2 alpha/(alpha-1) (u - 1/alpha) - 1), squared, over u
    x = 2.0 * alpha / (alpha - 1.0) * (u - 1.0 / alpha) - 1.0
    return _bump(x) ** 2 / u


@lru_cache(maxsize=None)
def _k_norm(alpha: float) -> float:
    val, _ = quad(_integrand, 1.0 / alpha, 1.0, args=(alpha,), epsabs=1e-14, epsrel=1e-13, limit=200)
    return val


@lru_cache(maxsize=100_000)
def _k_scalar(alpha: float, t: float) -> float:
    if t <= 1.0 / alpha:
        return 1.0
    if t >= 1.0:
        return 0.0
    val, _ = quad(_integrand, t, 1.0, args=(alpha,), epsabs=1e-14, epsrel=1e-13, limit=200)
    return min(1.0, max(0.0, val / _k_norm(alpha)))


def generating_k(alpha: float, t):
    """Smooth step: 1 for ``t <= 1/alpha``, 0 for ``t >= 1``, monotone in between.

    Accepts a scalar or an array of ``t``.
    """
    if not alpha > 1.0:
        raise DomainError(f"dilation parameter must exceed 1, got {alpha}")
    alpha = float(alpha)
    if np.ndim(t) == 0:
        return _k_scalar(alpha, float(t))
    t = np.asarray(t, dtype=float)
    return np.array([_k_scalar(alpha, float(v)) for v in t.ravel()]).reshape(t.shape)


def kappa(alpha: float, t):
    """Wavelet generating function ``sqrt(k(t/alpha) - k(t))``: support (1/alpha, alpha), peak 1 at t = 1."""
    t = np.asarray(t, dtype=float)
    diff = generating_k(alpha, t / alpha) - generating_k(alpha, t)
    return np.sqrt(np.maximum(diff, 0.0))


@dataclass(frozen=True, eq=False)
class KernelBank:
    """Harmonic ``m = 0`` profiles of the scaling function and of each wavelet.

    ``wavelets[i]`` belongs to scale ``params.J0 + i``.
    """

    params: WaveletParams
    scaling: np.ndarray
    wavelets: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "scaling", _frozen(self.scaling))
        object.__setattr__(self, "wavelets", _frozen(self.wavelets))

    @property
    def L(self) -> int:
        return self.params.L

    def wavelet(self, j: int) -> np.ndarray:
        if j not in self.params.scales:
            raise DomainError(f"scale {j} outside [{self.params.J0}, {self.params.J}]")
        return self.wavelets[j - self.params.J0]

    def profiles(self) -> np.ndarray:
        """Scaling profile stacked on top of the wavelet profiles, shape (1 + n_scales, L)."""
        return np.vstack([self.scaling[None, :], self.wavelets])


def build_kernels(params: WaveletParams) -> KernelBank:
    L, alpha = params.L, params.alpha
    el = np.arange(L, dtype=float)
    norm = np.sqrt((2 * el + 1) / (4 * np.pi))
    # k(l / alpha**j) for j = J0 .. J+1; adjacent rows difference into squared wavelets,
    # so the tiling telescopes with no rounding drift
    steps = {j: generating_k(alpha, el / alpha**j) for j in range(params.J0, params.J + 2)}
    scaling = norm * np.sqrt(steps[params.J0])
    wavelets = np.array(
        [norm * np.sqrt(np.maximum(steps[j + 1] - steps[j], 0.0)) for j in params.scales]
    )
    return KernelBank(params, scaling, wavelets)


def admissibility(bank: KernelBank) -> np.ndarray:
    """Per-degree ``4pi/(2l+1) (|Phi_l0|^2 + sum_j |psi_l0^(j)|^2)``; identically 1 for a valid bank."""
    el = np.arange(bank.L)
    return 4 * np.pi / (2 * el + 1) * (bank.scaling**2 + np.sum(bank.wavelets**2, axis=0))


@dataclass(frozen=True, eq=False)
class MultiScaleCoeffs:
    """Scaling band plus one spin-0 band per scale ``J0..J``, all sampled on the same grid."""

    scaling: SphereSignal
    bands: tuple
    params: WaveletParams

    def __post_init__(self):
        bands = tuple(self.bands)
        if len(bands) != self.params.n_scales:
            raise FormatError(f"expected {self.params.n_scales} bands, got {len(bands)}")
        for b in (self.scaling, *bands):
            if b.L != self.params.L:
                raise FormatError(f"band with L={b.L} in a transform with L={self.params.L}")
            if b.s != 0:
                raise FormatError("wavelet bands are spin 0")
        object.__setattr__(self, "bands", bands)

    @property
    def L(self) -> int:
        return self.params.L

    def band(self, j: int) -> SphereSignal:
        if j not in self.params.scales:
            raise DomainError(f"scale {j} outside [{self.params.J0}, {self.params.J}]")
        return self.bands[j - self.params.J0]

    def all_bands(self) -> list[SphereSignal]:
        return [self.scaling, *self.bands]

    def stacked(self) -> np.ndarray:
        """Samples of the scaling band and every wavelet band, shape (1 + n_scales, L, 2L-1)."""
        return np.stack([b.samples for b in self.all_bands()])

    @classmethod
    def from_stacked(cls, maps: np.ndarray, params: WaveletParams) -> "MultiScaleCoeffs":
        signals = [SphereSignal(params.L, 0, m) for m in maps]
        return cls(signals[0], tuple(signals[1:]), params)


def analyse_profiles(f: HarmonicCoeffs, profiles: np.ndarray, params: WaveletParams) -> MultiScaleCoeffs:
    """Convolve ``f`` with each axisymmetric profile row and sample the spin-0 results."""
    el, _ = lm_arrays(f.L)
    scale = np.sqrt(4 * np.pi / (2 * np.arange(f.L) + 1))
    harmonic = f.data[None, :] * (scale[None, :] * np.conj(profiles))[:, el]
    return MultiScaleCoeffs.from_stacked(synthesize_many(harmonic, f.L, 0), params)


def synthesise_profiles(w: MultiScaleCoeffs, profiles: np.ndarray, spin: int) -> np.ndarray:
    L = w.L
    harmonic = analyse_many(w.stacked(), L, 0)
    el, _ = lm_arrays(L)
    scale = np.sqrt(4 * np.pi / (2 * np.arange(L) + 1))
    data = np.sum(harmonic * (scale[None, :] * profiles)[:, el], axis=0)
    data[: spin * spin] = 0.0
    return data


def wavelet_analysis(f: HarmonicCoeffs, bank: KernelBank) -> MultiScaleCoeffs:
    """Scaling and wavelet coefficients of ``f`` (any spin) as spin-0 maps."""
    if f.L != bank.L:
        raise DomainError(f"band-limit mismatch: signal L={f.L}, kernels L={bank.L}")
    return analyse_profiles(f, bank.profiles(), bank.params)


def wavelet_synthesis(w: MultiScaleCoeffs, bank: KernelBank, target_spin: int = 0) -> HarmonicCoeffs:
    """Exact reconstruction from scaling and wavelet coefficients.

    ``f_lm = sqrt(4pi/(2l+1)) [Phi_l0 W^Phi_lm + sum_j psi_l0^(j) W^j_lm]``, tagged with
    ``target_spin``; coefficients below ``|target_spin|`` are zero.
    """
    if w.L != bank.L:
        raise DomainError(f"band-limit mismatch: coefficients L={w.L}, kernels L={bank.L}")
    if w.params.n_scales != bank.params.n_scales:
        raise DomainError("coefficient and kernel scale ranges differ")
    target_spin = check_spin(target_spin, bank.L)
    return HarmonicCoeffs(bank.L, target_spin, synthesise_profiles(w, bank.profiles(), target_spin))

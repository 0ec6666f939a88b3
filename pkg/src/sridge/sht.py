"""Exact spin spherical harmonic transforms on a Gauss-Legendre x equiangular grid.

A signal band-limited at ``L`` is sampled on ``L`` rings at the Gauss-Legendre
colatitudes and ``2L-1`` equispaced longitudes ``phi_p = 2 pi p / (2L-1)``. Both
directions of the transform are exact up to rounding: the longitude sum is an FFT
that cannot alias orders ``|m| < L``, and the ring sum is a Gauss rule that
integrates the degree ``<= 2L-2`` polynomials arising at fixed order.

The ring kernels ``(-1)^s sqrt((2l+1)/4pi) d^l_{m,-s}(theta_t)`` are generated on the
fly by the degree recursion of :func:`sridge.core.iter_wigner_d`, only for the
northern half of the rings; the southern half follows from
``d^l_{mn}(pi - theta) = (-1)^(l+n) d^l_{-m,n}(theta)``. Memory stays ``O(L^2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import (
    EulerAngles,
    HarmonicCoeffs,
    QuadratureRule,
    _frozen,
    check_band_limit,
    check_spin,
    gauss_legendre,
    iter_wigner_d,
    lm_arrays,
    wigner_d_slice,
)
from .errors import DomainError, FormatError, PreconditionError

__all__ = [
    "SphereSignal",
    "grid",
    "quadrature",
    "sht_forward",
    "sht_inverse",
    "synthesize_many",
    "analyse_many",
    "rotate_coeffs",
    "axiconv",
    "dirac_profile",
]

# degrees of the recursion handed to one batched matmul
_CHUNK = 16


@dataclass(frozen=True, eq=False)
class SphereSignal:
    """Samples of a spin-``s`` signal on the ``L x (2L-1)`` grid, ring-major."""

    L: int
    s: int
    samples: np.ndarray

    def __post_init__(self):
        L = check_band_limit(self.L)
        s = check_spin(self.s, L)
        samples = np.asarray(self.samples)
        if samples.shape != (L, 2 * L - 1):
            raise FormatError(
                f"expected samples of shape {(L, 2 * L - 1)} for L={L}, got {samples.shape}"
            )
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "samples", _frozen(samples.astype(np.complex128)))

    @property
    def theta(self) -> np.ndarray:
        return grid(self.L)[0]

    @property
    def phi(self) -> np.ndarray:
        return grid(self.L)[1]

    def norm2(self) -> float:
        """Quadrature estimate of the squared L2 norm (exact for band-limited |f|^2)."""
        w = quadrature(self.L).weights
        dphi = 2 * math.pi / (2 * self.L - 1)
        return float(np.sum(w[:, None] * np.abs(self.samples) ** 2) * dphi)

    def __repr__(self):
        return f"SphereSignal(L={self.L}, s={self.s})"


@lru_cache(maxsize=32)
def quadrature(L: int) -> QuadratureRule:
    return gauss_legendre(L)


def grid(L: int) -> tuple[np.ndarray, np.ndarray]:
    """Colatitudes of the rings and longitudes of the samples on each ring."""
    L = check_band_limit(L)
    return np.array(quadrature(L).nodes), 2 * np.pi * np.arange(2 * L - 1) / (2 * L - 1)


def _degree_norm(L, s):
    el = np.arange(L)
    return (-1.0) ** s * np.sqrt((2 * el + 1) / (4 * np.pi))


def _kernel_chunks(L, s, theta):
    """Yield ``(start, K)`` with ``K[i, m + L - 1, t] = d^(start+i)_{m,-s}(theta_t)``."""
    orders = np.arange(-(L - 1), L)
    M, T = orders.size, theta.size
    buf = np.empty((min(_CHUNK, L), M, T))
    i = start = 0
    for el, d in iter_wigner_d(L, theta[:, None], orders[None, :], -s):
        buf[i] = d.T
        i += 1
        if i == buf.shape[0] or el == L - 1:
            yield start, buf[:i]
            start, i = el + 1, 0


def _to_grid_layout(data, L):
    """(B, L^2) flat coefficients -> (B, L, 2L-1) array indexed [b, el, m + L - 1]."""
    el, m = lm_arrays(L)
    out = np.zeros((data.shape[0], L, 2 * L - 1), dtype=np.complex128)
    out[:, el, m + L - 1] = data
    return out


def _from_grid_layout(arr, L):
    el, m = lm_arrays(L)
    return arr[:, el, m + L - 1]


def _real_channels(z):
    """Complex (..., B) -> real (..., 2B) with real parts first."""
    return np.concatenate([z.real, z.imag], axis=-1)


def _complex_channels(x):
    B = x.shape[-1] // 2
    return x[..., :B] + 1j * x[..., B:]


def synthesize_many(data: np.ndarray, L: int, s: int = 0) -> np.ndarray:
    """Inverse transform of a stack of flat coefficient vectors, shape (B, L^2) -> (B, L, 2L-1)."""
    L = check_band_limit(L)
    s = check_spin(s, L)
    data = np.atleast_2d(np.asarray(data, dtype=np.complex128))
    B = data.shape[0]
    M = 2 * L - 1
    theta = quadrature(L).nodes
    n_north, n_south = (L + 1) // 2, L // 2

    coeffs = _to_grid_layout(data, L) * _degree_norm(L, s)[None, :, None]
    # southern rings reuse the northern kernels with m reversed and a (-1)^(l+s) sign
    parity = (-1.0) ** (np.arange(L) + s)
    mirrored = coeffs[:, :, ::-1] * parity[None, :, None]
    # (M, L, channels) so that each order is one matmul operand
    chans = _real_channels(np.concatenate([coeffs, mirrored], axis=0).transpose(2, 1, 0))

    acc = np.zeros((M, n_north, chans.shape[-1]))
    for start, K in _kernel_chunks(L, s, theta[:n_north]):
        k = K.shape[0]
        acc += np.matmul(K.transpose(1, 2, 0), chans[:, start : start + k, :])
    acc = _complex_channels(acc)  # (M, n_north, 2B)

    rings = np.empty((B, L, M), dtype=np.complex128)
    rings[:, :n_north, :] = acc[:, :, :B].transpose(2, 1, 0)
    south = acc[::-1, :n_south, B:].transpose(2, 1, 0)  # undo the order reversal
    rings[:, L - 1 : L - 1 - n_south : -1, :] = south

    # order m -> FFT bin m mod (2L-1)
    bins = np.empty_like(rings)
    bins[..., : L] = rings[..., L - 1 :]
    bins[..., L:] = rings[..., : L - 1]
    return np.fft.ifft(bins, axis=-1) * M


def analyse_many(maps: np.ndarray, L: int, s: int = 0) -> np.ndarray:
    """Forward transform of a stack of sampled signals, shape (B, L, 2L-1) -> (B, L^2)."""
    L = check_band_limit(L)
    s = check_spin(s, L)
    maps = np.asarray(maps, dtype=np.complex128)
    if maps.ndim == 2:
        maps = maps[None]
    if maps.shape[1:] != (L, 2 * L - 1):
        raise FormatError(f"expected maps of shape (*, {L}, {2 * L - 1}), got {maps.shape}")
    B = maps.shape[0]
    M = 2 * L - 1
    rule = quadrature(L)
    theta, w = rule.nodes, rule.weights
    n_north, n_south = (L + 1) // 2, L // 2

    spec = np.fft.fft(maps, axis=-1) * (2 * np.pi / M)
    per_order = np.empty_like(spec)
    per_order[..., L - 1 :] = spec[..., :L]
    per_order[..., : L - 1] = spec[..., L:]
    per_order *= w[None, :, None]

    north = per_order[:, :n_north, :]
    south = np.zeros_like(north)
    south[:, :n_south, :] = per_order[:, L - 1 : L - 1 - n_south : -1, ::-1]
    chans = _real_channels(np.concatenate([north, south], axis=0).transpose(2, 1, 0))

    acc = np.empty((M, L, chans.shape[-1]))
    for start, K in _kernel_chunks(L, s, theta[:n_north]):
        k = K.shape[0]
        acc[:, start : start + k, :] = np.matmul(K.transpose(1, 0, 2), chans)
    acc = _complex_channels(acc)  # (M, L, 2B)

    parity = (-1.0) ** (np.arange(L) + s)
    total = acc[:, :, :B] + acc[::-1, :, B:] * parity[None, :, None]
    total = total.transpose(2, 1, 0) * _degree_norm(L, s)[None, :, None]
    out = _from_grid_layout(total, L)
    out[:, : s * s] = 0.0
    return out


def sht_forward(f: SphereSignal) -> HarmonicCoeffs:
    """Harmonic coefficients ``<f, sY_lm>`` of a band-limited sampled signal."""
    if not isinstance(f, SphereSignal):
        raise FormatError("sht_forward expects a SphereSignal")
    return HarmonicCoeffs(f.L, f.s, analyse_many(f.samples, f.L, f.s)[0])


def sht_inverse(c: HarmonicCoeffs) -> SphereSignal:
    """Evaluate ``sum_lm c_lm sY_lm`` on the sampling grid."""
    if not isinstance(c, HarmonicCoeffs):
        raise FormatError("sht_inverse expects HarmonicCoeffs")
    return SphereSignal(c.L, c.s, synthesize_many(c.data, c.L, c.s)[0])


def rotate_coeffs(c: HarmonicCoeffs, r: EulerAngles) -> HarmonicCoeffs:
    """Coefficients of the rotated signal: ``c'_ln = sum_m D^l_nm(alpha, beta, gamma) c_lm``.

    ``D^l_nm = exp(-i n alpha) d^l_nm(beta) exp(-i m gamma)``. Spin is unchanged.
    """
    if not isinstance(r, EulerAngles):
        r = EulerAngles(*r)
    L = c.L
    d = wigner_d_slice(L, r.beta)
    orders = np.arange(-(L - 1), L)
    left = np.exp(-1j * orders * r.alpha)
    right = np.exp(-1j * orders * r.gamma)
    out = np.zeros(L * L, dtype=np.complex128)
    for el in range(L):
        sl = slice(L - 1 - el, L + el)
        block = left[sl, None] * d[el, sl, sl] * right[None, sl]
        lo = el * el
        out[lo : lo + 2 * el + 1] = block @ c.data[lo : lo + 2 * el + 1]
    return c.with_data(out)


def axiconv(f: HarmonicCoeffs, h: HarmonicCoeffs) -> HarmonicCoeffs:
    """Convolution with an azimuthally symmetric kernel, in harmonic space.

    ``g_lm = sqrt(4pi/(2l+1)) f_lm conj(h_l0)``. The result is always spin 0.

    Raises:
        PreconditionError: ``h`` has non-zero coefficients with ``m != 0``.
        DomainError: spins or band-limits of ``f`` and ``h`` differ.
    """
    if f.s != h.s:
        raise DomainError(f"spin mismatch: signal s={f.s}, kernel s={h.s}")
    if f.L != h.L:
        raise DomainError(f"band-limit mismatch: signal L={f.L}, kernel L={h.L}")
    el, m = lm_arrays(f.L)
    if np.any(h.data[m != 0] != 0):
        raise PreconditionError("kernel is not axisymmetric (non-zero m != 0 coefficients)")
    profile = h.data[m == 0]
    return HarmonicCoeffs(f.L, 0, axiconv_profile(f.data, f.L, profile))


def axiconv_profile(data: np.ndarray, L: int, profile: np.ndarray) -> np.ndarray:
    """Flat-array form of :func:`axiconv` with the kernel given by its ``m = 0`` profile."""
    el, _ = lm_arrays(L)
    scale = np.sqrt(4 * np.pi / (2 * np.arange(L) + 1)) * np.conj(np.asarray(profile))
    return np.asarray(data) * scale[el]


def dirac_profile(L: int) -> np.ndarray:
    """``m = 0`` profile of the band-limited Dirac delta at the north pole.

    Convolving with it is the identity on band-limited signals.
    """
    return np.sqrt((2 * np.arange(L) + 1) / (4 * np.pi))

"""Shared types, index maps and special functions for harmonic analysis on the sphere.

Coefficients are stored in a flat vector of length ``L**2`` ordered by degree, with the
entry for degree ``el`` and order ``m`` at position ``el*(el+1) + m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from scipy.special import gammaln

from .errors import DomainError, FormatError

__all__ = [
    "HarmonicCoeffs",
    "EulerAngles",
    "QuadratureRule",
    "check_band_limit",
    "check_spin",
    "lm_index",
    "lm_arrays",
    "legendre_origin",
    "iter_wigner_d",
    "wigner_d_slice",
    "gauss_legendre",
]

# Mantissas of the d-function recursion are renormalised past this magnitude.
_RESCALE = 1e100
_LOG_RESCALE = math.log(_RESCALE)


def check_band_limit(L) -> int:
    if isinstance(L, bool) or int(L) != L or L < 1:
        raise DomainError(f"band-limit must be a positive integer, got {L!r}")
    return int(L)


def check_spin(s, L) -> int:
    if isinstance(s, bool) or int(s) != s:
        raise DomainError(f"spin must be an integer, got {s!r}")
    if abs(s) >= L:
        raise DomainError(f"|spin| must be below the band-limit: |{s}| >= {L}")
    return int(s)


def _frozen(a):
    a = np.array(a, copy=True)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class HarmonicCoeffs:
    """Spin spherical harmonic coefficients of a signal band-limited at ``L``.

    ``data[lm_index(el, m)]`` holds the coefficient of degree ``el`` and order ``m``.
    Entries with ``el < |s|`` are forced to zero, since no spin-``s`` harmonic exists there.
    The array is copied on construction and made read-only.
    """

    L: int
    s: int
    data: np.ndarray

    def __post_init__(self):
        L = check_band_limit(self.L)
        s = check_spin(self.s, L)
        data = np.asarray(self.data)
        if data.shape != (L * L,):
            raise FormatError(f"expected {L * L} coefficients for L={L}, got shape {data.shape}")
        data = data.astype(np.complex128, copy=True)
        data[: s * s] = 0.0
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "data", _frozen(data))

    @classmethod
    def zeros(cls, L: int, s: int = 0) -> "HarmonicCoeffs":
        return cls(L, s, np.zeros(L * L, dtype=np.complex128))

    @classmethod
    def delta(cls, L: int, el: int, m: int, s: int = 0, value: complex = 1.0) -> "HarmonicCoeffs":
        """Single non-zero coefficient ``value`` at ``(el, m)``."""
        data = np.zeros(L * L, dtype=np.complex128)
        if el >= L:
            raise DomainError(f"degree {el} outside band-limit {L}")
        data[lm_index(el, m)] = value
        return cls(L, s, data)

    def __getitem__(self, key) -> complex:
        el, m = key
        return self.data[lm_index(el, m)]

    def with_data(self, data, s: int | None = None) -> "HarmonicCoeffs":
        return HarmonicCoeffs(self.L, self.s if s is None else s, data)

    def degree_power(self) -> np.ndarray:
        """Sum over orders of ``|f_lm|^2`` for every degree."""
        el, _ = lm_arrays(self.L)
        return np.bincount(el, weights=np.abs(self.data) ** 2, minlength=self.L)

    def __repr__(self):
        return f"HarmonicCoeffs(L={self.L}, s={self.s})"


@dataclass(frozen=True)
class EulerAngles:
    """Rotation in the zyz convention: rotate by gamma about z, beta about y, alpha about z.

    ``alpha`` and ``gamma`` are wrapped into ``[0, 2pi)``; ``beta`` must lie in ``[0, pi]``.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        beta = float(self.beta)
        if not (0.0 <= beta <= math.pi):
            raise DomainError(f"beta must lie in [0, pi], got {beta}")
        object.__setattr__(self, "alpha", float(self.alpha) % (2 * math.pi))
        object.__setattr__(self, "gamma", float(self.gamma) % (2 * math.pi))
        object.__setattr__(self, "beta", beta)

    def inverse(self) -> "EulerAngles":
        # R(a, b, g)^-1 = R(-g, -b, -a) = R(pi - g, b, pi - a)
        return EulerAngles(math.pi - self.gamma, self.beta, math.pi - self.alpha)

    def matrix(self) -> np.ndarray:
        """3x3 rotation matrix ``Rz(alpha) @ Ry(beta) @ Rz(gamma)``."""

        def rz(a):
            c, s = math.cos(a), math.sin(a)
            return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])

        c, s = math.cos(self.beta), math.sin(self.beta)
        ry = np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])
        return rz(self.alpha) @ ry @ rz(self.gamma)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Gauss-Legendre rule in ``x = cos(theta)``; ``nodes`` are colatitudes, increasing."""

    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "nodes", _frozen(np.asarray(self.nodes, dtype=float)))
        object.__setattr__(self, "weights", _frozen(np.asarray(self.weights, dtype=float)))

    @property
    def x(self) -> np.ndarray:
        return np.cos(self.nodes)

    def __len__(self):
        return len(self.nodes)


def lm_index(el: int, m: int) -> int:
    """Flat position of coefficient ``(el, m)``."""
    if el < 0 or abs(m) > el:
        raise DomainError(f"invalid harmonic index (el={el}, m={m})")
    return el * (el + 1) + m


def lm_arrays(L: int) -> tuple[np.ndarray, np.ndarray]:
    """Degree and order of every flat index below ``L**2``."""
    idx = np.arange(L * L)
    el = np.floor(np.sqrt(idx)).astype(np.int64)
    return el, idx - el * (el + 1)


def legendre_origin(el: int, m: int) -> float:
    """Associated Legendre function ``P_el^m(0)`` with the Condon-Shortley phase.

    Closed form ``(-1)^((el+m)/2) (el+m)! / (2^el ((el+m)/2)! ((el-m)/2)!)`` for even
    ``el + m`` and zero otherwise. The factorials are combined in log space with the
    sign carried separately, so the value stays finite for degrees in the thousands.
    """
    if el < 0 or m < 0 or m > el:
        raise DomainError(f"legendre_origin needs 0 <= m <= el, got (el={el}, m={m})")
    if (el + m) % 2:
        return 0.0
    half_sum, half_diff = (el + m) // 2, (el - m) // 2
    log_mag = (
        gammaln(el + m + 1)
        - el * math.log(2.0)
        - gammaln(half_sum + 1)
        - gammaln(half_diff + 1)
    )
    sign = -1.0 if half_sum % 2 else 1.0
    return sign * math.exp(log_mag)


def _seed(beta, m, n):
    """Sign and log-magnitude of ``d^l0_{mn}(beta)`` at ``l0 = max(|m|, |n|)``.

    At the lowest degree the explicit Wigner sum has a single term.
    """
    am, an = np.abs(m), np.abs(n)
    l0 = np.maximum(am, an)
    by_m = am >= an
    # (power of cos(beta/2), power of sin(beta/2), binomial index, phase exponent)
    pc = np.where(by_m, np.where(m >= 0, l0 + n, l0 - n), np.where(n >= 0, l0 + m, l0 - m))
    ps = 2 * l0 - pc
    phase = np.where(
        by_m, np.where(m >= 0, l0 - n, 0), np.where(n >= 0, 0, l0 + m)
    )
    sign = np.where(phase % 2 == 0, 1.0, -1.0)
    with np.errstate(divide="ignore"):
        log_c = np.log(np.cos(0.5 * beta))
        log_s = np.log(np.sin(0.5 * beta))
    log_mag = 0.5 * (gammaln(2 * l0 + 1) - gammaln(pc + 1) - gammaln(ps + 1))
    # 0 * log(0) is taken as 0 (beta at the poles)
    log_mag = log_mag + pc * np.where(pc > 0, log_c, 0.0) + ps * np.where(ps > 0, log_s, 0.0)
    return l0, sign, log_mag


def iter_wigner_d(lmax: int, beta, m, n) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(el, d^el_{mn}(beta))`` for ``el = 0 .. lmax-1``.

    ``beta``, ``m`` and ``n`` broadcast against each other; entries with
    ``el < max(|m|, |n|)`` are zero. Values come from the upward three-term recursion
    in degree at fixed ``(m, n)``, seeded in log space at ``el = max(|m|, |n|)``; each
    entry keeps its own exponent so seeds far below the float range still recover
    once the recursion brings them back up.

    The yielded array is reused between iterations; copy it to keep it.
    """
    beta = np.asarray(beta, dtype=float)
    m = np.asarray(m, dtype=np.int64)
    n = np.asarray(n, dtype=np.int64)
    shape = np.broadcast_shapes(beta.shape, m.shape, n.shape)
    l0, sign, log_seed = _seed(beta, m, n)
    mf, nf = m.astype(float), n.astype(float)
    mm, nn, mn = mf * mf, nf * nf, mf * nf
    cb = np.cos(beta)

    prev = np.zeros(shape)
    cur = np.zeros(shape)
    factor = np.broadcast_to(np.exp(log_seed), shape).copy()
    log_factor = np.broadcast_to(log_seed, shape).copy()
    out = np.empty(shape)

    for el in range(lmax):
        if el > 0:
            lf = float(el)
            # d^el = a [(cos b - mn/(el(el-1))) d^(el-1) - c d^(el-2)]
            with np.errstate(divide="ignore", invalid="ignore"):
                a = lf * (2 * lf - 1) / np.sqrt((lf * lf - mm) * (lf * lf - nn))
                shift = mn / (lf * (lf - 1)) if el > 1 else 0.0 * mn
                c = np.sqrt(((lf - 1) ** 2 - mm) * ((lf - 1) ** 2 - nn)) / ((lf - 1) * (2 * lf - 1))
            active = l0 < el
            a = np.where(active, a, 0.0)
            c = np.where(l0 < el - 1, c, 0.0)
            nxt = cur * (a * cb - a * shift) - (a * c) * prev
            prev, cur = cur, nxt
        start = l0 == el
        if np.any(start):
            cur = cur + np.where(start, sign, 0.0)
        big = np.abs(cur) > _RESCALE
        if big.any():
            cur[big] /= _RESCALE
            prev[big] /= _RESCALE
            log_factor[big] += _LOG_RESCALE
            factor[big] = np.exp(log_factor[big])
        np.multiply(cur, factor, out=out)
        yield el, out


def wigner_d_slice(lmax: int, beta: float) -> np.ndarray:
    """Table of ``d^el_{mn}(beta)`` for ``el < lmax`` and ``|m|, |n| < lmax``.

    Returns an array of shape ``(lmax, 2*lmax-1, 2*lmax-1)`` indexed as
    ``[el, m + lmax - 1, n + lmax - 1]``; entries with ``max(|m|, |n|) > el`` are zero.
    """
    lmax = check_band_limit(lmax)
    if not (0.0 <= beta <= math.pi):
        raise DomainError(f"beta must lie in [0, pi], got {beta}")
    orders = np.arange(-(lmax - 1), lmax)
    table = np.empty((lmax, orders.size, orders.size))
    for el, d in iter_wigner_d(lmax, beta, orders[:, None], orders[None, :]):
        table[el] = d
    return table


def gauss_legendre(L: int, tol: float = 1e-15, max_iter: int = 100) -> QuadratureRule:
    """``L``-point Gauss-Legendre rule, exact for polynomials in ``cos(theta)`` of degree ``2L-1``.

    Roots of ``P_L`` are found by Newton iteration from Chebyshev-like initial guesses.
    """
    L = check_band_limit(L)
    k = np.arange(1, L + 1)
    x = np.cos(np.pi * (k - 0.25) / (L + 0.5))
    for _ in range(max_iter):
        p_prev, p = np.ones_like(x), x.copy()
        for j in range(2, L + 1):
            p_prev, p = p, ((2 * j - 1) * x * p - (j - 1) * p_prev) / j
        dp = L * (x * p - p_prev) / (x * x - 1.0)
        step = p / dp
        x = x - step
        if np.max(np.abs(step)) < tol:
            break
    # re-evaluate the derivative at the converged roots
    p_prev, p = np.ones_like(x), x.copy()
    for j in range(2, L + 1):
        p_prev, p = p, ((2 * j - 1) * x * p - (j - 1) * p_prev) / j
    dp = L * (x * p - p_prev) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    # x descends with k, so theta = arccos(x) ascends
    return QuadratureRule(np.arccos(x), w)

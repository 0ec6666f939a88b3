"""Diffusion MRI illustration: multi-tensor HARDI phantoms, Radon ODFs and sparsity of their decompositions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.spatial.transform import Rotation

from .core import HarmonicCoeffs
from .errors import DomainError
from .radon import radon_forward
from .ridgelet import build_ridgelets, ridgelet_analysis
from .sht import SphereSignal, grid, sht_forward, sht_inverse
from .wavelet import MultiScaleCoeffs, WaveletParams, build_kernels, wavelet_analysis

__all__ = [
    "FiberConfig",
    "DEFAULT_B",
    "DEFAULT_TENSOR",
    "DIFFUSIVITY_UNIT",
    "crossing_fibers",
    "grid_directions",
    "simulate_hardi",
    "ODF",
    "compute_odf",
    "gini",
    "top_fraction_energy",
    "BandSparsity",
    "SparsityReport",
    "sparsity_compare",
]

DEFAULT_B = 3000.0  # s/mm^2
DEFAULT_TENSOR = np.diag([1700.0, 300.0, 300.0])  # in DIFFUSIVITY_UNIT
# tensors are given in 1e-6 mm^2/s, so b * D is of order one
DIFFUSIVITY_UNIT = 1e-6


@dataclass(frozen=True, eq=False)
class FiberConfig:
    """Weighted diffusion tensors of the fibers crossing one voxel, plus the b-value."""

    weights: np.ndarray
    tensors: np.ndarray
    b: float = DEFAULT_B

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        D = np.asarray(self.tensors, dtype=float).reshape(-1, 3, 3)
        if w.size != D.shape[0]:
            raise DomainError(f"{w.size} weights for {D.shape[0]} tensors")
        if np.any(w <= 0) or abs(w.sum() - 1.0) > 1e-12:
            raise DomainError(f"fiber weights must be positive and sum to one, got {w}")
        for Di in D:
            if not np.allclose(Di, Di.T, rtol=0, atol=1e-9 * np.abs(Di).max()):
                raise DomainError("diffusion tensor is not symmetric")
            if np.linalg.eigvalsh(Di).min() <= 0:
                raise DomainError("diffusion tensor is not positive definite")
        if not self.b > 0:
            raise DomainError(f"b-value must be positive, got {self.b}")
        w.flags.writeable = False
        D.flags.writeable = False
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "tensors", D)
        object.__setattr__(self, "b", float(self.b))

    @classmethod
    def single(cls, tensor, b: float = DEFAULT_B) -> "FiberConfig":
        return cls(np.array([1.0]), np.asarray(tensor, dtype=float)[None], b)

    @property
    def principal_axes(self) -> np.ndarray:
        """Unit eigenvector of the largest eigenvalue of each tensor."""
        return np.array([np.linalg.eigh(D)[1][:, -1] for D in self.tensors])


def crossing_fibers(
    seed: int = 42,
    n_fibers: int = 3,
    b: float = DEFAULT_B,
    tensor=DEFAULT_TENSOR,
    max_tilt_deg: float = 10.0,
) -> FiberConfig:
    """Random crossing-fiber configuration near the coordinate axes.

    Weights are drawn uniformly in [0.25, 0.75] and normalised to sum to one. The
    principal axis of fiber ``i`` starts on coordinate axis ``i mod 3`` and is tilted by
    an angle uniform in ``[0, max_tilt_deg]`` about a random axis perpendicular to it.
    """
    rng = np.random.default_rng(seed)
    tensor = np.asarray(tensor, dtype=float)
    weights = rng.uniform(0.25, 0.75, n_fibers)
    weights = weights / weights.sum()
    # tensor's own principal axis, to be carried onto each coordinate axis
    base_axis = np.linalg.eigh(tensor)[1][:, -1]
    tensors = []
    for i in range(n_fibers):
        target = np.eye(3)[i % 3]
        align = _rotation_between(base_axis, target)
        v = rng.normal(size=3)
        v -= v.dot(target) * target
        v /= np.linalg.norm(v)
        tilt = math.radians(rng.uniform(0.0, max_tilt_deg))
        R = Rotation.from_rotvec(tilt * v).as_matrix() @ align
        tensors.append(R @ tensor @ R.T)
    return FiberConfig(weights, np.array(tensors), b)


def _rotation_between(a, b):
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    axis = np.cross(a, b)
    sin, cos = np.linalg.norm(axis), float(a.dot(b))
    if sin < 1e-12:
        if cos > 0:
            return np.eye(3)
        # half turn about any axis perpendicular to a
        perp = np.eye(3)[np.argmin(np.abs(a))]
        perp -= perp.dot(a) * a
        return Rotation.from_rotvec(math.pi * perp / np.linalg.norm(perp)).as_matrix()
    return Rotation.from_rotvec(axis / sin * math.atan2(sin, cos)).as_matrix()


def grid_directions(L: int) -> np.ndarray:
    """Unit vectors of the sampling grid, shape (L, 2L-1, 3)."""
    theta, phi = grid(L)
    st = np.sin(theta)[:, None]
    return np.stack(
        [st * np.cos(phi)[None, :], st * np.sin(phi)[None, :], np.broadcast_to(np.cos(theta)[:, None], (L, phi.size))],
        axis=-1,
    )


def simulate_hardi(cfg: FiberConfig, L: int) -> SphereSignal:
    """Sample ``S(w) = sum_i p_i exp(-b w^T D_i w)`` on the grid. Real, positive and antipodal."""
    omega = grid_directions(L)
    signal = np.zeros(omega.shape[:2])
    for p, D in zip(cfg.weights, cfg.tensors):
        quad_form = np.einsum("tpi,ij,tpj->tp", omega, D, omega)
        signal += p * np.exp(-cfg.b * DIFFUSIVITY_UNIT * quad_form)
    return SphereSignal(L, 0, signal)


class ODF(NamedTuple):
    raw: SphereSignal
    display: SphereSignal


def compute_odf(hardi: SphereSignal) -> ODF:
    """Orientation distribution function as the Radon transform of the HARDI signal.

    ``display`` is the real part of ``raw`` rescaled to [0, 1] (all zeros for a constant ODF).
    """
    if hardi.s != 0:
        raise DomainError(f"HARDI signals are spin 0, got s={hardi.s}")
    raw = sht_inverse(radon_forward(sht_forward(hardi)))
    vals = raw.samples.real
    span = vals.max() - vals.min()
    # a constant map has only rounding-level variation
    if span <= 1e-12 * max(abs(vals).max(), 1e-300):
        display = np.zeros_like(vals)
    else:
        display = (vals - vals.min()) / span
    return ODF(raw, SphereSignal(hardi.L, 0, display))


def gini(values) -> float:
    """Gini index of ``|values|``: 0 for a flat vector, approaching 1 for a single spike."""
    c = np.sort(np.abs(np.asarray(values)).ravel())
    total = c.sum()
    N = c.size
    if N == 0 or total == 0:
        return 0.0
    k = np.arange(1, N + 1)
    # clamp rounding below zero for near-flat vectors
    return max(0.0, float(1.0 - 2.0 * np.sum(c / total * (N - k + 0.5) / N)))


def top_fraction_energy(values, fraction: float = 0.01) -> float:
    """Share of ``sum |c|^2`` held by the largest ``ceil(fraction * N)`` magnitudes."""
    power = np.sort(np.abs(np.asarray(values)).ravel() ** 2)[::-1]
    total = power.sum()
    if total == 0:
        return 1.0
    k = max(1, math.ceil(fraction * power.size))
    return float(power[:k].sum() / total)


@dataclass(frozen=True)
class BandSparsity:
    """Sparsity summary of one band; ``j`` is None for the scaling band.

    ``degenerate`` marks bands with no energy above rounding level, for which the Gini
    index is reported as 0 and the top-1% share as 1.
    """

    representation: str
    j: int | None
    gini: float
    top_fraction_energy: float
    counts: np.ndarray
    edges: np.ndarray
    degenerate: bool = False


@dataclass(frozen=True)
class SparsityReport:
    bands: tuple
    trivially_sparse: dict

    def get(self, representation: str, j: int | None) -> BandSparsity:
        for b in self.bands:
            if b.representation == representation and b.j == j:
                return b
        raise KeyError((representation, j))

    def rows(self):
        """``(representation, j, gini, top1pct_energy)`` per band, scaling band as j = -1."""
        return [
            (b.representation, -1 if b.j is None else b.j, b.gini, b.top_fraction_energy)
            for b in self.bands
        ]


# bands below this share of the total coefficient energy count as empty
_EMPTY_BAND = 1e-20
N_BINS = 50


def _summaries(name, coeffs: MultiScaleCoeffs, total, edges_for):
    out = []
    labels = [None, *coeffs.params.scales]
    for j, band in zip(labels, coeffs.all_bands()):
        mags = np.abs(band.samples).ravel()
        energy = float(np.sum(mags**2))
        edges = edges_for[j]
        counts, _ = np.histogram(np.clip(mags, edges[0], edges[-1]), bins=edges)
        if total == 0 or energy <= _EMPTY_BAND * total:
            out.append(BandSparsity(name, j, 0.0, 1.0, counts, edges, True))
        else:
            out.append(BandSparsity(name, j, gini(mags), top_fraction_energy(mags), counts, edges))
    return out


def sparsity_compare(hardi: SphereSignal, params: WaveletParams) -> SparsityReport:
    """Compare wavelet and ridgelet decompositions of a HARDI signal band by band.

    Both representations of a band share the same 50 log-spaced histogram bins.
    """
    if hardi.L != params.L:
        raise DomainError(f"band-limit mismatch: signal L={hardi.L}, params L={params.L}")
    flm = sht_forward(hardi)
    wav = wavelet_analysis(flm, build_kernels(params))
    rid = ridgelet_analysis(flm, build_ridgelets(params, 0))

    labels = [None, *params.scales]
    edges_for = {}
    for j, bw, br in zip(labels, wav.all_bands(), rid.all_bands()):
        mags = np.concatenate([np.abs(bw.samples).ravel(), np.abs(br.samples).ravel()])
        hi = mags.max() if mags.max() > 0 else 1.0
        positive = mags[mags > 0]
        lo = max(positive.min() if positive.size else hi * 1e-12, hi * 1e-12)
        if lo >= hi:
            lo = hi * 1e-12
        edges_for[j] = np.logspace(math.log10(lo), math.log10(hi), N_BINS + 1)

    bands, trivial = [], {}
    for name, coeffs in (("wavelet", wav), ("ridgelet", rid)):
        stack = coeffs.stacked()
        total = float(np.sum(np.abs(stack) ** 2))
        detail = float(np.sum(np.abs(stack[1:]) ** 2))
        trivial[name] = total == 0 or detail <= _EMPTY_BAND * total
        bands.extend(_summaries(name, coeffs, total, edges_for))
    return SparsityReport(tuple(bands), trivial)

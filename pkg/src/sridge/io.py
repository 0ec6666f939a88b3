"""Binary coefficient/map files and CSV dumps.

Coefficient file: ``b"SSHC1"``, little-endian ``u32 L``, ``i32 spin``, then ``L**2``
``(re, im)`` float64 pairs in flat ``(l, m)`` order.

Map file: ``b"SMAP1"``, ``u32 L``, ``i32 spin``, then ``L * (2L-1)`` ``(re, im)``
float64 pairs, ring-major (colatitude outer, longitude inner).
"""

from __future__ import annotations

import csv
import os
import struct

import numpy as np

from .core import HarmonicCoeffs, lm_arrays
from .errors import FormatError, SridgeError
from .sht import SphereSignal, grid

__all__ = [
    "COEFF_MAGIC",
    "MAP_MAGIC",
    "write_coeffs",
    "read_coeffs",
    "write_map",
    "read_map",
    "write_coeffs_csv",
    "write_map_csv",
]

COEFF_MAGIC = b"SSHC1"
MAP_MAGIC = b"SMAP1"
_HEADER = struct.Struct("<5sIi")


def _write(path, magic, L, s, values):
    payload = np.ascontiguousarray(values, dtype=np.complex128).view("<f8")
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(magic, L, s))
        fh.write(payload.astype("<f8", copy=False).tobytes())


def _read(path, magic, count_for):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    if len(raw) < _HEADER.size:
        raise FormatError(f"{path}: file too short for header ({len(raw)} bytes)")
    got, L, s = _HEADER.unpack_from(raw)
    if got != magic:
        raise FormatError(f"{path}: bad magic {got!r}, expected {magic!r}")
    if L < 1:
        raise FormatError(f"{path}: invalid band-limit {L}")
    n = count_for(L)
    expected = _HEADER.size + 16 * n
    if len(raw) != expected:
        raise FormatError(f"{path}: size {len(raw)} bytes, expected {expected} for L={L}")
    values = np.frombuffer(raw, dtype="<f8", offset=_HEADER.size).astype(np.float64)
    return L, s, values.view(np.complex128)


def write_coeffs(path: str | os.PathLike, c: HarmonicCoeffs) -> None:
    _write(path, COEFF_MAGIC, c.L, c.s, c.data)


def read_coeffs(path: str | os.PathLike) -> HarmonicCoeffs:
    L, s, values = _read(path, COEFF_MAGIC, lambda L: L * L)
    try:
        return HarmonicCoeffs(L, s, values)
    except SridgeError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def write_map(path: str | os.PathLike, f: SphereSignal) -> None:
    _write(path, MAP_MAGIC, f.L, f.s, f.samples.ravel())


def read_map(path: str | os.PathLike) -> SphereSignal:
    L, s, values = _read(path, MAP_MAGIC, lambda L: L * (2 * L - 1))
    try:
        return SphereSignal(L, s, values.reshape(L, 2 * L - 1))
    except SridgeError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def write_coeffs_csv(path, c: HarmonicCoeffs) -> None:
    el, m = lm_arrays(c.L)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["l", "m", "re", "im"])
        for row in zip(el, m, c.data.real, c.data.imag):
            w.writerow([int(row[0]), int(row[1]), repr(float(row[2])), repr(float(row[3]))])


def write_map_csv(path, f: SphereSignal) -> None:
    theta, phi = grid(f.L)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["theta", "phi", "re", "im"])
        for t, th in enumerate(theta):
            for p, ph in enumerate(phi):
                z = f.samples[t, p]
                w.writerow([repr(float(th)), repr(float(ph)), repr(float(z.real)), repr(float(z.imag))])

"""Round-trip accuracy and timing of the ridgelet transform across band-limits."""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field

import numpy as np

from .core import HarmonicCoeffs, lm_arrays
from .ridgelet import build_ridgelets, ridgelet_analysis, ridgelet_synthesis
from .wavelet import WaveletParams

__all__ = ["BenchRecord", "random_coeffs", "run_benchmark", "loglog_slope", "write_rows", "write_csv", "read_csv"]

CSV_HEADER = ["L", "max_abs_error", "wall_seconds", "trials"]


@dataclass(frozen=True)
class BenchRecord:
    """Mean over trials of the max abs coefficient error and of the round-trip wall time."""

    L: int
    max_abs_error: float
    wall_seconds: float
    trials: int
    # per-trial detail; not part of the CSV row
    errors: tuple = field(default=(), compare=False)
    times: tuple = field(default=(), compare=False)


def random_coeffs(L: int, s: int = 0, rng=None, antipodal: bool = True) -> HarmonicCoeffs:
    """Real and imaginary parts uniform in [-1, 1]; ``l + s`` odd zeroed when ``antipodal``."""
    rng = np.random.default_rng(rng)
    data = rng.uniform(-1.0, 1.0, L * L) + 1j * rng.uniform(-1.0, 1.0, L * L)
    if antipodal:
        el, _ = lm_arrays(L)
        data[(el + s) % 2 == 1] = 0.0
    return HarmonicCoeffs(L, s, data)


def run_benchmark(
    band_limits,
    trials: int = 10,
    seed: int = 0,
    alpha: float = 2.0,
    J0: int = 0,
    s: int = 0,
    progress=None,
) -> list[BenchRecord]:
    """Forward then inverse ridgelet transform of ``trials`` random antipodal signals per band-limit.

    Only the two transforms are timed; kernel construction happens before the clock starts.
    """
    rng = np.random.default_rng(seed)
    records = []
    for L in band_limits:
        rb = build_ridgelets(WaveletParams(L, alpha, J0), s)
        errors, times = [], []
        for _ in range(trials):
            f = random_coeffs(L, s, rng)
            t0 = time.perf_counter()
            g = ridgelet_analysis(f, rb)
            back = ridgelet_synthesis(g, rb, s)
            times.append(time.perf_counter() - t0)
            errors.append(float(np.max(np.abs(back.data - f.data))))
        rec = BenchRecord(L, float(np.mean(errors)), float(np.mean(times)), trials, tuple(errors), tuple(times))
        records.append(rec)
        if progress is not None:
            progress(rec)
    return records


def loglog_slope(x, y) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    lx, ly = np.log(np.asarray(x, dtype=float)), np.log(np.asarray(y, dtype=float))
    return float(np.polyfit(lx, ly, 1)[0])


def write_rows(fh, records) -> None:
    """Write the CSV header and one row per record to an open text stream."""
    w = csv.writer(fh)
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow([r.L, repr(r.max_abs_error), repr(r.wall_seconds), r.trials])


def write_csv(path, records) -> None:
    with open(path, "w", newline="") as fh:
        write_rows(fh, records)


def read_csv(path) -> list[BenchRecord]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != CSV_HEADER:
            raise ValueError(f"unexpected benchmark header {header}")
        return [BenchRecord(int(L), float(e), float(t), int(n)) for L, e, t, n in reader]

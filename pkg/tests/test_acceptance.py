"""Acceptance criteria 1-11, each run at its stated tolerance.

Every test prints one ``PASS``/``FAIL`` line; the lines are also collected and repeated
in the pytest terminal summary. Run directly (``python tests/test_acceptance.py``) to
get just the eleven lines.
"""

import math
import time

import numpy as np
import pytest
from scipy.special import sph_harm_y

from sridge.bench import loglog_slope, run_benchmark
from sridge.core import EulerAngles, HarmonicCoeffs, legendre_origin, lm_arrays
from sridge.hardi import crossing_fibers, simulate_hardi, sparsity_compare
from sridge.radon import radon_eigenvalues, radon_forward
from sridge.ridgelet import build_ridgelets, ridgelet_map
from sridge.sht import rotate_coeffs
from sridge.wavelet import WaveletParams, admissibility, build_kernels, wavelet_analysis, wavelet_synthesis

from conftest import random_coeffs
from test_core import legendre_zero_recurrence
from test_radon import equatorial_eigenvalue, great_circle_integral

RESULTS: dict[int, str] = {}

SWEEP = (32, 64, 128, 256)
TIMING_TRIALS = {64: 10, 128: 6, 256: 3, 512: 2}


def report(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def sweep():
    t0 = time.perf_counter()
    records = run_benchmark(SWEEP, trials=10, seed=2024)
    return records, time.perf_counter() - t0


def test_criterion_01_ridgelet_round_trip(sweep):
    records, elapsed = sweep
    err = {r.L: max(r.errors) for r in records}
    ok = err[32] < 1e-11 and err[256] < 1e-8 and elapsed < 600
    report(1, ok, f"worst error L=32 {err[32]:.2e} (<1e-11), L=256 {err[256]:.2e} (<1e-8), sweep {elapsed:.1f}s (<600s)")


def test_criterion_02_error_scaling(sweep):
    records, _ = sweep
    slope = loglog_slope([r.L for r in records], [r.max_abs_error for r in records])
    report(2, 1.0 <= slope <= 3.0, f"error log-log slope {slope:.3f} over L={list(SWEEP)} (in [1, 3])")


def test_criterion_03_time_scaling():
    Ls, times = [], []
    for L, trials in TIMING_TRIALS.items():
        rec = run_benchmark([L], trials=trials, seed=L)[0]
        Ls.append(L)
        times.append(rec.wall_seconds)
    slope = loglog_slope(Ls, times)
    detail = ", ".join(f"L={L}: {t:.3f}s" for L, t in zip(Ls, times))
    report(3, 2.0 <= slope <= 4.0, f"time log-log slope {slope:.3f} (in [2, 4]); {detail}")


def test_criterion_04_radon_eigenstructure():
    L = 64
    exact = True
    for s in (0, 1, 2):
        lam = radon_eigenvalues(L, s).values
        el, m = lm_arrays(L)
        for i in range(s * s, L * L):
            g = radon_forward(HarmonicCoeffs.delta(L, int(el[i]), int(m[i]), s))
            expected = np.zeros(L * L, dtype=complex)
            expected[i] = lam[el[i]]
            exact &= bool(np.array_equal(g.data, expected))
    worst = 0.0
    rng = np.random.default_rng(4)
    lam0 = radon_eigenvalues(9, 0).values
    for el_ in range(9):
        for m_ in range(-el_, el_ + 1):
            p = rng.normal(size=3)
            p /= np.linalg.norm(p)
            th, ph = math.acos(p[2]), math.atan2(p[1], p[0])
            direct = great_circle_integral(lambda t, f: sph_harm_y(el_, m_, t, f), p)
            worst = max(worst, abs(direct - lam0[el_] * sph_harm_y(el_, m_, th, ph)))
    for s in (1, 2):
        lam = radon_eigenvalues(9, s).values
        for el_ in range(s, 9):
            worst = max(worst, abs(lam[el_] - equatorial_eigenvalue(el_, s)))
    report(4, exact and worst < 1e-6, f"basis images exact: {exact}; worst oracle deviation {worst:.1e} (<1e-6)")


def test_criterion_05_parity_law():
    L = 64
    zeros_exact, annihilated = True, True
    rng = np.random.default_rng(5)
    for s in (-2, -1, 0, 1, 2):
        lam = radon_eigenvalues(L, s).values
        el = np.arange(L)
        zeros_exact &= bool(np.all(lam[(el + s) % 2 == 1] == 0.0))
        c = random_coeffs(rng, L, s)
        fl, _ = lm_arrays(L)
        odd = c.with_data(np.where((fl + s) % 2 == 1, c.data, 0))
        annihilated &= bool(np.all(radon_forward(odd).data == 0))
    report(5, zeros_exact and annihilated, f"odd eigenvalues exactly zero: {zeros_exact}; odd input annihilated: {annihilated}")


def test_criterion_06_shift_invariance():
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(20):
        f = random_coeffs(rng, 32)
        r = EulerAngles(*rng.uniform(0, [2 * math.pi, math.pi, 2 * math.pi]))
        diff = radon_forward(rotate_coeffs(f, r)).data - rotate_coeffs(radon_forward(f), r).data
        worst = max(worst, float(np.max(np.abs(diff))))
    report(6, worst < 1e-10, f"20 random pairs at L=32, worst commutator {worst:.1e} (<1e-10)")


def test_criterion_07_admissibility():
    worst = 0.0
    for alpha in (2.0, 3.0):
        for J0 in (0, 2):
            for L in (32, 128):
                bank = build_kernels(WaveletParams(L, alpha, J0))
                worst = max(worst, float(np.max(np.abs(admissibility(bank) - 1))))
    report(7, worst < 1e-12, f"worst tiling deviation {worst:.1e} (<1e-12)")


def test_criterion_08_wavelet_round_trip():
    rng = np.random.default_rng(8)
    bank = build_kernels(WaveletParams(128, 2.0))
    errs = {}
    for s in (0, 2):
        f = random_coeffs(rng, 128, s)
        back = wavelet_synthesis(wavelet_analysis(f, bank), bank, s)
        errs[s] = float(np.max(np.abs(back.data - f.data)))
    report(8, max(errs.values()) < 1e-10, f"L=128 error s=0 {errs[0]:.1e}, s=2 {errs[2]:.1e} (<1e-10)")


def test_criterion_09_legendre_origin():
    worst = 0.0
    zeros_ok = True
    for el in range(65):
        for m in range(el + 1):
            ref = legendre_zero_recurrence(el, m)
            got = legendre_origin(el, m)
            if ref == 0:
                zeros_ok &= got == 0
            else:
                worst = max(worst, abs(got - ref) / abs(ref))
    p = legendre_origin(4096, 0)
    ok = zeros_ok and worst < 1e-12 and 1e-3 <= abs(p) <= 1e-1
    report(9, ok, f"worst relative error l<=64 {worst:.1e} (<1e-12); P_4096(0) = {p:.4e}")


def test_criterion_10_hardi_sparsity():
    L = 128
    params = WaveletParams(L, 2.0)
    wins = 0
    seed42 = None
    for seed in range(42, 52):
        rep = sparsity_compare(simulate_hardi(crossing_fibers(seed), L), params)
        r, w = rep.get("ridgelet", 4), rep.get("wavelet", 4)
        won = r.gini > w.gini and r.top_fraction_energy > w.top_fraction_energy
        wins += won
        if seed == 42:
            seed42 = (won, r.gini, w.gini, r.top_fraction_energy, w.top_fraction_energy)
    ok = seed42[0] and wins >= 9
    report(
        10,
        ok,
        f"seed 42 gini {seed42[1]:.4f} vs {seed42[2]:.4f}, top-1% {seed42[3]:.4f} vs {seed42[4]:.4f}; "
        f"sign test {wins}/10 (>=9)",
    )


def test_criterion_11_ridgelet_geometry():
    L = 64
    rb = build_ridgelets(WaveletParams(L, 2.0))
    worst_phi = worst_anti = 0.0
    for j in (None, *rb.params.scales):
        f = ridgelet_map(rb, j).samples
        worst_phi = max(worst_phi, float(np.max(np.abs(f - f[:, :1]))))
        # rings t and L-1-t are mirror images; with no phi dependence this is the antipode
        worst_anti = max(worst_anti, float(np.max(np.abs(f - f[::-1]))))
    ok = worst_phi < 1e-10 and worst_anti < 1e-10
    report(11, ok, f"phi variation {worst_phi:.1e}, antipodal mismatch {worst_anti:.1e} (<1e-10)")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))

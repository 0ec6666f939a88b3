"""Shared fixtures and independent oracles for the test-suite.

The oracles here deliberately avoid the package's own recursions: Wigner d-functions
come from the explicit factorial sum and scalar harmonics from scipy.
"""

import math

import numpy as np
import pytest
from scipy.special import sph_harm_y

from sridge.core import HarmonicCoeffs, lm_arrays


@pytest.fixture
def rng():
    return np.random.default_rng(20240613)


def wigner_d_explicit(el, m, n, beta):
    """Wigner d^l_{mn}(beta) from the explicit finite sum (fine for l <~ 20)."""
    f = math.factorial
    pref = math.sqrt(f(el + m) * f(el - m) * f(el + n) * f(el - n))
    c, s = math.cos(beta / 2), math.sin(beta / 2)
    total = 0.0
    for k in range(max(0, n - m), min(el + n, el - m) + 1):
        num = (-1) ** (m - n + k) * c ** (2 * el + n - m - 2 * k) * s ** (m - n + 2 * k)
        total += num / (f(el + n - k) * f(k) * f(m - n + k) * f(el - m - k))
    return pref * total


def spin_harmonic(el, m, s, theta, phi):
    """sY_lm(theta, phi) = (-1)^s sqrt((2l+1)/4pi) d^l_{m,-s}(theta) e^{i m phi}."""
    theta = np.asarray(theta, dtype=float)
    d = np.vectorize(lambda t: wigner_d_explicit(el, m, -s, t))(theta)
    return (-1) ** s * math.sqrt((2 * el + 1) / (4 * math.pi)) * d * np.exp(1j * m * np.asarray(phi))


def evaluate_scalar(c: HarmonicCoeffs, theta, phi):
    """Evaluate a spin-0 expansion at arbitrary points with scipy harmonics."""
    el, m = lm_arrays(c.L)
    out = np.zeros(np.broadcast(theta, phi).shape, dtype=complex)
    for e, mm, v in zip(el, m, c.data):
        if v != 0:
            out += v * sph_harm_y(e, mm, theta, phi)
    return out


def random_coeffs(rng, L, s=0, antipodal=False):
    data = rng.uniform(-1, 1, L * L) + 1j * rng.uniform(-1, 1, L * L)
    if antipodal:
        el, _ = lm_arrays(L)
        data[(el + s) % 2 == 1] = 0
    return HarmonicCoeffs(L, s, data)


def real_signal_coeffs(rng, L):
    """Random coefficients obeying c_{l,-m} = (-1)^m conj(c_lm)."""
    el, m = lm_arrays(L)
    data = rng.normal(size=L * L) + 1j * rng.normal(size=L * L)
    idx = el * (el + 1)
    data[m == 0] = data[m == 0].real
    neg = m < 0
    data[neg] = (-1.0) ** m[neg] * np.conj(data[idx[neg] - m[neg]])
    return HarmonicCoeffs(L, 0, data)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
